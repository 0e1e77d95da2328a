#pragma once

#include <stdexcept>
#include <string>

namespace stab {

// Input that cannot be parsed, or an argument outside the documented domain.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource limit was exceeded (search-node budget, product
// vertex cap).  This is never a wrong answer: the caller either raises the
// limit and retries, or reports "could not decide".
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stab
