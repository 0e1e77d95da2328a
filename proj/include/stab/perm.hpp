#pragma once

#include <random>
#include <string>
#include <vector>

#include "stab/graph.hpp"

namespace stab {

// Permutation of {0..n-1} stored in one-line notation (image vector).
class Perm {
public:
    explicit Perm(int n);                    // identity
    explicit Perm(std::vector<int> image);   // validates bijection

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int v) const { return img_[v]; }
    const std::vector<int>& image() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;

    bool operator==(const Perm& other) const = default;

    // "0->2, 1->0, 2->1"
    std::string one_line() const;

private:
    std::vector<int> img_;
};

// Apply p first, then q: x -> q(p(x)).
Perm compose(const Perm& p, const Perm& q);

bool is_automorphism(const Graph& g, const Perm& p);

Perm random_perm(int n, std::mt19937_64& rng);

}  // namespace stab
