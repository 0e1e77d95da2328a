#include "stab/config.hpp"

#include "stab/error.hpp"

namespace stab {

void RunConfig::validate() const {
    if (node_budget == 0) throw parse_error("node budget must be positive");
    if (vertex_cap < 1) throw parse_error("vertex cap must be positive");
    if (coprime_bound < 1) throw parse_error("coprime bound must be positive");
    if (cofactor_cap < 1) throw parse_error("cofactor cap must be positive");
    if (format != "json" && format != "csv" && format != "text")
        throw parse_error("format must be one of json, csv, text (got '" + format + "')");
    if (jobs < 1) throw parse_error("jobs must be positive");
}

}  // namespace stab
