#pragma once

#include <string>

#include "json.hpp"
#include "stab/config.hpp"
#include "stab/harness.hpp"
#include "stab/permgroup.hpp"
#include "stab/product.hpp"
#include "stab/stability.hpp"

namespace stab {

// Insertion-ordered JSON keeps output layout fixed across runs; exact big
// integers travel as decimal strings.
using Json = nlohmann::ordered_json;

Json config_to_json(const RunConfig& cfg);
Json perm_to_json(const Perm& p);  // image array
Json group_to_json(const PermGroup& g);
Json orders_to_json(const OrderTriple& o);
Json two_fold_to_json(const TwoFoldAutomorphism& t);
Json sigma_to_json(const SigmaAutomorphism& s);
Json coprimality_to_json(const CoprimalityAnswer& a);
Json verdict_to_json(const StabilityVerdict& v);
Json check_to_json(const CheckResult& r);
Json scan_report_to_json(const ScanReport& r);
Json law_report_to_json(const LawSweepReport& r);

std::string scan_report_to_csv(const ScanReport& r);
std::string verdict_to_text(const StabilityVerdict& v);
std::string scan_report_to_text(const ScanReport& r);
std::string law_report_to_text(const LawSweepReport& r);

// "key,value" rows for objects without a natural table shape.
std::string json_to_csv_flat(const Json& j);

}  // namespace stab
