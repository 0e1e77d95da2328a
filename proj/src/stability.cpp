#include "stab/stability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stab/autgroup.hpp"
#include "stab/enumerate.hpp"
#include "stab/error.hpp"
#include "stab/graph_io.hpp"
#include "stab/product.hpp"

namespace stab {

std::string verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::kStable: return "stable";
        case VerdictKind::kTriviallyUnstable: return "trivially-unstable";
        case VerdictKind::kNontriviallyUnstable: return "nontrivially-unstable";
        case VerdictKind::kUnstableUnclassified: return "unstable-unclassified";
    }
    return "?";
}

std::string hypothesis_name(Hypothesis h) {
    switch (h) {
        case Hypothesis::kGammaDisconnected: return "gamma-disconnected";
        case Hypothesis::kSigmaDisconnected: return "sigma-disconnected";
        case Hypothesis::kGammaThick: return "gamma-has-duplicate-neighbourhoods";
        case Hypothesis::kSigmaThick: return "sigma-has-duplicate-neighbourhoods";
        case Hypothesis::kBothBipartite: return "both-factors-bipartite";
        case Hypothesis::kNotCoprime: return "factors-share-a-common-factor";
    }
    return "?";
}

std::string coprimality_status_name(CoprimalityAnswer::Status s) {
    switch (s) {
        case CoprimalityAnswer::Status::kCoprime: return "coprime";
        case CoprimalityAnswer::Status::kNotCoprime: return "not-coprime";
        case CoprimalityAnswer::Status::kUnknown: return "unknown";
    }
    return "?";
}

bool is_two_fold(const Graph& g, const TwoFoldAutomorphism& t) {
    int n = g.order();
    if (t.alpha.degree() != n || t.beta.degree() != n) return false;
    // The ordered-pair map (u,v) -> (alpha(u), beta(v)) is a bijection of
    // V x V, so preserving adjacency one way forces the biconditional.
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbours(u))
            if (!g.adjacent(t.alpha(u), t.beta(v))) return false;
    return true;
}

bool SigmaAutomorphism::non_diagonal() const {
    std::vector<char> is_pinned(entries.size(), 0);
    for (int i : pinned) is_pinned[i] = 1;
    const Perm* first = nullptr;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (is_pinned[i]) continue;
        if (!first) {
            first = &entries[i];
        } else if (!(entries[i] == *first)) {
            return true;
        }
    }
    return false;
}

bool is_sigma_automorphism(const Graph& gamma, const Graph& sigma, const SigmaAutomorphism& s) {
    if (static_cast<int>(s.entries.size()) != sigma.order()) return false;
    for (const Perm& p : s.entries)
        if (p.degree() != gamma.order()) return false;
    for (int i = 0; i < sigma.order(); ++i)
        for (int j : sigma.neighbours(i)) {
            if (i > j) continue;
            if (!is_two_fold(gamma, TwoFoldAutomorphism{s.entries[i], s.entries[j]})) return false;
        }
    return true;
}

// ---- order comparison -----------------------------------------------------

std::pair<bool, OrderTriple> is_stable_pair(const Graph& gamma, const Graph& sigma,
                                            const RunConfig& cfg) {
    SearchLimits limits = limits_from(cfg);
    OrderTriple orders;
    orders.gamma = aut_order(gamma, limits);
    orders.sigma = aut_order(sigma, limits);
    ProductGraph prod = direct_product(gamma, sigma, cfg.vertex_cap);
    orders.product = aut_order(prod.graph, limits);
    if (orders.product < orders.gamma * orders.sigma)
        throw std::logic_error("internal: product group smaller than the embedded factor groups");
    bool stable = (orders.product == orders.gamma * orders.sigma);
    return {stable, orders};
}

std::pair<bool, OrderTriple> is_stable_graph(const Graph& gamma, const RunConfig& cfg) {
    return is_stable_pair(gamma, k2(), cfg);
}

// ---- witness searches -----------------------------------------------------

std::optional<TwoFoldAutomorphism> find_two_fold(const Graph& gamma, const RunConfig& cfg) {
    ProductGraph cover = canonical_double_cover(gamma, cfg.vertex_cap);
    PermGroup group = automorphism_group(cover.graph, fiber_coloring(cover), limits_from(cfg));
    int n = gamma.order();
    for (const Perm& gen : group.generators()) {
        std::vector<int> a(n), b(n);
        for (int u = 0; u < n; ++u) {
            int ia = gen(2 * u), ib = gen(2 * u + 1);
            if (ia % 2 != 0 || ib % 2 != 1)
                throw std::logic_error("internal: fibre colouring not preserved");
            a[u] = ia / 2;
            b[u] = ib / 2;
        }
        TwoFoldAutomorphism t{Perm(std::move(a)), Perm(std::move(b))};
        if (!t.nontrivial()) continue;
        if (!is_two_fold(gamma, t))
            throw std::logic_error("internal: double-cover generator is not a two-fold pair");
        return t;
    }
    return std::nullopt;
}

namespace {

// Core of the sigma-family search, for sigma without isolated vertices.
std::optional<SigmaAutomorphism> find_sigma_core(const Graph& gamma, const Graph& sigma,
                                                 const RunConfig& cfg) {
    ProductGraph prod = direct_product(gamma, sigma, cfg.vertex_cap);
    PermGroup group = automorphism_group(prod.graph, fiber_coloring(prod), limits_from(cfg));
    int n = gamma.order();
    int m = sigma.order();
    for (const Perm& gen : group.generators()) {
        std::vector<std::vector<int>> images(m, std::vector<int>(n));
        for (int u = 0; u < n; ++u)
            for (int i = 0; i < m; ++i) {
                int idx = gen(u * m + i);
                if (idx % m != i) throw std::logic_error("internal: fibre colouring not preserved");
                images[i][u] = idx / m;
            }
        SigmaAutomorphism s;
        for (int i = 0; i < m; ++i) s.entries.emplace_back(std::move(images[i]));
        if (!s.non_diagonal()) continue;
        if (!is_sigma_automorphism(gamma, sigma, s))
            throw std::logic_error("internal: product generator is not a sigma-indexed family");
        return s;
    }
    return std::nullopt;
}

}  // namespace

std::optional<SigmaAutomorphism> find_sigma_automorphism(const Graph& gamma, const Graph& sigma,
                                                         const RunConfig& cfg) {
    std::vector<int> isolated, kept;
    for (int i = 0; i < sigma.order(); ++i)
        (sigma.degree(i) == 0 ? isolated : kept).push_back(i);
    if (kept.empty()) return std::nullopt;  // no constrained entries at all

    if (isolated.empty()) return find_sigma_core(gamma, sigma, cfg);

    auto core = find_sigma_core(gamma, induced_subgraph(sigma, kept), cfg);
    if (!core) return std::nullopt;
    SigmaAutomorphism s;
    s.entries.assign(sigma.order(), Perm(gamma.order()));
    for (std::size_t j = 0; j < kept.size(); ++j) s.entries[kept[j]] = core->entries[j];
    s.pinned = isolated;
    if (!is_sigma_automorphism(gamma, sigma, s))
        throw std::logic_error("internal: pinned expansion broke the family");
    return s;
}

// ---- coprimality ----------------------------------------------------------

namespace {

std::vector<int> degree_multiset(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

// Sorted degree multiset a product with `delta` must hit to match `target`.
bool product_degrees_match(const Graph& cof, const Graph& delta, const std::vector<int>& target) {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(cof.order()) * delta.order());
    for (int u = 0; u < cof.order(); ++u)
        for (int x = 0; x < delta.order(); ++x) d.push_back(cof.degree(u) * delta.degree(x));
    std::sort(d.begin(), d.end());
    return d == target;
}

// Searches for a cofactor C with C x delta isomorphic to target.  Returns
// nullopt when none exists; sets `truncated` instead of guessing when the
// cofactor order is beyond the enumeration cap.
std::optional<Graph> find_cofactor(const Graph& target, const std::string& target_canon,
                                   const Graph& delta, const RunConfig& cfg, bool& truncated) {
    int cof_order = target.order() / delta.order();
    if (cof_order > cfg.cofactor_cap || cof_order > 8) {
        truncated = true;
        return std::nullopt;
    }
    std::vector<int> target_degrees = degree_multiset(target);
    SearchLimits limits = limits_from(cfg);
    for (const Graph& cand : all_graphs(cof_order)) {
        if (!product_degrees_match(cand, delta, target_degrees)) continue;
        ProductGraph p = direct_product(cand, delta, cfg.vertex_cap);
        if (emit_graph6_canonical(p.graph, limits) == target_canon) return cand;
    }
    return std::nullopt;
}

// Does delta divide target?  Every graph counts as a factor of itself (with
// an empty cofactor in the result); otherwise a genuine cofactor is needed.
struct SideDivision {
    bool divides = false;
    std::optional<Graph> cofactor;  // absent when target is the factor itself
};

SideDivision divide_side(const Graph& target, const std::string& target_canon, const Graph& delta,
                         const RunConfig& cfg, bool& truncated) {
    SideDivision out;
    if (target.order() == delta.order() &&
        emit_graph6_canonical(delta, limits_from(cfg)) == target_canon) {
        out.divides = true;
        return out;
    }
    if (auto cof = find_cofactor(target, target_canon, delta, cfg, truncated)) {
        out.divides = true;
        out.cofactor = std::move(*cof);
    }
    return out;
}

}  // namespace

CoprimalityAnswer coprimality(const Graph& gamma, const Graph& sigma, const RunConfig& cfg) {
    CoprimalityAnswer ans;
    int g = std::gcd(gamma.order(), sigma.order());
    if (g == 1) {
        ans.status = CoprimalityAnswer::Status::kCoprime;
        ans.reason = "orders " + std::to_string(gamma.order()) + " and " +
                     std::to_string(sigma.order()) + " are coprime";
        return ans;
    }
    auto vg = valency(gamma), vs = valency(sigma);
    if (vg && vs && std::gcd(*vg, *vs) == 1 && (!is_bipartite(gamma) || !is_bipartite(sigma))) {
        ans.status = CoprimalityAnswer::Status::kCoprime;
        ans.reason = "regular factors with coprime valencies and a non-bipartite factor";
        return ans;
    }

    SearchLimits limits = limits_from(cfg);
    std::string gamma_canon = emit_graph6_canonical(gamma, limits);
    std::string sigma_canon = emit_graph6_canonical(sigma, limits);

    // Isomorphic graphs of order >= 2 always share themselves as a factor,
    // no matter how large they are.
    if (gamma.order() >= 2 && gamma_canon == sigma_canon) {
        ans.status = CoprimalityAnswer::Status::kNotCoprime;
        ans.reason = "the graphs are isomorphic, hence share themselves as a factor";
        ans.common_factor = gamma;
        return ans;
    }

    bool truncated = false;
    for (int d = 2; d <= g; ++d) {
        if (g % d != 0) continue;
        if (d > cfg.coprime_bound || d > 8) {
            truncated = true;
            continue;
        }
        for (const Graph& delta : all_graphs(d)) {
            bool trunc_here = false;
            SideDivision gdiv = divide_side(gamma, gamma_canon, delta, cfg, trunc_here);
            if (!gdiv.divides) {
                truncated = truncated || trunc_here;
                continue;
            }
            SideDivision sdiv = divide_side(sigma, sigma_canon, delta, cfg, trunc_here);
            if (!sdiv.divides) {
                truncated = truncated || trunc_here;
                continue;
            }
            ans.status = CoprimalityAnswer::Status::kNotCoprime;
            ans.reason = "common factor of order " + std::to_string(d) + " found";
            ans.common_factor = delta;
            ans.gamma_cofactor = std::move(gdiv.cofactor);
            ans.sigma_cofactor = std::move(sdiv.cofactor);
            return ans;
        }
    }
    if (truncated) {
        ans.status = CoprimalityAnswer::Status::kUnknown;
        ans.reason = "search truncated at factor bound " + std::to_string(cfg.coprime_bound) +
                     " / cofactor cap " + std::to_string(cfg.cofactor_cap);
    } else {
        ans.status = CoprimalityAnswer::Status::kCoprime;
        ans.reason = "every candidate common factor up to order " + std::to_string(g) +
                     " was excluded";
    }
    return ans;
}

// ---- classification -------------------------------------------------------

StabilityVerdict classify_pair(const Graph& gamma, const Graph& sigma, const RunConfig& cfg) {
    StabilityVerdict v;
    auto [stable, orders] = is_stable_pair(gamma, sigma, cfg);
    v.orders = std::move(orders);
    if (stable) {
        v.kind = VerdictKind::kStable;
        return v;
    }

    if (!is_connected(gamma)) v.violations.push_back(Hypothesis::kGammaDisconnected);
    if (!is_connected(sigma)) v.violations.push_back(Hypothesis::kSigmaDisconnected);
    if (!is_r_thin(gamma)) v.violations.push_back(Hypothesis::kGammaThick);
    if (!is_r_thin(sigma)) v.violations.push_back(Hypothesis::kSigmaThick);
    if (is_bipartite(gamma) && is_bipartite(sigma))
        v.violations.push_back(Hypothesis::kBothBipartite);

    v.coprimality = coprimality(gamma, sigma, cfg);
    if (v.coprimality->status == CoprimalityAnswer::Status::kNotCoprime)
        v.violations.push_back(Hypothesis::kNotCoprime);

    if (!v.violations.empty()) {
        v.kind = VerdictKind::kTriviallyUnstable;
        return v;
    }
    if (v.coprimality->status == CoprimalityAnswer::Status::kUnknown) {
        v.kind = VerdictKind::kUnstableUnclassified;
        return v;
    }
    v.kind = VerdictKind::kNontriviallyUnstable;
    v.witness = find_sigma_automorphism(gamma, sigma, cfg);
    return v;
}

StabilityVerdict classify_graph(const Graph& gamma, const RunConfig& cfg) {
    return classify_pair(gamma, k2(), cfg);
}

// ---- two-fold closure and transfer ----------------------------------------

namespace {

void require_two_fold(const Graph& g, const TwoFoldAutomorphism& t, const char* who) {
    if (!is_two_fold(g, t))
        throw parse_error(std::string(who) + ": input is not a two-fold automorphism pair");
}

}  // namespace

TwoFoldAutomorphism two_fold_swap(const Graph& g, const TwoFoldAutomorphism& t) {
    require_two_fold(g, t, "two_fold_swap");
    TwoFoldAutomorphism out{t.beta, t.alpha};
    if (!is_two_fold(g, out)) throw std::logic_error("internal: swapped pair failed to verify");
    return out;
}

TwoFoldAutomorphism two_fold_inverse(const Graph& g, const TwoFoldAutomorphism& t) {
    require_two_fold(g, t, "two_fold_inverse");
    TwoFoldAutomorphism out{t.alpha.inverse(), t.beta.inverse()};
    if (!is_two_fold(g, out)) throw std::logic_error("internal: inverse pair failed to verify");
    return out;
}

TwoFoldAutomorphism two_fold_compose(const Graph& g, const TwoFoldAutomorphism& a,
                                     const TwoFoldAutomorphism& b) {
    require_two_fold(g, a, "two_fold_compose");
    require_two_fold(g, b, "two_fold_compose");
    TwoFoldAutomorphism out{compose(a.alpha, b.alpha), compose(a.beta, b.beta)};
    if (!is_two_fold(g, out)) throw std::logic_error("internal: composed pair failed to verify");
    return out;
}

SigmaAutomorphism lift_two_fold_to_sigma(const Graph& gamma, const TwoFoldAutomorphism& t,
                                         const Graph& sigma) {
    require_two_fold(gamma, t, "lift_two_fold_to_sigma");
    auto bp = bipartition(sigma);
    if (!bp) throw parse_error("lift_two_fold_to_sigma: sigma is not bipartite");
    SigmaAutomorphism s;
    for (int i = 0; i < sigma.order(); ++i)
        s.entries.push_back(bp->side[i] == 0 ? t.alpha : t.beta);
    if (!is_sigma_automorphism(gamma, sigma, s))
        throw std::logic_error("internal: lifted family failed to verify");
    return s;
}

TwoFoldAutomorphism extract_two_fold_from_sigma(const Graph& gamma, const Graph& sigma,
                                                const SigmaAutomorphism& s, int i, int j) {
    if (i < 0 || i >= sigma.order() || j < 0 || j >= sigma.order() || !sigma.adjacent(i, j))
        throw parse_error("extract_two_fold_from_sigma: {i,j} is not a sigma-edge");
    if (!is_sigma_automorphism(gamma, sigma, s))
        throw parse_error("extract_two_fold_from_sigma: input family is invalid");
    TwoFoldAutomorphism t{s.entries[i], s.entries[j]};
    if (!is_two_fold(gamma, t)) throw std::logic_error("internal: extracted pair failed to verify");
    return t;
}

}  // namespace stab
