#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stab/config.hpp"
#include "stab/graph.hpp"
#include "stab/perm.hpp"

namespace stab {

// Pair of vertex maps (alpha, beta) with {u,v} an edge iff {alpha(u), beta(v)}
// is an edge; "nontrivial" means alpha != beta.
struct TwoFoldAutomorphism {
    Perm alpha;
    Perm beta;

    bool nontrivial() const { return !(alpha == beta); }
};

bool is_two_fold(const Graph& g, const TwoFoldAutomorphism& t);

// One vertex map of gamma per vertex of sigma, compatible along every
// sigma-edge: for {i,j} in E(sigma), {u,v} in E(gamma) iff
// {entries[i](u), entries[j](v)} in E(gamma).  Entries at `pinned` indices
// (isolated sigma-vertices) are unconstrained, held at the identity by
// convention, and never count toward non-diagonality.
struct SigmaAutomorphism {
    std::vector<Perm> entries;
    std::vector<int> pinned;

    bool non_diagonal() const;
};

bool is_sigma_automorphism(const Graph& gamma, const Graph& sigma, const SigmaAutomorphism& s);

struct OrderTriple {
    mpz_class gamma, sigma, product;
};

enum class VerdictKind {
    kStable,
    kTriviallyUnstable,
    kNontriviallyUnstable,
    kUnstableUnclassified,
};

enum class Hypothesis {
    kGammaDisconnected,
    kSigmaDisconnected,
    kGammaThick,
    kSigmaThick,
    kBothBipartite,
    kNotCoprime,
};

std::string verdict_kind_name(VerdictKind k);
std::string hypothesis_name(Hypothesis h);

struct CoprimalityAnswer {
    enum class Status { kCoprime, kNotCoprime, kUnknown };

    Status status;
    std::string reason;
    // For kNotCoprime: a common factor of order >= 2.  A cofactor is absent
    // exactly when that side is isomorphic to the common factor itself.
    std::optional<Graph> common_factor, gamma_cofactor, sigma_cofactor;
};

std::string coprimality_status_name(CoprimalityAnswer::Status s);

struct StabilityVerdict {
    VerdictKind kind;
    OrderTriple orders;
    std::vector<Hypothesis> violations;  // nonempty iff trivially unstable
    std::optional<CoprimalityAnswer> coprimality;
    std::optional<SigmaAutomorphism> witness;  // non-diagonal, when one was found
};

// A pair is stable when the factor automorphism groups account for the whole
// product group; decided by exact order comparison (the coordinatewise
// embedding is always injective, which is asserted as a sanity check).
std::pair<bool, OrderTriple> is_stable_pair(const Graph& gamma, const Graph& sigma,
                                            const RunConfig& cfg = {});
// Single-graph stability is the pair (gamma, K_2), i.e. the bipartite double.
std::pair<bool, OrderTriple> is_stable_graph(const Graph& gamma, const RunConfig& cfg = {});

// A nontrivial two-fold automorphism of gamma, if any: searched through the
// fibre-preserving automorphisms of the bipartite double, whose group is
// exactly the group of two-fold automorphisms.
std::optional<TwoFoldAutomorphism> find_two_fold(const Graph& gamma, const RunConfig& cfg = {});

// A non-diagonal sigma-indexed family, if any: searched through the
// fibre-preserving automorphisms of the product, whose group is exactly the
// group of such families (isolated sigma-vertices handled by pinning).
std::optional<SigmaAutomorphism> find_sigma_automorphism(const Graph& gamma, const Graph& sigma,
                                                         const RunConfig& cfg = {});

// Do the two graphs share a common factor of order >= 2?  Delta divides a
// graph G when G is isomorphic to delta itself or to C x delta for some
// graph C (so isomorphic graphs are never coprime).  Cheap sufficient
// conditions first, then a bounded exhaustive search; truncation yields
// kUnknown, never a silent verdict.
CoprimalityAnswer coprimality(const Graph& gamma, const Graph& sigma, const RunConfig& cfg = {});

// Full classification: stable / trivially unstable (with every violated
// hypothesis listed) / nontrivially unstable / unstable-unclassified (only
// when coprimality could not be decided within bounds).
StabilityVerdict classify_pair(const Graph& gamma, const Graph& sigma, const RunConfig& cfg = {});
StabilityVerdict classify_graph(const Graph& gamma, const RunConfig& cfg = {});

// Closure operations; each re-verifies its output and throws parse_error on
// an invalid input pair.
TwoFoldAutomorphism two_fold_swap(const Graph& g, const TwoFoldAutomorphism& t);
TwoFoldAutomorphism two_fold_inverse(const Graph& g, const TwoFoldAutomorphism& t);
TwoFoldAutomorphism two_fold_compose(const Graph& g, const TwoFoldAutomorphism& a,
                                     const TwoFoldAutomorphism& b);

// For bipartite sigma: assign alpha on side 0 and beta on side 1.  The
// result is a valid sigma-indexed family whenever t is a two-fold
// automorphism of gamma.
SigmaAutomorphism lift_two_fold_to_sigma(const Graph& gamma, const TwoFoldAutomorphism& t,
                                         const Graph& sigma);

// Entries at the endpoints of a sigma-edge {i,j} form a two-fold
// automorphism of gamma.
TwoFoldAutomorphism extract_two_fold_from_sigma(const Graph& gamma, const Graph& sigma,
                                                const SigmaAutomorphism& s, int i, int j);

}  // namespace stab
