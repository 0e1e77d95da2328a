#pragma once

#include <gmpxx.h>

#include <unordered_map>
#include <vector>

#include "stab/perm.hpp"

namespace stab {

// Permutation group maintained as a stabilizer chain (deterministic
// incremental Schreier-Sims, no randomisation).  Orders are exact big
// integers; membership is decided by sifting.
//
// An optional base hint fixes the order in which base points are chosen:
// whenever a new chain level is needed, the earliest unused hint point moved
// by the new element wins.  Aligning the hint with an individualization
// sequence lets searches ask for orbits of successive point stabilizers.
class PermGroup {
public:
    explicit PermGroup(int degree);
    PermGroup(int degree, std::vector<int> base_hint);

    int degree() const { return degree_; }

    // Returns true if p enlarged the group (false: already a member).
    bool add_generator(const Perm& p);

    bool contains(const Perm& p) const;
    mpz_class order() const;

    // The added generators that were not already members; they generate the
    // whole group.
    const std::vector<Perm>& generators() const { return input_gens_; }

    std::vector<int> base() const;
    bool is_trivial() const { return levels_.empty(); }

    // Vertex orbits of the full group, each sorted, listed by smallest element.
    std::vector<std::vector<int>> orbits() const;

    // orbit_ids[v] == orbit_ids[u] iff u and v lie in one orbit of the
    // subgroup generated by every stored element fixing all of `fixed`
    // pointwise.  That subgroup sits inside the true pointwise stabilizer,
    // so equal ids are always safe to act on; unequal ids promise nothing.
    std::vector<int> orbit_ids_fixing(const std::vector<int>& fixed) const;

    // Monotone version counter; bumps whenever the group grows.
    std::uint64_t version() const { return version_; }

private:
    struct Level {
        int base_point;
        std::vector<int> gens;                         // serials placed at this level
        std::vector<int> orbit;                        // discovery order; orbit[0] = base_point
        std::vector<int> orbit_pos;                    // point -> index+1, 0 = absent
        std::vector<Perm> transversal;                 // transversal[i]: base_point -> orbit[i]
        std::unordered_map<int, int> closure_done;     // gen serial -> orbit idx scanned
        std::unordered_map<int, int> schreier_done;    // gen serial -> orbit idx paired
    };

    int degree_;
    std::vector<int> base_hint_;
    std::vector<Level> levels_;
    std::vector<Perm> pool_;         // every placed residue, by serial
    std::vector<Perm> input_gens_;
    std::uint64_t version_ = 0;

    // Sift p through levels[from..]; returns the residue and the level at
    // which it stopped (== levels_.size() when it passed the whole chain).
    std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const;

    void place(Perm residue, std::size_t level);
    int pick_base_point(const Perm& residue) const;
    void close_orbit(std::size_t i);
    bool close_level(std::size_t i);
    void stabilize();

    template <typename F>
    void for_each_gen_serial_at_or_below(std::size_t level, F&& f) const;
};

}  // namespace stab
