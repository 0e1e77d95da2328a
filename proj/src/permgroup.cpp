#include "stab/permgroup.hpp"

#include <algorithm>
#include <numeric>

#include "stab/error.hpp"

namespace stab {

PermGroup::PermGroup(int degree) : degree_(degree) {
    if (degree < 1) throw parse_error("group degree must be at least 1");
}

PermGroup::PermGroup(int degree, std::vector<int> base_hint)
    : degree_(degree), base_hint_(std::move(base_hint)) {
    if (degree < 1) throw parse_error("group degree must be at least 1");
    for (int b : base_hint_)
        if (b < 0 || b >= degree) throw parse_error("base hint point out of range");
}

template <typename F>
void PermGroup::for_each_gen_serial_at_or_below(std::size_t level, F&& f) const {
    for (std::size_t j = level; j < levels_.size(); ++j)
        for (int s : levels_[j].gens) f(s);
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm p, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
        const Level& lv = levels_[i];
        int x = p(lv.base_point);
        int idx = lv.orbit_pos[x];
        if (idx == 0) return {std::move(p), i};
        p = compose(p, lv.transversal[idx - 1].inverse());
    }
    return {std::move(p), levels_.size()};
}

int PermGroup::pick_base_point(const Perm& residue) const {
    std::vector<char> used(degree_, 0);
    for (const Level& lv : levels_) used[lv.base_point] = 1;
    for (int b : base_hint_)
        if (!used[b] && residue(b) != b) return b;
    for (int v = 0; v < degree_; ++v)
        if (residue(v) != v) return v;
    throw parse_error("cannot pick a base point for the identity");
}

void PermGroup::place(Perm residue, std::size_t level) {
    int serial = static_cast<int>(pool_.size());
    if (level == levels_.size()) {
        Level lv;
        lv.base_point = pick_base_point(residue);
        lv.orbit = {lv.base_point};
        lv.orbit_pos.assign(degree_, 0);
        lv.orbit_pos[lv.base_point] = 1;
        lv.transversal = {Perm(degree_)};
        levels_.push_back(std::move(lv));
    }
    pool_.push_back(std::move(residue));
    levels_[level].gens.push_back(serial);
    ++version_;
}

// Orbit closure of level i's base point under every generator that fixes the
// earlier base points, extending the transversal alongside.
void PermGroup::close_orbit(std::size_t i) {
    std::vector<int> serials;
    for_each_gen_serial_at_or_below(i, [&](int s) { serials.push_back(s); });
    Level& lv = levels_[i];
    bool grew = true;
    while (grew) {
        grew = false;
        for (int s : serials) {
            auto it = lv.closure_done.find(s);
            int start = (it == lv.closure_done.end()) ? 0 : it->second;
            for (int idx = start; idx < static_cast<int>(lv.orbit.size()); ++idx) {
                int y = pool_[s](lv.orbit[idx]);
                if (!lv.orbit_pos[y]) {
                    lv.orbit.push_back(y);
                    lv.transversal.push_back(compose(lv.transversal[idx], pool_[s]));
                    lv.orbit_pos[y] = static_cast<int>(lv.orbit.size());
                    grew = true;
                }
            }
            lv.closure_done[s] = static_cast<int>(lv.orbit.size());
        }
    }
}

bool PermGroup::close_level(std::size_t i) {
    std::vector<int> serials;
    for_each_gen_serial_at_or_below(i, [&](int s) { serials.push_back(s); });

    close_orbit(i);

    // Sift each unprocessed Schreier generator through the deeper levels;
    // residues that survive become new chain generators.  Each placement is
    // followed by an orbit closure of the receiving level, so later sifts in
    // this batch divide through the fresh transversal instead of re-placing
    // equivalent residues.
    bool placed_any = false;
    for (int s : serials) {
        int start;
        {
            Level& lv = levels_[i];
            auto it = lv.schreier_done.find(s);
            start = (it == lv.schreier_done.end()) ? 0 : it->second;
        }
        for (int idx = start;; ++idx) {
            // Re-take the reference: placements below may reallocate levels_.
            if (idx >= static_cast<int>(levels_[i].orbit.size())) break;
            Perm sg(degree_);
            {
                Level& lv = levels_[i];
                int y = pool_[s](lv.orbit[idx]);
                int yidx = lv.orbit_pos[y] - 1;
                sg = compose(compose(lv.transversal[idx], pool_[s]),
                             lv.transversal[yidx].inverse());
            }
            if (!sg.is_identity()) {
                auto [residue, lvl] = strip(std::move(sg), i + 1);
                if (!residue.is_identity()) {
                    place(std::move(residue), lvl);
                    close_orbit(lvl);
                    placed_any = true;
                }
            }
        }
        Level& lv = levels_[i];
        lv.schreier_done[s] = static_cast<int>(lv.orbit.size());
    }
    return placed_any;
}

void PermGroup::stabilize() {
    while (true) {
        bool any = false;
        for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i)
            if (close_level(static_cast<std::size_t>(i))) any = true;
        if (!any) break;
    }
}

bool PermGroup::add_generator(const Perm& p) {
    if (p.degree() != degree_)
        throw parse_error("generator degree " + std::to_string(p.degree()) +
                          " does not match group degree " + std::to_string(degree_));
    auto [residue, lvl] = strip(p, 0);
    if (residue.is_identity()) return false;
    input_gens_.push_back(p);
    place(std::move(residue), lvl);
    stabilize();
    return true;
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_) return false;
    auto [residue, lvl] = strip(p, 0);
    (void)lvl;
    return residue.is_identity();
}

mpz_class PermGroup::order() const {
    mpz_class o = 1;
    for (const Level& lv : levels_) o *= static_cast<unsigned long>(lv.orbit.size());
    return o;
}

std::vector<int> PermGroup::base() const {
    std::vector<int> b;
    for (const Level& lv : levels_) b.push_back(lv.base_point);
    return b;
}

namespace {

int uf_find(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Perm& p : pool_)
        for (int v = 0; v < degree_; ++v) uf_union(parent, v, p(v));
    std::vector<std::vector<int>> by_root(degree_);
    for (int v = 0; v < degree_; ++v) by_root[uf_find(parent, v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& orb : by_root)
        if (!orb.empty()) out.push_back(std::move(orb));
    return out;
}

std::vector<int> PermGroup::orbit_ids_fixing(const std::vector<int>& fixed) const {
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Perm& p : pool_) {
        bool ok = true;
        for (int f : fixed)
            if (p(f) != f) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int v = 0; v < degree_; ++v) uf_union(parent, v, p(v));
    }
    std::vector<int> ids(degree_);
    for (int v = 0; v < degree_; ++v) ids[v] = uf_find(parent, v);
    return ids;
}

}  // namespace stab
