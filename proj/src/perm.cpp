#include "stab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stab/error.hpp"

namespace stab {

Perm::Perm(int n) : img_(n) {
    if (n < 1) throw parse_error("permutation degree must be at least 1");
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> image) : img_(std::move(image)) {
    int n = static_cast<int>(img_.size());
    if (n < 1) throw parse_error("permutation degree must be at least 1");
    std::vector<char> seen(n, 0);
    for (int x : img_) {
        if (x < 0 || x >= n || seen[x]) throw parse_error("permutation image is not a bijection");
        seen[x] = 1;
    }
}

bool Perm::is_identity() const {
    for (int v = 0; v < degree(); ++v)
        if (img_[v] != v) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int v = 0; v < degree(); ++v) inv[img_[v]] = v;
    return Perm(std::move(inv));
}

std::string Perm::one_line() const {
    std::ostringstream out;
    for (int v = 0; v < degree(); ++v) {
        if (v) out << ", ";
        out << v << "->" << img_[v];
    }
    return out.str();
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw parse_error("composing permutations of unequal degree");
    std::vector<int> r(p.degree());
    for (int v = 0; v < p.degree(); ++v) r[v] = q(p(v));
    return Perm(std::move(r));
}

bool is_automorphism(const Graph& g, const Perm& p) {
    if (p.degree() != g.order()) return false;
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbours(u)) {
            if (u > v) continue;
            if (!g.adjacent(p(u), p(v))) return false;
        }
    // Edge counts agree and p is a bijection, so edge preservation one way
    // already forces the full biconditional.
    return true;
}

Perm random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(std::move(img));
}

}  // namespace stab
