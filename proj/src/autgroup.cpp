#include "stab/autgroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>

#include "stab/error.hpp"

namespace stab {

namespace {

// Ordered partition of the vertex set: `lab` lists vertices cell by cell,
// `start[i]` marks cell boundaries, `pos` inverts `lab`.  Non-singleton
// cells keep their members in ascending vertex order.
struct OrderedPartition {
    std::vector<int> lab;
    std::vector<int> pos;
    std::vector<char> start;

    bool discrete() const {
        for (char s : start)
            if (!s) return false;
        return true;
    }
};

OrderedPartition partition_from_colors(const std::vector<int>& color) {
    int n = static_cast<int>(color.size());
    std::vector<std::pair<int, int>> order(n);
    for (int v = 0; v < n; ++v) order[v] = {color[v], v};
    std::sort(order.begin(), order.end());
    OrderedPartition p;
    p.lab.resize(n);
    p.pos.resize(n);
    p.start.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        p.lab[i] = order[i].second;
        p.pos[order[i].second] = i;
        if (i == 0 || order[i].first != order[i - 1].first) p.start[i] = 1;
    }
    return p;
}

// Refine to the coarsest equitable partition.  Worklist of splitter cells by
// start position; fragments of a split cell are ordered by neighbour count
// ascending.  Every choice depends only on counts and positions, never on
// vertex labels, so the refinement commutes with relabelling.
void make_equitable(const Graph& g, OrderedPartition& p) {
    int n = g.order();
    int words = g.row_words();
    std::deque<int> queue;
    std::vector<char> queued(n, 0);
    for (int i = 0; i < n; ++i)
        if (p.start[i]) {
            queue.push_back(i);
            queued[i] = 1;
        }

    std::vector<std::uint64_t> mask(words);
    std::vector<int> cnt(n);
    std::vector<int> scratch(n);

    while (!queue.empty()) {
        int sp = queue.front();
        queue.pop_front();
        queued[sp] = 0;

        int se = sp + 1;
        while (se < n && !p.start[se]) ++se;
        std::fill(mask.begin(), mask.end(), 0);
        for (int i = sp; i < se; ++i) mask[p.lab[i] >> 6] |= std::uint64_t{1} << (p.lab[i] & 63);

        for (int cs = 0; cs < n;) {
            int ce = cs + 1;
            while (ce < n && !p.start[ce]) ++ce;
            if (ce - cs > 1) {
                int mn = std::numeric_limits<int>::max();
                int mx = std::numeric_limits<int>::min();
                for (int i = cs; i < ce; ++i) {
                    const std::uint64_t* row = g.row(p.lab[i]);
                    int c = 0;
                    for (int w = 0; w < words; ++w) c += std::popcount(row[w] & mask[w]);
                    cnt[i] = c;
                    mn = std::min(mn, c);
                    mx = std::max(mx, c);
                }
                if (mn != mx) {
                    // Stable bucket by count; preserves ascending order inside
                    // each fragment.
                    int range = mx - mn + 1;
                    std::vector<int> bucket_size(range, 0);
                    for (int i = cs; i < ce; ++i) ++bucket_size[cnt[i] - mn];
                    std::vector<int> offset(range, 0);
                    for (int b = 1; b < range; ++b) offset[b] = offset[b - 1] + bucket_size[b - 1];
                    std::vector<int> cursor = offset;
                    for (int i = cs; i < ce; ++i) scratch[cs + cursor[cnt[i] - mn]++] = p.lab[i];

                    bool was_queued = queued[cs];
                    int largest = -1, largest_size = -1;
                    for (int b = 0; b < range; ++b)
                        if (bucket_size[b] > largest_size) {
                            largest_size = bucket_size[b];
                            largest = b;
                        }

                    for (int i = cs; i < ce; ++i) {
                        p.lab[i] = scratch[i];
                        p.pos[p.lab[i]] = i;
                    }
                    for (int b = 0; b < range; ++b) {
                        if (bucket_size[b] == 0) continue;
                        int fs = cs + offset[b];
                        p.start[fs] = 1;
                        bool enqueue = was_queued || b != largest;
                        if (enqueue && !queued[fs]) {
                            queue.push_back(fs);
                            queued[fs] = 1;
                        }
                    }
                }
            }
            cs = ce;
        }
    }
}

// Split {v} off to the front of its cell.
OrderedPartition individualize(const OrderedPartition& p, int v) {
    OrderedPartition q = p;
    int i = q.pos[v];
    int cs = i;
    while (!q.start[cs]) --cs;
    for (int k = i; k > cs; --k) {
        q.lab[k] = q.lab[k - 1];
        q.pos[q.lab[k]] = k;
    }
    q.lab[cs] = v;
    q.pos[v] = cs;
    if (cs + 1 < static_cast<int>(q.lab.size())) q.start[cs + 1] = 1;
    return q;
}

class AutSearch {
public:
    AutSearch(const Graph& g, const Coloring& init, const SearchLimits& limits,
              bool want_canonical)
        : g_(g),
          n_(g.order()),
          words_(g.row_words()),
          limits_(limits),
          want_canonical_(want_canonical),
          init_color_(init.color) {
        if (static_cast<int>(init_color_.size()) != n_)
            throw parse_error("colouring length does not match graph order");
        path_.assign(n_, -1);
        completed_.assign(n_ + 1, {});
        orbit_cache_.assign(n_ + 1, {});
    }

    void run() {
        explore(partition_from_colors(init_color_), 0);
        if (!group_) group_.emplace(n_);
    }

    PermGroup take_group() { return std::move(*group_); }

    Graph canonical_graph() const {
        Graph c(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((rho_->key[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1)
                    c.add_edge(i, j);
        return c;
    }

private:
    struct Leaf {
        std::vector<int> lab;
        std::vector<std::uint64_t> key;
    };

    const Graph& g_;
    int n_, words_;
    SearchLimits limits_;
    bool want_canonical_;
    std::vector<int> init_color_;
    std::uint64_t nodes_ = 0;

    std::optional<Leaf> zeta_, rho_;
    std::vector<int> leftmost_seq_;
    std::optional<PermGroup> group_;
    std::vector<int> path_;
    std::vector<std::vector<int>> completed_;
    int unwind_to_ = -1;

    struct OrbitCache {
        std::uint64_t version = ~std::uint64_t{0};
        std::vector<int> prefix;
        std::vector<int> ids;
    };
    std::vector<OrbitCache> orbit_cache_;

    std::vector<std::uint64_t> build_key(const OrderedPartition& p) const {
        std::vector<std::uint64_t> key(static_cast<std::size_t>(n_) * words_, 0);
        for (int i = 0; i < n_; ++i)
            for (int w : g_.neighbours(p.lab[i])) {
                int j = p.pos[w];
                key[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1}
                                                                       << (j & 63);
            }
        return key;
    }

    // First smallest non-singleton cell, by position.
    int target_cell(const OrderedPartition& p) const {
        int best = -1, best_size = std::numeric_limits<int>::max();
        for (int cs = 0; cs < n_;) {
            int ce = cs + 1;
            while (ce < n_ && !p.start[ce]) ++ce;
            int size = ce - cs;
            if (size > 1 && size < best_size) {
                best = cs;
                best_size = size;
            }
            cs = ce;
        }
        return best;
    }

    const std::vector<int>& orbit_ids_at(int depth) {
        OrbitCache& c = orbit_cache_[depth];
        std::vector<int> prefix(path_.begin(), path_.begin() + depth);
        if (c.version != group_->version() || c.prefix != prefix) {
            c.version = group_->version();
            c.prefix = prefix;
            c.ids = group_->orbit_ids_fixing(prefix);
        }
        return c.ids;
    }

    void explore(OrderedPartition part, int depth) {
        if (++nodes_ > limits_.node_budget)
            throw resource_error("search node budget of " + std::to_string(limits_.node_budget) +
                                 " exhausted (order " + std::to_string(n_) + ")");
        make_equitable(g_, part);
        if (part.discrete()) {
            handle_leaf(part, depth);
            return;
        }

        int cs = target_cell(part);
        int ce = cs + 1;
        while (ce < n_ && !part.start[ce]) ++ce;
        std::vector<int> cands(part.lab.begin() + cs, part.lab.begin() + ce);

        completed_[depth].clear();
        bool first = true;
        for (int v : cands) {
            if (!first && group_) {
                const std::vector<int>& ids = orbit_ids_at(depth);
                bool dup = false;
                for (int w : completed_[depth])
                    if (ids[w] == ids[v]) {
                        dup = true;
                        break;
                    }
                if (dup) {
                    // Some found automorphism fixes the path so far and maps
                    // an already-explored sibling onto v: skip, but count the
                    // subtree as covered for later translation checks.
                    completed_[depth].push_back(v);
                    continue;
                }
            }
            path_[depth] = v;
            explore(individualize(part, v), depth + 1);
            if (unwind_to_ >= 0) {
                if (unwind_to_ < depth) return;
                unwind_to_ = -1;  // this subtree was proven redundant; move on
            }
            completed_[depth].push_back(v);
            first = false;
        }
    }

    void handle_leaf(const OrderedPartition& part, int depth) {
        Leaf leaf;
        leaf.lab = part.lab;
        leaf.key = build_key(part);

        if (!zeta_) {
            leftmost_seq_.assign(path_.begin(), path_.begin() + depth);
            group_.emplace(n_, leftmost_seq_);
            if (want_canonical_) rho_ = leaf;
            zeta_ = std::move(leaf);
            return;
        }

        const Leaf* ref = nullptr;
        if (leaf.key == zeta_->key) {
            ref = &*zeta_;
        } else if (want_canonical_) {
            if (leaf.key == rho_->key) {
                ref = &*rho_;
            } else if (leaf.key > rho_->key) {
                rho_ = std::move(leaf);
                return;
            } else {
                return;
            }
        } else {
            return;
        }

        std::vector<int> img(n_);
        for (int i = 0; i < n_; ++i) img[leaf.lab[i]] = ref->lab[i];
        Perm sigma(std::move(img));

        if (!is_automorphism(g_, sigma))
            throw std::logic_error("internal: leaf map is not an automorphism");
        for (int v = 0; v < n_; ++v)
            if (init_color_[sigma(v)] != init_color_[v])
                throw std::logic_error("internal: leaf map does not preserve colours");

        group_->add_generator(sigma);

        // Translation: if sigma fixes the path prefix and carries the first
        // deviating path vertex into an already-covered sibling, the whole
        // current subtree at that level repeats covered work.
        for (int d = 0; d < depth; ++d) {
            if (sigma(path_[d]) == path_[d]) continue;
            int target = sigma(path_[d]);
            for (int w : completed_[d])
                if (w == target) {
                    unwind_to_ = d;
                    break;
                }
            break;
        }
    }
};

}  // namespace

Coloring refine(const Graph& g, const Coloring& initial) {
    if (static_cast<int>(initial.color.size()) != g.order())
        throw parse_error("colouring length does not match graph order");
    OrderedPartition p = partition_from_colors(initial.color);
    make_equitable(g, p);
    Coloring out;
    out.color.resize(g.order());
    int cell = -1;
    for (int i = 0; i < g.order(); ++i) {
        if (p.start[i]) ++cell;
        out.color[p.lab[i]] = cell;
    }
    return out;
}

PermGroup automorphism_group(const Graph& g, const Coloring& fixed, const SearchLimits& limits) {
    AutSearch search(g, fixed, limits, false);
    search.run();
    return search.take_group();
}

PermGroup automorphism_group(const Graph& g, const SearchLimits& limits) {
    return automorphism_group(g, Coloring::uniform(g.order()), limits);
}

mpz_class aut_order(const Graph& g, const SearchLimits& limits) {
    return automorphism_group(g, limits).order();
}

Graph canonical_form(const Graph& g, const SearchLimits& limits) {
    AutSearch search(g, Coloring::uniform(g.order()), limits, true);
    search.run();
    return search.canonical_graph();
}

bool is_vertex_transitive(const Graph& g, const SearchLimits& limits) {
    return automorphism_group(g, limits).orbits().size() == 1;
}

bool is_arc_transitive(const Graph& g, const SearchLimits& limits) {
    long long arcs = 2 * g.edge_count();
    if (arcs == 0) return true;  // vacuous
    PermGroup group = automorphism_group(g, limits);

    int n = g.order();
    auto arc_id = [n](int u, int v) { return static_cast<long long>(u) * n + v; };
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    int u0 = -1, v0 = -1;
    for (int u = 0; u < n && u0 < 0; ++u)
        for (int v : g.neighbours(u)) {
            u0 = u;
            v0 = v;
            break;
        }
    std::deque<std::pair<int, int>> queue{{u0, v0}};
    seen[arc_id(u0, v0)] = 1;
    long long reached = 1;
    while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        for (const Perm& p : group.generators()) {
            int pu = p(u), pv = p(v);
            if (!seen[arc_id(pu, pv)]) {
                seen[arc_id(pu, pv)] = 1;
                ++reached;
                queue.emplace_back(pu, pv);
            }
        }
        // The reverse arc lies in the same orbit exactly when some group
        // element swaps the endpoints; do not add it unilaterally.
    }
    return reached == arcs;
}

}  // namespace stab
