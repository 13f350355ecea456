#include "sumbalaban/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sumbalaban/graph6.hpp"

namespace sumbalaban {

namespace {

using Mask = std::uint64_t;

int popcount(Mask m) { return __builtin_popcountll(m); }
int lowest(Mask m) { return __builtin_ctzll(m); }

// Ordered partition of the vertex set; cells[i] is a bitmask.
struct Partition {
    std::vector<Mask> cells;
    std::vector<char> pending;  // cell still has to act as a splitter

    bool discrete(std::size_t n) const { return cells.size() == n; }
};

// Refine to the coarsest equitable partition finer than `p`. Every decision
// depends only on cell positions and neighbour counts, so the result is
// label-invariant.
void refine(const std::vector<Mask>& adj, Partition& p) {
    std::array<std::pair<int, int>, 64> scratch{};
    const std::size_t n = adj.size();
    while (!p.discrete(n)) {
        const auto it = std::find(p.pending.begin(), p.pending.end(), 1);
        if (it == p.pending.end()) break;
        const auto si = static_cast<std::size_t>(it - p.pending.begin());
        p.pending[si] = 0;
        const Mask splitter = p.cells[si];

        for (std::size_t j = 0; j < p.cells.size(); ++j) {
            const Mask cell = p.cells[j];
            if (popcount(cell) == 1) continue;
            int count = 0;
            bool uniform = true;
            int first = -1;
            for (Mask c = cell; c != 0; c &= c - 1) {
                const int v = lowest(c);
                const int k = popcount(adj[static_cast<std::size_t>(v)] & splitter);
                if (first < 0) first = k;
                uniform = uniform && k == first;
                scratch[static_cast<std::size_t>(count++)] = {k, v};
            }
            if (uniform) continue;
            std::sort(scratch.begin(), scratch.begin() + count);
            std::vector<Mask> parts;
            Mask cur = 0;
            int cur_key = scratch[0].first;
            for (int i = 0; i < count; ++i) {
                if (scratch[static_cast<std::size_t>(i)].first != cur_key) {
                    parts.push_back(cur);
                    cur = 0;
                    cur_key = scratch[static_cast<std::size_t>(i)].first;
                }
                cur |= Mask{1} << scratch[static_cast<std::size_t>(i)].second;
            }
            parts.push_back(cur);
            p.cells[j] = parts[0];
            p.pending[j] = 1;
            p.cells.insert(p.cells.begin() + static_cast<std::ptrdiff_t>(j) + 1, parts.begin() + 1, parts.end());
            p.pending.insert(p.pending.begin() + static_cast<std::ptrdiff_t>(j) + 1, parts.size() - 1, 1);
            j += parts.size() - 1;
        }
    }
}

Mask permute(const std::vector<Vertex>& perm, Mask m) {
    Mask out = 0;
    for (; m != 0; m &= m - 1) out |= Mask{1} << perm[static_cast<std::size_t>(lowest(m))];
    return out;
}

class Search {
public:
    explicit Search(const std::vector<Mask>& adj) : adj_(adj), n_(adj.size()) {}

    void run() {
        Partition root;
        const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        if (n_ > 0) {
            root.cells.push_back(all);
            root.pending.push_back(1);
        }
        refine(adj_, root);
        std::vector<Vertex> prefix;
        visit(root, prefix);
    }

    CanonicalLabeling result() const {
        CanonicalLabeling out;
        out.label.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) out.label[best_lab_[i]] = static_cast<Vertex>(i);
        out.canonical_rows = best_rows_;
        out.generators = autos_;

        out.orbit.resize(n_);
        std::iota(out.orbit.begin(), out.orbit.end(), Vertex{0});
        auto find = [&](Vertex v) {
            while (out.orbit[v] != v) v = out.orbit[v] = out.orbit[out.orbit[v]];
            return v;
        };
        for (const auto& g : autos_) {
            for (Vertex v = 0; v < n_; ++v) {
                const Vertex x = find(v);
                const Vertex y = find(g[v]);
                if (x != y) out.orbit[std::max(x, y)] = std::min(x, y);
            }
        }
        for (Vertex v = 0; v < n_; ++v) out.orbit[v] = find(v);
        return out;
    }

private:
    void visit(const Partition& p, std::vector<Vertex>& prefix) {
        if (p.discrete(n_)) {
            leaf(p);
            return;
        }
        std::size_t target = 0;
        while (popcount(p.cells[target]) == 1) ++target;
        const Mask cell = p.cells[target];

        Mask explored = 0;
        for (Mask c = cell; c != 0; c &= c - 1) {
            const int v = lowest(c);
            if (((orbit_closure(explored, prefix) >> v) & 1U) != 0) continue;
            explored |= Mask{1} << v;

            Partition child = p;
            const Mask single = Mask{1} << v;
            child.cells[target] = single;
            child.pending[target] = 1;
            child.cells.insert(child.cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cell & ~single);
            child.pending.insert(child.pending.begin() + static_cast<std::ptrdiff_t>(target) + 1, 0);
            refine(adj_, child);
            prefix.push_back(static_cast<Vertex>(v));
            visit(child, prefix);
            prefix.pop_back();
        }
    }

    // Closure of `set` under the discovered automorphisms that fix every
    // vertex of `prefix`.
    Mask orbit_closure(Mask set, const std::vector<Vertex>& prefix) const {
        if (set == 0 || autos_.empty()) return set;
        Mask closure = set;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& g : autos_) {
                if (!std::all_of(prefix.begin(), prefix.end(), [&](Vertex x) { return g[x] == x; })) continue;
                const Mask image = permute(g, closure);
                if ((image & ~closure) != 0) {
                    closure |= image;
                    grew = true;
                }
            }
        }
        return closure;
    }

    void leaf(const Partition& p) {
        std::vector<Vertex> lab(n_), pos(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            lab[i] = static_cast<Vertex>(lowest(p.cells[i]));
            pos[lab[i]] = static_cast<Vertex>(i);
        }
        std::vector<Mask> rows(n_);
        for (std::size_t i = 0; i < n_; ++i) rows[i] = permute(pos, adj_[lab[i]]);

        if (first_lab_.empty()) {
            first_lab_ = best_lab_ = lab;
            first_rows_ = best_rows_ = rows;
            return;
        }
        const std::vector<Vertex>* match = nullptr;
        if (rows == first_rows_) {
            match = &first_lab_;
        } else if (rows == best_rows_) {
            match = &best_lab_;
        }
        if (match != nullptr) {
            std::vector<Vertex> gamma(n_);
            bool identity = true;
            for (Vertex v = 0; v < n_; ++v) {
                gamma[v] = (*match)[pos[v]];
                identity = identity && gamma[v] == v;
            }
            if (!identity) autos_.push_back(std::move(gamma));
            return;
        }
        if (rows < best_rows_) {
            best_rows_ = std::move(rows);
            best_lab_ = std::move(lab);
        }
    }

    const std::vector<Mask>& adj_;
    std::size_t n_;
    std::vector<Vertex> first_lab_, best_lab_;
    std::vector<Mask> first_rows_, best_rows_;
    std::vector<std::vector<Vertex>> autos_;
};

}  // namespace

CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> rows) {
    if (rows.size() > kCanonicalMaxOrder) {
        throw std::length_error("canonical labelling supports at most " + std::to_string(kCanonicalMaxOrder) +
                                " vertices, got " + std::to_string(rows.size()));
    }
    const std::vector<Mask> adj(rows.begin(), rows.end());
    Search search(adj);
    search.run();
    return search.result();
}

CanonicalLabeling canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder) {
        throw std::length_error("canonical labelling supports at most " + std::to_string(kCanonicalMaxOrder) +
                                " vertices, got " + std::to_string(g.order()));
    }
    std::vector<Mask> rows(g.order());
    for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row_word(v);
    return canonical_labeling(rows);
}

CanonicalForm canonical_form(const Graph& g) {
    const auto lab = canonical_labeling(g);
    return {encode_graph6(Graph::from_rows(lab.canonical_rows))};
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) {
        // Still enforce the size guard so the contract does not depend on the shortcut.
        if (g.order() > kCanonicalMaxOrder || h.order() > kCanonicalMaxOrder) {
            throw std::length_error("are_isomorphic supports at most " + std::to_string(kCanonicalMaxOrder) +
                                    " vertices");
        }
        return false;
    }
    return canonical_labeling(g).canonical_rows == canonical_labeling(h).canonical_rows;
}

}  // namespace sumbalaban
