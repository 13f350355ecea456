#include "sumbalaban/enumerate.hpp"

#include <algorithm>
#include <array>

#include "sumbalaban/canonical.hpp"

namespace sumbalaban {

namespace {

using Mask = std::uint64_t;
using Rows = std::array<Mask, kMaxEnumerationOrder>;

int popcount(Mask m) { return __builtin_popcountll(m); }

Mask bit(std::size_t i) { return Mask{1} << i; }

// True iff removing u disconnects the graph on vertices 0..k-1.
bool is_cut_vertex(const Rows& x, std::size_t k, std::size_t u) {
    const Mask rest = (bit(k) - 1) & ~bit(u);
    if (rest == 0) return false;
    Mask visited = rest & (~rest + 1);
    Mask frontier = visited;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) next |= x[static_cast<std::size_t>(__builtin_ctzll(f))];
        next &= rest & ~visited;
        visited |= next;
        frontier = next;
    }
    return visited != rest;
}

Mask permute_mask(const std::vector<Vertex>& perm, Mask m) {
    Mask out = 0;
    for (; m != 0; m &= m - 1) out |= bit(perm[static_cast<std::size_t>(__builtin_ctzll(m))]);
    return out;
}

class Generator {
public:
    Generator(const SearchConstraints& c, std::size_t stop, const GraphVisitor* visit, std::vector<WorkUnit>* units)
        : c_(c), stop_(stop), visit_(visit), units_(units) {
        // Upper bound on the edges vertices k..n-1 can still bring.
        cap_after_.assign(c.n + 1, 0);
        for (std::size_t k = c.n; k-- > 0;) cap_after_[k] = cap_after_[k + 1] + std::min(k, c.max_degree);
    }

    void run_from(const Rows& rows, std::size_t k) {
        std::size_t edges = 0;
        for (std::size_t i = 0; i < k; ++i) edges += static_cast<std::size_t>(popcount(rows[i]));
        edges /= 2;
        if (edges + cap_after_[k] < c_.min_edges) return;
        std::vector<std::vector<Vertex>> gens;
        if (k < stop_) gens = canonical_labeling(std::span<const Mask>(rows.data(), k)).generators;
        extend(rows, k, edges, gens);
    }

    std::uint64_t emitted() const { return emitted_; }

private:
    void extend(const Rows& rows, std::size_t k, std::size_t edges, const std::vector<std::vector<Vertex>>& gens) {
        if (k == stop_) {
            if (units_ != nullptr) {
                units_->push_back({std::vector<Mask>(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(k))});
            } else {
                (*visit_)(Graph::from_rows(std::span<const Mask>(rows.data(), k)));
            }
            ++emitted_;
            return;
        }

        // The new vertex may only join vertices that still have room.
        Mask room = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (static_cast<std::size_t>(popcount(rows[i])) < c_.max_degree) room |= bit(i);
        }

        std::vector<char> seen;
        if (!gens.empty()) seen.assign(std::size_t{1} << k, 0);

        Rows x{};
        std::vector<Mask> stack;
        for (Mask s = (Mask{0} - room) & room; s != 0; s = (s - room) & room) {
            if (!gens.empty()) {
                // Keep only the smallest subset of each Aut(parent)-orbit.
                if (seen[s] != 0) continue;
                seen[s] = 1;
                stack.assign(1, s);
                while (!stack.empty()) {
                    const Mask t = stack.back();
                    stack.pop_back();
                    for (const auto& g : gens) {
                        const Mask img = permute_mask(g, t);
                        if (seen[img] == 0) {
                            seen[img] = 1;
                            stack.push_back(img);
                        }
                    }
                }
            }

            const auto degree_new = static_cast<std::size_t>(popcount(s));
            if (degree_new > c_.max_degree) continue;
            const std::size_t new_edges = edges + degree_new;
            if (new_edges > c_.max_edges || new_edges + cap_after_[k + 1] < c_.min_edges) continue;

            for (std::size_t i = 0; i < k; ++i) x[i] = rows[i] | (((s >> i) & 1U) << k);
            x[k] = s;

            std::vector<std::vector<Vertex>> child_gens;
            if (!accept(x, k + 1, child_gens)) continue;
            extend(x, k + 1, new_edges, child_gens);
        }
    }

    // Canonical-parent test for the child x on k vertices whose last vertex
    // is new. On acceptance fills `gens` when the child will be extended.
    bool accept(const Rows& x, std::size_t k, std::vector<std::vector<Vertex>>& gens) const {
        const std::size_t fresh = k - 1;
        std::array<int, kMaxEnumerationOrder> deg{};
        for (std::size_t i = 0; i < k; ++i) deg[i] = popcount(x[i]);
        auto key = [&](std::size_t v) {
            int s = 0;
            for (Mask m = x[v]; m != 0; m &= m - 1) s += deg[static_cast<std::size_t>(__builtin_ctzll(m))];
            return deg[v] * 256 + s;
        };
        const int fresh_key = key(fresh);
        Mask candidates = bit(fresh);
        for (std::size_t u = 0; u < fresh; ++u) {
            const int ku = key(u);
            if (ku > fresh_key) continue;
            if (is_cut_vertex(x, k, u)) continue;
            if (ku < fresh_key) return false;
            candidates |= bit(u);
        }

        const bool extend_further = k < stop_;
        if (candidates == bit(fresh)) {
            if (extend_further) gens = canonical_labeling(std::span<const Mask>(x.data(), k)).generators;
            return true;
        }
        auto lab = canonical_labeling(std::span<const Mask>(x.data(), k));
        std::size_t chosen = fresh;
        for (Mask m = candidates; m != 0; m &= m - 1) {
            const auto v = static_cast<std::size_t>(__builtin_ctzll(m));
            if (lab.label[v] > lab.label[chosen]) chosen = v;
        }
        if (lab.orbit[chosen] != lab.orbit[fresh]) return false;
        if (extend_further) gens = std::move(lab.generators);
        return true;
    }

    const SearchConstraints& c_;
    std::size_t stop_;
    const GraphVisitor* visit_;
    std::vector<WorkUnit>* units_;
    std::vector<std::size_t> cap_after_;
    std::uint64_t emitted_ = 0;
};

Rows single_vertex() { return Rows{}; }

}  // namespace

SearchConstraints SearchConstraints::defaults(std::size_t n) {
    const std::size_t top = n * (n - (n > 0 ? 1 : 0)) / 2;
    return {n, n > 0 ? n - 1 : 0, top, n > 0 ? n - 1 : 0};
}

void SearchConstraints::validate() const {
    if (n < 1) throw std::invalid_argument("search needs n >= 1");
    if (n > kMaxEnumerationOrder) {
        throw ResourceGuardExceeded("enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder));
    }
    const std::size_t top = n * (n - 1) / 2;
    if (min_edges < n - 1) throw std::invalid_argument("min_edges below n-1 admits no connected graph: " + describe());
    if (min_edges > max_edges) throw std::invalid_argument("min_edges exceeds max_edges: " + describe());
    if (max_edges > top) throw std::invalid_argument("max_edges exceeds C(n,2): " + describe());
    if (max_degree > n - 1 || (n >= 2 && max_degree < 1)) {
        throw std::invalid_argument("max_degree must lie in [1, n-1]: " + describe());
    }
    if (n > kMaxUnconstrainedOrder && max_edges > 2 * n) {
        throw ResourceGuardExceeded("n > " + std::to_string(kMaxUnconstrainedOrder) +
                                    " needs a tight edge window (max_edges <= 2n): " + describe());
    }
}

bool SearchConstraints::admits(const Graph& g) const {
    return g.order() == n && g.size() >= min_edges && g.size() <= max_edges && g.max_degree() <= max_degree &&
           is_connected(g);
}

std::string SearchConstraints::describe() const {
    return "n=" + std::to_string(n) + " edges=[" + std::to_string(min_edges) + "," + std::to_string(max_edges) +
           "] max_degree=" + std::to_string(max_degree);
}

std::uint64_t generate_connected(const SearchConstraints& c, const GraphVisitor& visit) {
    c.validate();
    Generator gen(c, c.n, &visit, nullptr);
    gen.run_from(single_vertex(), 1);
    return gen.emitted();
}

std::vector<WorkUnit> split_generation(const SearchConstraints& c, std::size_t depth) {
    c.validate();
    std::vector<WorkUnit> units;
    Generator gen(c, std::clamp<std::size_t>(depth, 1, c.n), nullptr, &units);
    gen.run_from(single_vertex(), 1);
    return units;
}

std::uint64_t generate_from(const SearchConstraints& c, const WorkUnit& unit, const GraphVisitor& visit) {
    c.validate();
    const std::size_t k = unit.rows.size();
    if (k < 1 || k > c.n) throw std::invalid_argument("work unit order outside 1..n");
    Rows rows{};
    std::copy(unit.rows.begin(), unit.rows.end(), rows.begin());
    Generator gen(c, c.n, &visit, nullptr);
    gen.run_from(rows, k);
    return gen.emitted();
}

}  // namespace sumbalaban
