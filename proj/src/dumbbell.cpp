#include "sumbalaban/dumbbell.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace sumbalaban {

namespace {

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

std::string describe(const DumbbellSpec& s) { return "D(" + to_csv(s) + ")"; }

// Transmissions of each vertex class of D^ell_{a,b,a'}.
//
// Classes: the left clique splits into `attached` (the ell > 0 vertices that
// also see v_1) and `plain`; the right clique splits into `kept` (still
// adjacent to v_{b-1}) and `detached` (the -ell < 0 vertices that lost it).
//
// Base distances with L = b - 1: K-K 1, K-v_i i+1, K-K' L+2, v_i-v_j |i-j|,
// v_i-K' L-i+1, K'-K' 1. An attached vertex reaches v_i (i >= 1) and K' one
// step sooner; a detached vertex reaches every path and K vertex one step
// later. No other distance changes.
struct ClassTransmissions {
    std::int64_t left_attached = 0;
    std::int64_t left_plain = 0;
    std::int64_t right_kept = 0;
    std::int64_t right_detached = 0;
    std::vector<std::int64_t> path;
};

ClassTransmissions class_transmissions(const DumbbellSpec& s) {
    const std::int64_t a = s.a;
    const std::int64_t b = s.b;
    const std::int64_t ap = s.a_prime;
    const std::int64_t last = b - 1;
    const std::int64_t added = s.ell > 0 ? s.ell : 0;
    const std::int64_t removed = s.ell < 0 ? -s.ell : 0;

    ClassTransmissions t;
    const std::int64_t path_to_path_end = b * (b + 1) / 2;  // sum_{i=0}^{L} (i + 1)
    t.left_plain = (a - 1) + path_to_path_end + ap * (last + 2) + removed;
    t.left_attached = t.left_plain - last - ap;
    t.right_kept = (ap - 1) + path_to_path_end + a * (last + 2) - added;
    t.right_detached = t.right_kept + b + a;

    t.path.resize(static_cast<std::size_t>(b));
    for (std::int64_t i = 0; i <= last; ++i) {
        const std::int64_t along = i * (i + 1) / 2 + (last - i) * (last - i + 1) / 2;
        std::int64_t w = a * (i + 1) + along + ap * (last - i + 1) + removed;
        if (i >= 1) w -= added;
        t.path[static_cast<std::size_t>(i)] = w;
    }
    return t;
}

}  // namespace

std::int64_t DumbbellSpec::edge_count() const noexcept {
    return choose2(a) + a + (b - 1) + choose2(a_prime) + a_prime + ell;
}

bool is_feasible(const DumbbellSpec& s) noexcept {
    if (s.a < 0 || s.b < 1 || s.a_prime < s.a || s.order() < 2) return false;
    if (s.ell == 0) return true;
    if (s.ell > 0) return s.ell <= s.a && s.b >= 2;
    return -s.ell <= s.a_prime - 1;
}

void validate(const DumbbellSpec& s) {
    if (s.a < 0) throw std::invalid_argument(describe(s) + ": clique size a must be >= 0");
    if (s.b < 1) throw std::invalid_argument(describe(s) + ": path needs at least one vertex");
    if (s.a_prime < s.a) throw std::invalid_argument(describe(s) + ": requires a <= a'");
    if (s.order() < 2) throw std::invalid_argument(describe(s) + ": needs at least 2 vertices");
    if (s.ell > 0 && s.b < 2) throw std::invalid_argument(describe(s) + ": ell > 0 needs v_1, so b >= 2");
    if (s.ell > s.a || (s.ell < 0 && -s.ell > s.a_prime - 1)) {
        throw std::invalid_argument(describe(s) + ": ell must lie in [-(a'-1), a]");
    }
}

std::vector<std::int64_t> feasible_ells(std::int64_t a, std::int64_t b, std::int64_t a_prime) {
    std::vector<std::int64_t> out;
    for (std::int64_t ell = -(a_prime - 1); ell <= a; ++ell) {
        if (is_feasible({a, b, a_prime, ell})) out.push_back(ell);
    }
    if (out.empty() && is_feasible({a, b, a_prime, 0})) out.push_back(0);
    return out;
}

Graph make_dumbbell(const DumbbellSpec& spec) {
    if (spec.ell != 0) throw std::invalid_argument(describe(spec) + ": make_dumbbell takes ell = 0");
    return make_dumbbell_like(spec);
}

Graph make_dumbbell_like(const DumbbellSpec& spec) {
    validate(spec);
    const auto a = static_cast<Vertex>(spec.a);
    const auto b = static_cast<Vertex>(spec.b);
    const auto ap = static_cast<Vertex>(spec.a_prime);
    const Vertex n = a + b + ap;
    const Vertex v0 = a;
    const Vertex v_last = a + b - 1;
    const Vertex right = a + b;
    const auto removed = static_cast<Vertex>(spec.ell < 0 ? -spec.ell : 0);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(spec.edge_count()));
    for (Vertex i = 0; i < a; ++i) {
        for (Vertex j = i + 1; j < a; ++j) edges.push_back({i, j});
        edges.push_back({i, v0});
        if (spec.ell > 0 && i < static_cast<Vertex>(spec.ell)) edges.push_back({i, v0 + 1});
    }
    for (Vertex i = v0; i < v_last; ++i) edges.push_back({i, i + 1});
    for (Vertex i = right; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
        if (i < n - removed) edges.push_back({v_last, i});
    }
    return Graph::from_edge_list(n, edges);
}

BalancedTransmissions closed_form_transmissions(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("closed_form_transmissions needs a >= 1 and b >= 1");
    const auto ad = static_cast<double>(a);
    const auto bd = static_cast<double>(b);
    BalancedTransmissions t;
    t.w_clique = bd * bd / 2 + ad * bd + bd / 2 + 2 * ad - 1;
    t.w_path.resize(static_cast<std::size_t>(b));
    for (std::int64_t i = 0; i < b; ++i) {
        const auto id = static_cast<double>(i);
        t.w_path[static_cast<std::size_t>(i)] =
            id * id / 2 + (bd - id) * (bd - id) / 2 + ad * bd - bd / 2 + id + ad;
    }
    return t;
}

TransmissionVector dumbbell_transmissions(const DumbbellSpec& spec) {
    validate(spec);
    const auto t = class_transmissions(spec);
    TransmissionVector out;
    out.values.reserve(static_cast<std::size_t>(spec.order()));
    for (std::int64_t i = 0; i < spec.a; ++i) {
        out.values.push_back(static_cast<std::uint64_t>(i < spec.ell ? t.left_attached : t.left_plain));
    }
    for (const auto w : t.path) out.values.push_back(static_cast<std::uint64_t>(w));
    const std::int64_t kept = spec.a_prime - (spec.ell < 0 ? -spec.ell : 0);
    for (std::int64_t i = 0; i < spec.a_prime; ++i) {
        out.values.push_back(static_cast<std::uint64_t>(i < kept ? t.right_kept : t.right_detached));
    }
    return out;
}

double sj_dumbbell(const DumbbellSpec& spec) {
    validate(spec);
    const auto t = class_transmissions(spec);
    const std::int64_t attached = spec.ell > 0 ? spec.ell : 0;
    const std::int64_t plain = spec.a - attached;
    const std::int64_t detached = spec.ell < 0 ? -spec.ell : 0;
    const std::int64_t kept = spec.a_prime - detached;

    auto term = [](std::int64_t x, std::int64_t y) { return 1.0 / std::sqrt(static_cast<double>(x + y)); };
    auto group = [&](std::int64_t count, std::int64_t x, std::int64_t y) {
        return count > 0 ? static_cast<double>(count) * term(x, y) : 0.0;
    };

    const auto& p = t.path;
    const std::int64_t w_first = p.front();
    const std::int64_t w_last = p.back();

    double sum = 0.0;
    sum += group(choose2(attached), t.left_attached, t.left_attached);
    sum += group(attached * plain, t.left_attached, t.left_plain);
    sum += group(choose2(plain), t.left_plain, t.left_plain);
    sum += group(attached, t.left_attached, w_first);
    sum += group(plain, t.left_plain, w_first);
    if (attached > 0) sum += group(attached, t.left_attached, p[1]);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) sum += term(p[i], p[i + 1]);
    sum += group(kept, t.right_kept, w_last);
    sum += group(choose2(kept), t.right_kept, t.right_kept);
    sum += group(kept * detached, t.right_kept, t.right_detached);
    sum += group(choose2(detached), t.right_detached, t.right_detached);

    const auto n = static_cast<double>(spec.order());
    const auto m = static_cast<double>(spec.edge_count());
    return m / (m - n + 2.0) * sum;
}

DumbbellOptimum optimal_dumbbell(std::int64_t n, bool near_balanced_only, bool allow_empty_clique) {
    const std::int64_t a_min = allow_empty_clique ? 0 : 1;
    DumbbellOptimum best;
    bool found = false;
    for (std::int64_t a = a_min; 2 * a + 1 <= n; ++a) {
        const std::int64_t ap_hi = near_balanced_only ? a + 1 : n - a - 1;
        for (std::int64_t ap = a; ap <= ap_hi; ++ap) {
            const DumbbellSpec s{a, n - a - ap, ap, 0};
            if (!is_feasible(s)) continue;
            const double v = sj_dumbbell(s);
            if (!found || v < best.value) {
                best = {s, v};
                found = true;
            }
        }
    }
    if (!found) throw std::invalid_argument("no dumbbell fits on " + std::to_string(n) + " vertices");
    return best;
}

TwoStepResult two_step_optimum(std::int64_t n) {
    TwoStepResult r;
    r.dumbbell = optimal_dumbbell(n, true);
    const auto [a, b, ap, ell0] = r.dumbbell.spec;
    (void)ell0;

    // Visit ell = 0, -1, 1, -2, 2, ... so a strict '<' keeps the preferred
    // candidate on exact ties.
    r.like = r.dumbbell;
    std::vector<double> values;
    const std::int64_t reach = std::max(a, ap);
    for (std::int64_t k = 1; k <= reach; ++k) {
        for (const std::int64_t ell : {-k, k}) {
            const DumbbellSpec s{a, b, ap, ell};
            if (!is_feasible(s)) continue;
            const double v = sj_dumbbell(s);
            values.push_back(v);
            if (v < r.like.value) r.like = {s, v};
        }
    }
    values.push_back(r.dumbbell.value);
    const auto shown = [](double v) { return std::llround(v * 1e4); };
    int same = 0;
    for (const double v : values) same += shown(v) == shown(r.like.value) ? 1 : 0;
    r.displayed_tie = same > 1;
    return r;
}

std::vector<DumbbellSpec> all_dumbbell_like_specs(std::int64_t n, bool allow_empty_clique) {
    std::vector<DumbbellSpec> out;
    for (std::int64_t a = allow_empty_clique ? 0 : 1; 2 * a + 1 <= n; ++a) {
        for (std::int64_t ap = a; a + ap + 1 <= n; ++ap) {
            for (const auto ell : feasible_ells(a, n - a - ap, ap)) out.push_back({a, n - a - ap, ap, ell});
        }
    }
    return out;
}

DumbbellOptimum optimal_dumbbell_like(std::int64_t n, bool allow_empty_clique) {
    DumbbellOptimum best;
    bool found = false;
    for (const auto& s : all_dumbbell_like_specs(n, allow_empty_clique)) {
        const double v = sj_dumbbell(s);
        if (!found || v < best.value) {
            best = {s, v};
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("no dumbbell-like graph fits on " + std::to_string(n) + " vertices");
    return best;
}

std::string to_csv(const DumbbellSpec& s) {
    return std::to_string(s.a) + "," + std::to_string(s.b) + "," + std::to_string(s.a_prime) + "," +
           std::to_string(s.ell);
}

DumbbellSpec parse_spec_csv(std::string_view text) {
    std::vector<std::int64_t> fields;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        char* end = nullptr;
        const long long v = std::strtoll(item.c_str(), &end, 10);
        if (item.empty() || end == item.c_str() || *end != '\0') {
            throw std::invalid_argument("dumbbell spec field '" + item + "' is not an integer");
        }
        fields.push_back(v);
    }
    if (fields.size() != 3 && fields.size() != 4) {
        throw std::invalid_argument("dumbbell spec needs 'a,b,a'[,ell]', got '" + std::string(text) + "'");
    }
    DumbbellSpec s{fields[0], fields[1], fields[2], fields.size() == 4 ? fields[3] : 0};
    validate(s);
    return s;
}

}  // namespace sumbalaban
