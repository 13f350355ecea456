#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sumbalaban/canonical.hpp"
#include "sumbalaban/dumbbell.hpp"
#include "sumbalaban/indices.hpp"

using namespace sumbalaban;

namespace {

struct Row {
    int n, a, a_prime, b;
    double sj;
    int ell;
    double sj_like;
};

// Published optimum table for 190 <= n <= 210, 4 decimals.
const Row kTable[] = {
    {190, 14, 15, 161, 4.6411, -5, 4.6405}, {191, 14, 15, 162, 4.6405, -3, 4.6401},
    {192, 14, 15, 163, 4.6399, -2, 4.6397}, {193, 14, 15, 164, 4.6394, -1, 4.6393},
    {194, 14, 15, 165, 4.6389, 0, 4.6389},  {195, 14, 15, 166, 4.6386, 1, 4.6385},
    {196, 14, 15, 167, 4.6383, 2, 4.6381},  {197, 14, 15, 168, 4.6381, 3, 4.6377},
    {198, 14, 15, 169, 4.6379, 4, 4.6373},  {199, 14, 15, 170, 4.6379, 6, 4.6369},
    {200, 14, 15, 171, 4.6379, 7, 4.6365},  {201, 15, 15, 171, 4.6372, -6, 4.6361},
    {202, 15, 15, 172, 4.6364, -5, 4.6357}, {203, 15, 15, 173, 4.6357, -4, 4.6353},
    {204, 15, 15, 174, 4.6351, -3, 4.6349}, {205, 15, 15, 175, 4.6346, -2, 4.6345},
    {206, 15, 15, 176, 4.6341, 0, 4.6341},  {207, 15, 15, 177, 4.6337, 0, 4.6337},
    {208, 15, 15, 178, 4.6334, 0, 4.6334},  {209, 15, 15, 179, 4.6331, 1, 4.6331},
    {210, 15, 15, 180, 4.6329, 3, 4.6328},
};

double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(x), std::abs(y)); }

DumbbellSpec random_spec(std::mt19937_64& rng, std::int64_t max_n) {
    for (;;) {
        const auto a = static_cast<std::int64_t>(rng() % 40);
        const auto ap = a + static_cast<std::int64_t>(rng() % 20);
        const auto b = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_n));
        if (a + b + ap > max_n || a + b + ap < 2) continue;
        const auto ells = feasible_ells(a, b, ap);
        const DumbbellSpec s{a, b, ap, ells[rng() % ells.size()]};
        if (is_feasible(s)) return s;
    }
}

}  // namespace

TEST_CASE("construction examples") {
    CHECK(are_isomorphic(make_dumbbell({1, 1, 1, 0}), path_graph(3)));
    const auto d222 = make_dumbbell({2, 2, 2, 0});
    CHECK(d222.order() == 6);
    CHECK(d222.size() == 7);
    const auto d274 = make_dumbbell({2, 7, 4, 0});
    CHECK(d274.order() == 13);
    CHECK(d274.size() == 19);
    CHECK(make_dumbbell_like({2, 2, 2, 0}) == d222);
    // Balanced case: m = a^2 + a + b - 1.
    for (std::int64_t a = 1; a <= 6; ++a)
        for (std::int64_t b = 1; b <= 6; ++b)
            CHECK(static_cast<std::int64_t>(make_dumbbell({a, b, a, 0}).size()) == a * a + a + b - 1);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(validate({3, 2, 2, 0}), std::invalid_argument);   // a > a'
    CHECK_THROWS_AS(validate({1, 0, 1, 0}), std::invalid_argument);   // b < 1
    CHECK_THROWS_AS(validate({0, 1, 0, 0}), std::invalid_argument);   // n < 2
    CHECK_THROWS_AS(validate({2, 1, 3, 1}), std::invalid_argument);   // ell > 0 needs b >= 2
    CHECK_THROWS_AS(validate({2, 4, 3, 3}), std::invalid_argument);   // ell > a
    CHECK_THROWS_AS(validate({2, 4, 3, -3}), std::invalid_argument);  // ell < -(a'-1)
    CHECK_NOTHROW(validate({2, 1, 3, -2}));
    CHECK_NOTHROW(validate({0, 3, 2, 0}));
    CHECK_THROWS_AS(make_dumbbell({2, 4, 3, 1}), std::invalid_argument);
    CHECK(feasible_ells(2, 4, 3) == std::vector<std::int64_t>{-2, -1, 0, 1, 2});
    CHECK(feasible_ells(2, 1, 3) == std::vector<std::int64_t>{-2, -1, 0});
    CHECK(feasible_ells(0, 3, 1) == std::vector<std::int64_t>{0});
}

TEST_CASE("edge counts") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 200; ++t) {
        const auto s = random_spec(rng, 60);
        const auto g = make_dumbbell_like(s);
        CHECK(static_cast<std::int64_t>(g.order()) == s.order());
        CHECK(static_cast<std::int64_t>(g.size()) == s.edge_count());
    }
}

TEST_CASE("closed-form transmissions match BFS") {
    const auto small = closed_form_transmissions(1, 1);
    CHECK(small.w_clique == 3);
    CHECK(small.w_path == std::vector<double>{2});
    const auto d22 = closed_form_transmissions(2, 2);
    CHECK(d22.w_clique == 10);
    CHECK(d22.w_path[0] == 7);

    auto check = [](std::int64_t a, std::int64_t b) {
        const auto cf = closed_form_transmissions(a, b);
        const auto w = transmissions(make_dumbbell({a, b, a, 0}));
        bool ok = true;
        for (std::int64_t u = 0; u < a; ++u) {
            ok = ok && cf.w_clique == static_cast<double>(w[static_cast<Vertex>(u)]);
            ok = ok && cf.w_clique == static_cast<double>(w[static_cast<Vertex>(a + b + u)]);
        }
        for (std::int64_t i = 0; i < b; ++i)
            ok = ok && cf.w_path[static_cast<std::size_t>(i)] == static_cast<double>(w[static_cast<Vertex>(a + i)]);
        return ok;
    };
    for (std::int64_t a = 1; a <= 20; ++a)
        for (std::int64_t b = 2; b <= 40; ++b) CHECK_MESSAGE(check(a, b), "a=" << a << " b=" << b);
    CHECK(check(14, 165));
}

TEST_CASE("analytic transmissions match BFS for every small spec") {
    for (std::int64_t n = 2; n <= 22; ++n) {
        for (const auto& s : all_dumbbell_like_specs(n)) {
            const auto g = make_dumbbell_like(s);
            CHECK_MESSAGE(dumbbell_transmissions(s) == transmissions(g), to_csv(s));
        }
    }
}

TEST_CASE("O(n) evaluation matches the explicit graph") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 200; ++t) {
        const auto s = random_spec(rng, 300);
        const auto g = make_dumbbell_like(s);
        CHECK_MESSAGE(rel(sj_dumbbell(s), sum_balaban(g)) <= 1e-12, to_csv(s));
    }
    CHECK(sj_dumbbell({1, 1, 1, 0}) == doctest::Approx(4 / std::sqrt(5.0)).epsilon(1e-15));
}

TEST_CASE("dumbbell-like graphs are connected") {
    for (std::int64_t n = 2; n <= 16; ++n)
        for (const auto& s : all_dumbbell_like_specs(n)) CHECK(is_connected(make_dumbbell_like(s)));
}

TEST_CASE("choice of clique endpoints does not matter") {
    // Rebuild the graph with a random set of clique vertices receiving (or
    // losing) the extra edges and compare up to isomorphism.
    std::mt19937_64 rng(67);
    for (std::int64_t n = 3; n <= 20; ++n) {
        for (const auto& s : all_dumbbell_like_specs(n)) {
            if (s.ell == 0) continue;
            const auto base = make_dumbbell({s.a, s.b, s.a_prime, 0});
            std::vector<Edge> edges = base.edges();
            const Vertex v1 = static_cast<Vertex>(s.a + 1);
            const Vertex vlast = static_cast<Vertex>(s.a + s.b - 1);
            if (s.ell > 0) {
                std::vector<Vertex> clique(static_cast<std::size_t>(s.a));
                std::iota(clique.begin(), clique.end(), Vertex{0});
                std::shuffle(clique.begin(), clique.end(), rng);
                for (std::int64_t i = 0; i < s.ell; ++i) edges.push_back({clique[static_cast<std::size_t>(i)], v1});
            } else {
                std::vector<Vertex> clique(static_cast<std::size_t>(s.a_prime));
                std::iota(clique.begin(), clique.end(), static_cast<Vertex>(s.a + s.b));
                std::shuffle(clique.begin(), clique.end(), rng);
                std::vector<Edge> drop;
                for (std::int64_t i = 0; i < -s.ell; ++i) drop.push_back({vlast, clique[static_cast<std::size_t>(i)]});
                std::erase_if(edges, [&](const Edge& e) {
                    return std::any_of(drop.begin(), drop.end(), [&](const Edge& d) {
                        return (e.u == d.u && e.v == d.v) || (e.u == d.v && e.v == d.u);
                    });
                });
            }
            const auto other = Graph::from_edge_list(base.order(), edges);
            CHECK_MESSAGE(are_isomorphic(other, make_dumbbell_like(s)), to_csv(s));
        }
    }
}

TEST_CASE("published optimum table") {
    for (const auto& row : kTable) {
        const auto r = two_step_optimum(row.n);
        CHECK(r.dumbbell.spec == DumbbellSpec{row.a, row.b, row.a_prime, 0});
        CHECK(r.like.spec == DumbbellSpec{row.a, row.b, row.a_prime, row.ell});
        CHECK(std::abs(r.dumbbell.value - row.sj) <= 5e-5);
        CHECK(std::abs(r.like.value - row.sj_like) <= 5e-5);
        const auto near = optimal_dumbbell(row.n, true);
        CHECK(near.spec == r.dumbbell.spec);
    }
    CHECK(sj_dumbbell({14, 161, 15, -5}) == doctest::Approx(4.6405).epsilon(2e-5));
    CHECK(sj_dumbbell({14, 166, 15, 1}) == doctest::Approx(4.6385).epsilon(2e-5));
    CHECK(sj_dumbbell({15, 180, 15, 0}) == doctest::Approx(4.6329).epsilon(2e-5));
}

TEST_CASE("thirteen vertices") {
    const auto full = optimal_dumbbell(13, false);
    CHECK(full.spec == DumbbellSpec{2, 7, 4, 0});
    CHECK(full.value < sj_dumbbell({3, 6, 4, 0}));
    const auto two = two_step_optimum(13);
    CHECK(two.dumbbell.spec == DumbbellSpec{3, 6, 4, 0});
    const auto best = optimal_dumbbell_like(13);
    CHECK(two.like.value <= best.value + 1e-12);
}

TEST_CASE("spec csv") {
    CHECK(to_csv({14, 161, 15, -5}) == "14,161,15,-5");
    CHECK(parse_spec_csv("14,161,15,-5") == DumbbellSpec{14, 161, 15, -5});
    CHECK(parse_spec_csv("2,2,2") == DumbbellSpec{2, 2, 2, 0});
    CHECK_THROWS_AS(parse_spec_csv("2,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec_csv("2,x,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec_csv("3,2,2"), std::invalid_argument);
}
