#include "sumbalaban/extremal.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "sumbalaban/canonical.hpp"
#include "sumbalaban/graph6.hpp"

namespace sumbalaban {

namespace {

// Best value of one generation subtree plus every graph close enough to it.
struct Partial {
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, Graph>> near;
    std::uint64_t examined = 0;

    void offer(double v, const Graph& g) {
        ++examined;
        if (v > best + kWitnessTolerance) return;
        if (v < best) {
            best = v;
            std::erase_if(near, [&](const auto& p) { return p.first > best + kWitnessTolerance; });
        }
        near.emplace_back(v, g);
    }
};

std::size_t split_depth(std::size_t n) { return n > 4 ? n - 3 : n; }

}  // namespace

SearchResult min_index_search(const SearchConstraints& c, IndexKind kind, std::size_t threads) {
    c.validate();
    if (c.n < 2) throw std::invalid_argument("index search needs n >= 2");

    const auto units = split_generation(c, split_depth(c.n));
    std::vector<Partial> parts(units.size());
    parallel_for(units.size(), threads, [&](std::size_t i) {
        Partial& p = parts[i];
        generate_from(c, units[i], [&](const Graph& g) { p.offer(evaluate_index(kind, g), g); });
    });

    SearchResult r;
    r.index = kind;
    r.constraints = c;
    r.best_value = std::numeric_limits<double>::infinity();
    for (const auto& p : parts) {
        r.best_value = std::min(r.best_value, p.best);
        r.examined += p.examined;
    }
    std::set<std::string> witnesses;
    for (const auto& p : parts) {
        for (const auto& [v, g] : p.near) {
            if (v <= r.best_value + kWitnessTolerance) witnesses.insert(canonical_form(g).graph6);
        }
    }
    r.witnesses.assign(witnesses.begin(), witnesses.end());
    return r;
}

SearchResult min_sj_search(const SearchConstraints& c, std::size_t threads) {
    return min_index_search(c, IndexKind::sum_balaban, threads);
}

SearchConstraints figure_constraints(std::size_t n) {
    if (n <= 10) return SearchConstraints::defaults(n);
    if (n <= 12) return {n, n, 22, 5};
    if (n <= 14) return {n, 15, 20, 5};
    throw std::invalid_argument("no figure window for n = " + std::to_string(n));
}

bool result_contains(const SearchResult& result, const Graph& g) {
    const auto form = canonical_form(g).graph6;
    return std::binary_search(result.witnesses.begin(), result.witnesses.end(), form);
}

bool verify_figure(std::size_t n, const Graph& reference, std::size_t threads) {
    if (n < 3 || n > 14) throw std::invalid_argument("figure verification covers 3 <= n <= 14");
    if (reference.order() != n) return false;
    return result_contains(min_sj_search(figure_constraints(n), threads), reference);
}

namespace {

Graph build(const FigureFixture& f, bool with_dotted) {
    std::map<std::string, Vertex> index;
    for (const auto& name : f.vertices) index.emplace(name, static_cast<Vertex>(index.size()));
    std::vector<Edge> edges;
    auto add = [&](const auto& list) {
        for (const auto& [x, y] : list) edges.push_back({index.at(x), index.at(y)});
    };
    add(f.solid);
    if (with_dotted) add(f.dotted);
    return Graph::from_edge_list(f.vertices.size(), edges);
}

}  // namespace

Graph FigureFixture::sum_balaban_graph() const { return build(*this, true); }
Graph FigureFixture::balaban_graph() const { return build(*this, false); }

std::vector<FigureFixture> load_figure_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }

    std::vector<FigureFixture> out;
    try {
        for (const auto& item : doc.at("panels")) {
            FigureFixture f;
            f.n = item.at("n").get<std::size_t>();
            f.panel = item.value("panel", "");
            f.vertices = item.at("vertices").get<std::vector<std::string>>();
            f.solid = item.at("solid").get<std::vector<std::pair<std::string, std::string>>>();
            f.dotted = item.value("dotted", std::vector<std::pair<std::string, std::string>>{});
            if (item.contains("constraints")) {
                const auto& c = item["constraints"];
                f.constraints = SearchConstraints{f.n, c.at("min_edges").get<std::size_t>(),
                                                  c.at("max_edges").get<std::size_t>(),
                                                  c.at("max_degree").get<std::size_t>()};
            }

            const std::set<std::string> names(f.vertices.begin(), f.vertices.end());
            if (names.size() != f.vertices.size() || f.vertices.size() != f.n) {
                throw std::runtime_error("panel " + f.panel + ": expected " + std::to_string(f.n) +
                                         " distinct vertex names");
            }
            for (const auto* list : {&f.solid, &f.dotted}) {
                for (const auto& [x, y] : *list) {
                    if (!names.contains(x) || !names.contains(y)) {
                        throw std::runtime_error("panel " + f.panel + ": unknown vertex in edge " + x + "-" + y);
                    }
                }
            }
            out.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return out;
}

std::vector<C1Entry> conjecture_c1_scan(std::int64_t n_lo, std::int64_t n_hi, std::size_t threads) {
    if (n_lo < 3 || n_hi < n_lo) throw std::invalid_argument("c1 scan needs 3 <= n_lo <= n_hi");
    std::vector<C1Entry> out(static_cast<std::size_t>(n_hi - n_lo + 1));
    parallel_for(out.size(), threads, [&](std::size_t i) {
        C1Entry& e = out[i];
        e.n = n_lo + static_cast<std::int64_t>(i);
        e.best = optimal_dumbbell(e.n, false, false);
        e.near_balanced = e.best.spec.a_prime <= e.best.spec.a + 1;
        e.best_with_empty = optimal_dumbbell(e.n, false, true);
        e.near_balanced_with_empty = e.best_with_empty.spec.a_prime <= e.best_with_empty.spec.a + 1;
    });
    return out;
}

C3Report conjecture_c3_spotcheck(std::size_t n, std::size_t threads) {
    if (n < 2 || n > 10) throw std::invalid_argument("c3 spot check covers 2 <= n <= 10");
    C3Report r;
    r.n = n;
    r.global = min_sj_search(SearchConstraints::defaults(n), threads);
    r.best_like = optimal_dumbbell_like(static_cast<std::int64_t>(n), true);
    r.gap = r.best_like.value - r.global.best_value;
    for (const auto& s : all_dumbbell_like_specs(static_cast<std::int64_t>(n), true)) {
        if (result_contains(r.global, make_dumbbell_like(s))) {
            r.witness_spec = s;
            break;
        }
    }
    return r;
}

}  // namespace sumbalaban
