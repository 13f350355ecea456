#include "sumbalaban/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumbalaban/asymptotics.hpp"
#include "sumbalaban/dumbbell.hpp"
#include "sumbalaban/enumerate.hpp"
#include "sumbalaban/extremal.hpp"
#include "sumbalaban/graph6.hpp"
#include "sumbalaban/indices.hpp"
#include "sumbalaban/parallel.hpp"

#ifndef SUMBALABAN_DATA_DIR
#define SUMBALABAN_DATA_DIR "data"
#endif

namespace sumbalaban::cli {

namespace {

using Json = nlohmann::ordered_json;

// Exhaustive search from this order on is slow enough to need --long.
constexpr std::int64_t kLongOrder = 10;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join(const std::vector<std::string>& items, char sep) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) s += sep;
        s += items[i];
    }
    return s;
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Context {
    const RunConfig& config;
    std::istream& in;
    std::ostream& out;
    std::ostream& err;

    bool json() const { return config.format == Format::json; }

    Json wall_time(double seconds) const { return config.omit_timing ? Json(nullptr) : Json(seconds); }

    void log(const std::string& message) const {
        if (config.verbosity > 0) err << "sumbalaban: " << message << "\n";
    }
};

std::pair<std::int64_t, std::int64_t> n_range(const RunConfig& c, const char* what) {
    if (c.n && (c.n_from || c.n_to)) throw UsageError(std::string(what) + ": use either --n or --n-from/--n-to");
    if (c.n) return {*c.n, *c.n};
    if (c.n_from && c.n_to) {
        if (*c.n_from > *c.n_to) throw UsageError(std::string(what) + ": --n-from exceeds --n-to");
        return {*c.n_from, *c.n_to};
    }
    if (c.n_from || c.n_to) throw UsageError(std::string(what) + ": --n-from and --n-to go together");
    throw UsageError(std::string(what) + ": needs --n or --n-from/--n-to");
}

IndexKind parse_index(const std::string& name) {
    if (name == "sum-balaban") return IndexKind::sum_balaban;
    if (name == "balaban") return IndexKind::balaban;
    throw UsageError("unknown index '" + name + "'");
}

Json constraints_json(const SearchConstraints& c) {
    return Json{{"n", c.n}, {"min_edges", c.min_edges}, {"max_edges", c.max_edges}, {"max_degree", c.max_degree}};
}

// --- index ------------------------------------------------------------------

int cmd_index(const Context& ctx) {
    std::vector<std::string> inputs = ctx.config.inputs;
    if (inputs.empty()) inputs.push_back("-");

    Json rows = Json::array();
    if (!ctx.json()) ctx.out << "graph6,n,m,sum_balaban,balaban\n";
    for (const auto& path : inputs) {
        std::ifstream file;
        std::istream* stream = &ctx.in;
        if (path != "-") {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open " + path);
            stream = &file;
        }
        std::size_t line = 0;
        for_each_graph6(*stream, [&](const Graph& g, std::string_view text) {
            ++line;
            if (g.order() < 2) throw std::runtime_error(path + ": graph " + std::to_string(line) + " has fewer than 2 vertices");
            if (!is_connected(g)) throw std::runtime_error(path + ": graph " + std::to_string(line) + " is disconnected");
            const auto w = transmissions(g);
            const double sj = sum_balaban(g, w);
            const double j = balaban(g, w);
            if (ctx.json()) {
                rows.push_back({{"graph6", text}, {"n", g.order()}, {"m", g.size()}, {"sum_balaban", sj}, {"balaban", j}});
            } else {
                ctx.out << text << ',' << g.order() << ',' << g.size() << ',' << full(sj) << ',' << full(j) << '\n';
            }
        });
    }
    if (ctx.json()) ctx.out << Json{{"report", "index"}, {"graphs", rows}}.dump(2) << '\n';
    return 0;
}

// --- dumbbell ---------------------------------------------------------------

int cmd_dumbbell(const Context& ctx) {
    if (ctx.config.spec.empty()) throw UsageError("dumbbell: needs --spec a,b,a'[,ell]");
    const auto s = parse_spec_csv(ctx.config.spec);
    const double sj = sj_dumbbell(s);
    std::string g6;
    if (ctx.config.emit_graph6) {
        if (s.order() > static_cast<std::int64_t>(kGraph6MaxOrder)) {
            throw std::runtime_error("graph6 output needs n <= " + std::to_string(kGraph6MaxOrder));
        }
        g6 = encode_graph6(make_dumbbell_like(s));
    }
    if (ctx.json()) {
        Json j{{"report", "dumbbell"}, {"a", s.a}, {"b", s.b}, {"a_prime", s.a_prime}, {"ell", s.ell},
               {"n", s.order()}, {"m", s.edge_count()}, {"sum_balaban", sj}};
        if (ctx.config.emit_graph6) j["graph6"] = g6;
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << "a,b,a_prime,ell,n,m,sum_balaban" << (ctx.config.emit_graph6 ? ",graph6" : "") << '\n';
        ctx.out << s.a << ',' << s.b << ',' << s.a_prime << ',' << s.ell << ',' << s.order() << ',' << s.edge_count()
                << ',' << full(sj);
        if (ctx.config.emit_graph6) ctx.out << ',' << g6;
        ctx.out << '\n';
    }
    return 0;
}

// --- two-step ---------------------------------------------------------------

int cmd_two_step(const Context& ctx) {
    const auto [lo, hi] = n_range(ctx.config, "two-step");
    if (lo < 3) throw UsageError("two-step: n must be at least 3");
    std::vector<TwoStepResult> rows(static_cast<std::size_t>(hi - lo + 1));
    parallel_for(rows.size(), ctx.config.threads,
                 [&](std::size_t i) { rows[i] = two_step_optimum(lo + static_cast<std::int64_t>(i)); });

    if (ctx.json()) {
        Json list = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            const auto& d = r.dumbbell.spec;
            list.push_back({{"n", lo + static_cast<std::int64_t>(i)}, {"a", d.a}, {"a_prime", d.a_prime}, {"b", d.b},
                            {"sj_dumbbell", r.dumbbell.value}, {"ell", r.like.spec.ell},
                            {"sj_dumbbell_like", r.like.value}, {"displayed_tie", r.displayed_tie}});
        }
        ctx.out << Json{{"report", "two-step"}, {"rows", list}}.dump(2) << '\n';
    } else {
        ctx.out << "n,a,a_prime,b,sj_dumbbell,ell,sj_dumbbell_like\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            const auto& d = r.dumbbell.spec;
            ctx.out << lo + static_cast<std::int64_t>(i) << ',' << d.a << ',' << d.a_prime << ',' << d.b << ','
                    << fixed(r.dumbbell.value, 4) << ',' << r.like.spec.ell << ',' << fixed(r.like.value, 4) << '\n';
        }
    }
    return 0;
}

// --- search -----------------------------------------------------------------

SearchConstraints search_constraints(const RunConfig& c) {
    if (!c.n) throw UsageError("search: needs --n");
    if (*c.n < 2) throw UsageError("search: n must be at least 2");
    auto sc = SearchConstraints::defaults(static_cast<std::size_t>(*c.n));
    if (c.min_edges) sc.min_edges = *c.min_edges;
    if (c.max_edges) sc.max_edges = *c.max_edges;
    if (c.max_degree) sc.max_degree = *c.max_degree;
    sc.validate();
    if (*c.n >= kLongOrder && !c.long_run) {
        throw UsageError("search: n >= " + std::to_string(kLongOrder) + " is a long run; pass --long to proceed");
    }
    return sc;
}

int cmd_search(const Context& ctx) {
    const auto sc = search_constraints(ctx.config);
    const auto kind = parse_index(ctx.config.index);
    ctx.log("searching " + sc.describe());
    Stopwatch clock;
    const auto r = min_index_search(sc, kind, ctx.config.threads);
    const double seconds = clock.seconds();
    ctx.log("examined " + std::to_string(r.examined) + " classes in " + fixed(seconds, 2) + " s");

    if (ctx.json()) {
        Json j{{"report", "search"},
               {"n", sc.n},
               {"index", index_name(kind)},
               {"constraints", constraints_json(sc)},
               {"best_value", r.best_value},
               {"witnesses", r.witnesses},
               {"examined", r.examined},
               {"wall_time", ctx.wall_time(seconds)}};
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << "n,min_edges,max_edges,max_degree,index,best_value,examined,wall_time,witnesses\n";
        ctx.out << sc.n << ',' << sc.min_edges << ',' << sc.max_edges << ',' << sc.max_degree << ','
                << index_name(kind) << ',' << full(r.best_value) << ',' << r.examined << ','
                << (ctx.config.omit_timing ? "" : fixed(seconds, 3)) << ',' << join(r.witnesses, ';') << '\n';
    }
    return 0;
}

// --- verify-figures ---------------------------------------------------------

int cmd_verify_figures(const Context& ctx) {
    const std::string path =
        ctx.config.fixtures.empty() ? std::string(SUMBALABAN_DATA_DIR) + "/figures.json" : ctx.config.fixtures;
    const auto fixtures = load_figure_fixtures(path);

    std::vector<std::int64_t> wanted = ctx.config.ns;
    if (wanted.empty()) {
        if (ctx.config.n) {
            wanted.push_back(*ctx.config.n);
        } else {
            for (std::int64_t n = 3; n <= 9; ++n) wanted.push_back(n);
        }
    }
    for (const auto n : wanted) {
        if (n < 3 || n > 14) throw UsageError("verify-figures: n must lie in 3..14");
        if (n >= kLongOrder && !ctx.config.long_run) {
            throw UsageError("verify-figures: n >= " + std::to_string(kLongOrder) + " is a long run; pass --long");
        }
    }

    bool all_ok = true;
    Json panels = Json::array();
    if (!ctx.json()) ctx.out << "n,panel,edges,best_value,witnesses,verified,balaban_verified,wall_time\n";
    for (const auto n : wanted) {
        bool any = false;
        for (const auto& f : fixtures) {
            if (static_cast<std::int64_t>(f.n) != n) continue;
            any = true;
            const auto sc = f.constraints.value_or(figure_constraints(f.n));
            ctx.log("panel " + f.panel + ": searching " + sc.describe());
            Stopwatch clock;
            const auto g = f.sum_balaban_graph();
            const auto r = min_sj_search(sc, ctx.config.threads);
            const bool ok = result_contains(r, g);
            // The Balaban variant is only meaningful where the search is exhaustive.
            std::optional<bool> balaban_ok;
            if (f.n <= 10 && !f.constraints) {
                const auto rj = min_index_search(sc, IndexKind::balaban, ctx.config.threads);
                balaban_ok = result_contains(rj, f.balaban_graph());
                all_ok = all_ok && *balaban_ok;
            }
            const double seconds = clock.seconds();
            all_ok = all_ok && ok;
            if (ctx.json()) {
                panels.push_back({{"n", f.n},
                                  {"panel", f.panel},
                                  {"edges", g.size()},
                                  {"constraints", constraints_json(sc)},
                                  {"best_value", r.best_value},
                                  {"witnesses", r.witnesses},
                                  {"examined", r.examined},
                                  {"verified", ok},
                                  {"balaban_verified", balaban_ok ? Json(*balaban_ok) : Json(nullptr)},
                                  {"wall_time", ctx.wall_time(seconds)}});
            } else {
                ctx.out << f.n << ',' << f.panel << ',' << g.size() << ',' << full(r.best_value) << ','
                        << join(r.witnesses, ';') << ',' << (ok ? "true" : "false") << ','
                        << (balaban_ok ? (*balaban_ok ? "true" : "false") : "") << ','
                        << (ctx.config.omit_timing ? "" : fixed(seconds, 3)) << '\n';
            }
        }
        if (!any) throw std::runtime_error("no fixture for n = " + std::to_string(n) + " in " + path);
    }
    if (ctx.json()) {
        ctx.out << Json{{"report", "verify-figures"}, {"panels", panels}, {"all_verified", all_ok}}.dump(2) << '\n';
    }
    return all_ok ? 0 : 1;
}

// --- constants --------------------------------------------------------------

int cmd_constants(const Context& ctx) {
    if (ctx.json()) {
        Json j{{"report", "constants"},
               {"q_constant", q_constant()},
               {"clique_coefficient", clique_coefficient()},
               {"sj_limit", sj_limit()}};
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << "name,value\n";
        ctx.out << "q_constant," << full(q_constant()) << '\n';
        ctx.out << "clique_coefficient," << full(clique_coefficient()) << '\n';
        ctx.out << "sj_limit," << full(sj_limit()) << '\n';
    }
    return 0;
}

// --- converge ---------------------------------------------------------------

int cmd_converge(const Context& ctx) {
    std::vector<std::int64_t> ns = ctx.config.ns;
    if (ns.empty() && ctx.config.n) ns.push_back(*ctx.config.n);
    if (ns.empty()) ns = {1000, 10000, 100000, 1000000};
    Stopwatch clock;
    const auto r = convergence_study(ns, ctx.config.threads);
    ctx.log("convergence study took " + fixed(clock.seconds(), 2) + " s");

    if (ctx.json()) {
        Json traces = Json::array();
        for (const auto& t : r.traces) {
            traces.push_back({{"n", t.n}, {"a_star", t.a_star}, {"b", t.b}, {"sj_star", t.sj_star},
                              {"ratio_a_sqrt_n", t.ratio}});
        }
        Json j{{"report", "converge"},
               {"q_constant", r.q_constant},
               {"clique_coefficient", r.clique_coefficient},
               {"sj_limit", r.sj_limit},
               {"traces", traces}};
        ctx.out << j.dump(2) << '\n';
    } else {
        ctx.out << "n,a_star,b,sj_star,ratio_a_sqrt_n\n";
        for (const auto& t : r.traces) {
            ctx.out << t.n << ',' << t.a_star << ',' << t.b << ',' << full(t.sj_star) << ',' << full(t.ratio) << '\n';
        }
    }
    return 0;
}

// --- c1-scan ----------------------------------------------------------------

int cmd_c1_scan(const Context& ctx) {
    const auto [lo, hi] = n_range(ctx.config, "c1-scan");
    if (lo < 3) throw UsageError("c1-scan: n must be at least 3");
    const auto rows = conjecture_c1_scan(lo, hi, ctx.config.threads);
    std::size_t violations = 0;
    for (const auto& e : rows) violations += e.near_balanced ? 0 : 1;

    if (ctx.json()) {
        Json list = Json::array();
        auto spec = [](const DumbbellOptimum& o) {
            return Json{{"a", o.spec.a}, {"b", o.spec.b}, {"a_prime", o.spec.a_prime}, {"sj", o.value}};
        };
        for (const auto& e : rows) {
            list.push_back({{"n", e.n},
                            {"best", spec(e.best)},
                            {"near_balanced", e.near_balanced},
                            {"best_with_empty", spec(e.best_with_empty)},
                            {"near_balanced_with_empty", e.near_balanced_with_empty}});
        }
        ctx.out << Json{{"report", "c1-scan"}, {"rows", list}, {"violations", violations}}.dump(2) << '\n';
    } else {
        ctx.out << "n,a,b,a_prime,sj,near_balanced,empty_a,empty_b,empty_a_prime,empty_sj,empty_near_balanced\n";
        for (const auto& e : rows) {
            const auto& s = e.best.spec;
            const auto& z = e.best_with_empty.spec;
            ctx.out << e.n << ',' << s.a << ',' << s.b << ',' << s.a_prime << ',' << full(e.best.value) << ','
                    << (e.near_balanced ? "true" : "false") << ',' << z.a << ',' << z.b << ',' << z.a_prime << ','
                    << full(e.best_with_empty.value) << ',' << (e.near_balanced_with_empty ? "true" : "false")
                    << '\n';
        }
    }
    ctx.log(std::to_string(violations) + " n with an unbalanced minimiser");
    return 0;
}

// --- c3-check ---------------------------------------------------------------

int cmd_c3_check(const Context& ctx) {
    std::int64_t lo = 3, hi = 9;
    if (ctx.config.n || ctx.config.n_from || ctx.config.n_to) std::tie(lo, hi) = n_range(ctx.config, "c3-check");
    if (lo < 2 || hi > 10) throw UsageError("c3-check: n must lie in 2..10");
    if (hi >= kLongOrder && !ctx.config.long_run) throw UsageError("c3-check: n = 10 is a long run; pass --long");

    Json list = Json::array();
    if (!ctx.json()) ctx.out << "n,global_min,witnesses,best_like,best_like_value,gap,witness_dumbbell_like,witness_spec\n";
    for (std::int64_t n = lo; n <= hi; ++n) {
        const auto r = conjecture_c3_spotcheck(static_cast<std::size_t>(n), ctx.config.threads);
        if (ctx.json()) {
            list.push_back({{"n", n},
                            {"global_min", r.global.best_value},
                            {"witnesses", r.global.witnesses},
                            {"best_like", to_csv(r.best_like.spec)},
                            {"best_like_value", r.best_like.value},
                            {"gap", r.gap},
                            {"witness_dumbbell_like", r.witness_spec.has_value()},
                            {"witness_spec", r.witness_spec ? Json(to_csv(*r.witness_spec)) : Json(nullptr)}});
        } else {
            ctx.out << n << ',' << full(r.global.best_value) << ',' << join(r.global.witnesses, ';') << ",\""
                    << to_csv(r.best_like.spec) << "\"," << full(r.best_like.value) << ',' << full(r.gap) << ','
                    << (r.witness_spec ? "true" : "false") << ','
                    << (r.witness_spec ? "\"" + to_csv(*r.witness_spec) + "\"" : "") << '\n';
        }
    }
    if (ctx.json()) ctx.out << Json{{"report", "c3-check"}, {"rows", list}}.dump(2) << '\n';
    return 0;
}

int dispatch(const Context& ctx) {
    const auto& s = ctx.config.subcommand;
    if (s == "index") return cmd_index(ctx);
    if (s == "dumbbell") return cmd_dumbbell(ctx);
    if (s == "two-step") return cmd_two_step(ctx);
    if (s == "search") return cmd_search(ctx);
    if (s == "verify-figures") return cmd_verify_figures(ctx);
    if (s == "constants") return cmd_constants(ctx);
    if (s == "converge") return cmd_converge(ctx);
    if (s == "c1-scan") return cmd_c1_scan(ctx);
    if (s == "c3-check") return cmd_c3_check(ctx);
    throw UsageError("unknown subcommand '" + s + "'");
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
    RunConfig c;
    c.threads = default_thread_count();
    std::string format = "csv";

    CLI::App app{"Sum-Balaban index toolkit: exact indices, dumbbell optima, and exhaustive extremal search"};
    app.name("sumbalaban");
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("-t,--threads", c.threads, "Worker threads (default: SUMBALABAN_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    app.add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("-o,--output", c.output, "Write the report to this file instead of stdout");
    app.add_flag("-v,--verbose", c.verbosity, "Progress and timing on stderr");

    auto add_n = [&](CLI::App* sub) { sub->add_option("-n,--n", c.n, "Number of vertices"); };
    auto add_range = [&](CLI::App* sub) {
        add_n(sub);
        sub->add_option("--n-from", c.n_from, "First n of a range");
        sub->add_option("--n-to", c.n_to, "Last n of a range");
    };

    auto* index = app.add_subcommand("index", "SJ and J for each graph6 line of the inputs (stdin by default)");
    index->add_option("inputs", c.inputs, "graph6 files; '-' reads stdin");

    auto* dumbbell = app.add_subcommand("dumbbell", "SJ of the dumbbell-like graph with the given parameters");
    dumbbell->add_option("-s,--spec", c.spec, "a,b,a'[,ell]")->required();
    dumbbell->add_flag("--graph6", c.emit_graph6, "Also print the graph in graph6");

    auto* two_step = app.add_subcommand("two-step", "Best near-balanced dumbbell and its best ell, per n");
    add_range(two_step);

    auto* search = app.add_subcommand("search", "Exhaustive minimum of an index over connected graphs");
    add_n(search);
    search->add_option("--min-edges", c.min_edges, "Smallest edge count");
    search->add_option("--max-edges", c.max_edges, "Largest edge count");
    search->add_option("--max-degree", c.max_degree, "Degree cap");
    search->add_option("--index", c.index, "Index to minimise")->check(CLI::IsMember({"sum-balaban", "balaban"}));
    search->add_flag("--long", c.long_run, "Allow runs with n >= 10");
    search->add_flag("--omit-timing", c.omit_timing, "Report wall_time as null for reproducible output");

    auto* verify = app.add_subcommand("verify-figures", "Check the bundled extremal drawings against the search");
    add_n(verify);
    verify->add_option("--ns", c.ns, "Orders to check (default 3..9)")->delimiter(',');
    verify->add_option("--fixtures", c.fixtures, "Fixture file (default: bundled figures.json)");
    verify->add_flag("--long", c.long_run, "Allow n >= 10 (n = 11..14 use constrained windows)");
    verify->add_flag("--omit-timing", c.omit_timing, "Report wall_time as null");

    app.add_subcommand("constants", "Limit constants of the balanced dumbbell family");

    auto* converge = app.add_subcommand("converge", "Balanced dumbbell optimum for growing n");
    add_n(converge);
    converge->add_option("--ns", c.ns, "Comma-separated orders (default 1e3,1e4,1e5,1e6)")->delimiter(',');

    auto* c1 = app.add_subcommand("c1-scan", "Whether unrestricted dumbbell minimisers have a' in {a, a+1}");
    add_range(c1);

    auto* c3 = app.add_subcommand("c3-check", "Global minimum against the best dumbbell-like graph (n <= 10)");
    add_range(c3);
    c3->add_flag("--long", c.long_run, "Allow n = 10");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        exit_code = app.exit(e, out, err);
        if (exit_code != 0) exit_code = 2;
        return std::nullopt;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    c.format = format == "json" ? Format::json : Format::csv;
    exit_code = 0;
    return c;
}

int execute(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (config.threads < 1) throw UsageError("thread count must be at least 1");
        std::ostringstream report;
        const Context ctx{config, in, report, err};
        const int code = dispatch(ctx);
        if (config.output.empty()) {
            out << report.str();
        } else {
            std::ofstream file(config.output);
            if (!file) throw std::runtime_error("cannot write " + config.output);
            file << report.str();
        }
        return code;
    } catch (const std::exception& e) {
        err << "sumbalaban: error: " << e.what() << '\n';
        return 2;
    }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    int code = 0;
    const auto config = parse_args(args, out, err, code);
    if (!config) return code;
    return execute(*config, in, out, err);
}

}  // namespace sumbalaban::cli
