#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sumbalaban/cli.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = sumbalaban::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("index on stdin") {
    const auto r = run({"index"}, "Bg\n");
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "graph6,n,m,sum_balaban,balaban");
    CHECK(rows[1].starts_with("Bg,3,2,1.78885438199983"));
    CHECK(rows[1].find(",1.63299316185545") != std::string::npos);

    const auto j = run({"index", "--format", "json"}, "Bg\nBw\n");
    CHECK(j.code == 0);
    CHECK(j.out.find("\"report\": \"index\"") != std::string::npos);
}

TEST_CASE("index rejects bad input") {
    CHECK(run({"index"}, "Bg\nC?\n").code == 2);  // disconnected
    CHECK(run({"index"}, "B!\n").code == 2);
    CHECK(run({"index", "/nonexistent.g6"}).code == 2);
}

TEST_CASE("two-step reproduces the published table") {
    const auto r = run({"two-step", "--n-from", "190", "--n-to", "210", "--format", "csv"});
    CHECK(r.code == 0);
    const std::vector<std::string> expected{
        "n,a,a_prime,b,sj_dumbbell,ell,sj_dumbbell_like",
        "190,14,15,161,4.6411,-5,4.6405", "191,14,15,162,4.6405,-3,4.6401", "192,14,15,163,4.6399,-2,4.6397",
        "193,14,15,164,4.6394,-1,4.6393", "194,14,15,165,4.6389,0,4.6389",  "195,14,15,166,4.6386,1,4.6385",
        "196,14,15,167,4.6383,2,4.6381",  "197,14,15,168,4.6381,3,4.6377",  "198,14,15,169,4.6379,4,4.6373",
        "199,14,15,170,4.6379,6,4.6369",  "200,14,15,171,4.6379,7,4.6365",  "201,15,15,171,4.6372,-6,4.6361",
        "202,15,15,172,4.6364,-5,4.6357", "203,15,15,173,4.6357,-4,4.6353", "204,15,15,174,4.6351,-3,4.6349",
        "205,15,15,175,4.6346,-2,4.6345", "206,15,15,176,4.6341,0,4.6341",  "207,15,15,177,4.6337,0,4.6337",
        "208,15,15,178,4.6334,0,4.6334",  "209,15,15,179,4.6331,1,4.6331",  "210,15,15,180,4.6329,3,4.6328",
    };
    CHECK(lines(r.out) == expected);
}

TEST_CASE("constants") {
    const auto r = run({"constants"});
    CHECK(r.code == 0);
    CHECK(r.out.find("q_constant,1.24645048") != std::string::npos);
    CHECK(r.out.find("clique_coefficient,1.0566") != std::string::npos);
    CHECK(r.out.find("sj_limit,4.47934") != std::string::npos);
}

TEST_CASE("dumbbell") {
    const auto r = run({"dumbbell", "--spec", "1,1,1", "--graph6"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(1) == "1,1,1,0,3,2,1.7888543819998317,Bg");
    CHECK(run({"dumbbell", "--spec", "3,2,2"}).code == 2);
    CHECK(run({"dumbbell"}).code == 2);
}

TEST_CASE("reports do not depend on the thread count") {
    for (const std::string fmt : {"csv", "json"}) {
        const auto a = run({"search", "-n", "8", "--omit-timing", "-f", fmt, "-t", "1"});
        const auto b = run({"search", "-n", "8", "--omit-timing", "-f", fmt, "-t", "3"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        const auto c = run({"two-step", "--n-from", "150", "--n-to", "170", "-f", fmt, "-t", "1"});
        const auto d = run({"two-step", "--n-from", "150", "--n-to", "170", "-f", fmt, "-t", "4"});
        CHECK(c.out == d.out);
        const auto e = run({"verify-figures", "--ns", "5,6", "--omit-timing", "-f", fmt, "-t", "1"});
        const auto f = run({"verify-figures", "--ns", "5,6", "--omit-timing", "-f", fmt, "-t", "2"});
        CHECK(e.code == 0);
        CHECK(e.out == f.out);
    }
}

TEST_CASE("search options") {
    const auto r = run({"search", "-n", "7", "--max-degree", "3", "--max-edges", "9", "--omit-timing"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(1).starts_with("7,6,9,3,sum-balaban,"));
    const auto j = run({"search", "-n", "5", "--index", "balaban", "-f", "json"});
    CHECK(j.out.find("\"index\": \"balaban\"") != std::string::npos);
    CHECK(j.out.find("\"wall_time\": null") == std::string::npos);

    CHECK(run({"search", "-n", "10"}).code == 2);                          // needs --long
    CHECK(run({"search", "-n", "13", "--long"}).code == 2);                // enumeration guard
    CHECK(run({"search", "-n", "6", "--min-edges", "2"}).code == 2);       // invalid window
    CHECK(run({"search"}).code == 2);
}

TEST_CASE("verify-figures exit status") {
    CHECK(run({"verify-figures", "-n", "4"}).code == 0);
    const std::string path = "wrong_fixture.json";
    {
        std::ofstream out(path);
        out << R"({"panels": [{"n": 4, "vertices": ["a", "b", "c", "d"], "solid": [["a", "b"], ["b", "c"], ["b", "d"]]}]})";
    }
    const auto r = run({"verify-figures", "-n", "4", "--fixtures", path});
    CHECK(r.code == 1);
    CHECK(r.out.find(",false,") != std::string::npos);
    CHECK(run({"verify-figures", "-n", "11"}).code == 2);  // needs --long
}

TEST_CASE("converge and scans") {
    const auto r = run({"converge", "--ns", "1000,10000"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).at(0) == "n,a_star,b,sj_star,ratio_a_sqrt_n");
    CHECK(lines(r.out).at(1).starts_with("1000,33,934,4.5507450451"));

    const auto c1 = run({"c1-scan", "--n-from", "12", "--n-to", "14", "-f", "json"});
    CHECK(c1.code == 0);
    CHECK(c1.out.find("\"violations\": 1") != std::string::npos);

    const auto c3 = run({"c3-check", "--n-from", "3", "--n-to", "5"});
    CHECK(c3.code == 0);
    CHECK(lines(c3.out).size() == 4);
    CHECK(run({"c3-check", "-n", "10"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"constants", "--format", "xml"}).code == 2);
    CHECK(run({"constants", "--threads", "0"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"two-step"}).code == 2);
    CHECK(run({"two-step", "--n-from", "20", "--n-to", "10"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output file") {
    const std::string path = "constants_report.json";
    const auto r = run({"constants", "-f", "json", "-o", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().find("\"sj_limit\"") != std::string::npos);
}
