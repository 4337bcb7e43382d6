#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cayley/lab.hpp"

using namespace cayley;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    std::filesystem::path dir;
    TempDir() : dir(std::filesystem::temp_directory_path() / "cayleylab_test") {
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string prefix(const std::string& name) const { return (dir / name).string(); }
};

const char* kF2F2 = R"({"kind":"free_product",
                        "left":{"kind":"free_group","rank":2},
                        "right":{"kind":"free_group","rank":2}})";

} // namespace

TEST_CASE("group spec json round trip") {
    auto spec = lab::group_spec_from_json(
        R"({"kind":"free_product","left":{"kind":"cyclic","order":2},"right":{"kind":"cyclic","order":3}})");
    auto m = build_model(spec);
    CHECK(m->alphabet_size() == 3);
    auto again = lab::group_spec_from_json(lab::group_spec_to_json(spec));
    CHECK(build_model(again)->alphabet_size() == 3);

    auto raag = lab::group_spec_from_json(
        R"({"kind":"raag","vertices":["a","b"],"edges":[["a","b"]]})");
    CHECK(build_model(raag)->alphabet_size() == 4);
}

TEST_CASE("validate catches bad configs") {
    auto diags = lab::validate_config(
        R"({"group":{"kind":"free_product","left":{"kind":"cyclic","order":2},
            "right":{"kind":"cyclic","order":2}},
            "experiment":"census","params":{"n_max":3}})");
    REQUIRE(!diags.empty());
    CHECK(diags[0].message.find("elementary free product") != std::string::npos);

    auto unknown = lab::validate_config(
        R"({"group":{"kind":"free_group","rank":2},"experiment":"frobnicate","params":{}})");
    REQUIRE(!unknown.empty());

    auto huge = lab::validate_config(
        R"({"group":{"kind":"free_group","rank":2},"experiment":"census",
            "params":{"n_max":40}})");
    REQUIRE(!huge.empty());
    CHECK(huge[0].message.find("predicted ball size") != std::string::npos);

    auto good = lab::validate_config(
        R"({"group":{"kind":"free_group","rank":2},"experiment":"census","params":{"n_max":5}})");
    CHECK(good.empty());
}

TEST_CASE("census run writes the documented csv") {
    TempDir tmp;
    std::string cfg = std::string(R"({"group":{"kind":"free_group","rank":2},
        "experiment":"census","params":{"n_max":3},"output":")") +
                      tmp.prefix("f2_") + "\"}";
    auto rep = lab::run_config(cfg);
    REQUIRE(rep.exit_code == lab::kOk);
    auto csv = read_file(tmp.prefix("f2_census.csv"));
    CHECK(csv == "n,total,filtered,ratio\n"
                 "0,1,1,1\n"
                 "1,5,5,1\n"
                 "2,17,17,1\n"
                 "3,53,53,1\n");
}

TEST_CASE("unknown experiment exits 2") {
    auto rep = lab::run_config(
        R"({"group":{"kind":"free_group","rank":2},"experiment":"nope","params":{}})");
    CHECK(rep.exit_code == lab::kConfigError);
}

TEST_CASE("budget abort exits 3 with the abort note") {
    TempDir tmp;
    std::string cfg = std::string(R"({"group":{"kind":"free_group","rank":2},
        "experiment":"census","params":{"n_max":8,"max_streamed":100},"output":")") +
                      tmp.prefix("abort_") + "\"}";
    auto rep = lab::run_config(cfg);
    CHECK(rep.exit_code == lab::kBudgetAbort);
}

TEST_CASE("genericity run on the free product reports decay") {
    TempDir tmp;
    std::string cfg = std::string(R"({"group":)") + kF2F2 + R"(,
        "experiment":"genericity",
        "params":{"n_max":6,"predicate":"conjugate_into_factor"},
        "output":")" + tmp.prefix("gen_") + "\"}";
    auto rep = lab::run_config(cfg);
    REQUIRE(rep.exit_code == lab::kOk);
    auto csv = read_file(tmp.prefix("gen_genericity.csv"));
    CHECK(csv.rfind("n,total,filtered,ratio\n", 0) == 0);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 8); // header + rows 0..6
    auto js = read_file(tmp.prefix("gen_report.json"));
    CHECK(js.find("\"exponential_genericity_observed\": true") != std::string::npos);
}

TEST_CASE("runs are byte-identical across repeats and count-identical across threads") {
    TempDir tmp;
    auto cfg = [&](const std::string& out, int threads) {
        std::ostringstream os;
        os << R"({"group":)" << kF2F2
           << R"(,"experiment":"census","params":{"n_max":5,"predicate":"hyperbolic"},"threads":)"
           << threads << R"(,"output":")" << tmp.prefix(out) << "\"}";
        return os.str();
    };
    REQUIRE(lab::run_config(cfg("a_", 1)).exit_code == lab::kOk);
    REQUIRE(lab::run_config(cfg("b_", 1)).exit_code == lab::kOk);
    REQUIRE(lab::run_config(cfg("c_", 4)).exit_code == lab::kOk);
    auto a = read_file(tmp.prefix("a_census.csv"));
    CHECK(a == read_file(tmp.prefix("b_census.csv")));
    CHECK(a == read_file(tmp.prefix("c_census.csv")));
}

TEST_CASE("contraction experiment emits a replayable verdict") {
    TempDir tmp;
    std::string cfg = std::string(R"({"group":{"kind":"direct_product",
        "left":{"kind":"free_group","rank":2},"right":{"kind":"free_group","rank":2}},
        "experiment":"contraction",
        "params":{"axis":{"word":"a.c","extent":5},"radius":4},
        "output":")") + tmp.prefix("con_") + "\"}";
    auto rep = lab::run_config(cfg);
    REQUIRE(rep.exit_code == lab::kOk);
    auto js = read_file(tmp.prefix("con_report.json"));
    CHECK(js.find("\"estimated_constant\": \"inf\"") != std::string::npos);
    CHECK(js.find("\"witness\"") != std::string::npos);
}

TEST_CASE("paths and bbf experiments run end to end") {
    TempDir tmp;
    std::string paths_cfg = std::string(R"({"group":{"kind":"free_group","rank":2},
        "experiment":"paths",
        "params":{"path":"a.a.a.a.b.a.a.a.a","D":4,"tau":2,"L":1,"Delta":0,
          "marked":[{"begin":0,"end":4,"axis":{"word":"a","extent":8}},
                    {"begin":5,"end":9,"axis":{"word":"a","extent":8,"translate":"a.a.a.a.b"}}]},
        "output":")") + tmp.prefix("paths_") + "\"}";
    auto rep = lab::run_config(paths_cfg);
    REQUIRE(rep.exit_code == lab::kOk);
    auto js = read_file(tmp.prefix("paths_report.json"));
    CHECK(js.find("\"admissible\": true") != std::string::npos);
    CHECK(js.find("\"uniform\": true") != std::string::npos);
    CHECK(js.find("\"quasi_geodesic_constant\": 1.0") != std::string::npos);
    // the decomposition is echoed for replay
    CHECK(js.find("\"path\": \"a.a.a.a.b.a.a.a.a\"") != std::string::npos);
    CHECK(js.find("\"marked\"") != std::string::npos);

    std::string bbf_cfg = std::string(R"({"group":{"kind":"free_group","rank":2},
        "experiment":"bbf",
        "params":{"members":[{"word":"a","extent":5},
                             {"word":"a","extent":5,"translate":"b"},
                             {"word":"a","extent":5,"translate":"a.b"}],
                  "K":2,"N":4},
        "output":")") + tmp.prefix("bbf_") + "\"}";
    auto rep2 = lab::run_config(bbf_cfg);
    REQUIRE(rep2.exit_code == lab::kOk);
    auto js2 = read_file(tmp.prefix("bbf_report.json"));
    CHECK(js2.find("\"pass\": true") != std::string::npos);
    CHECK(js2.find("\"totally_geodesic_members\": true") != std::string::npos);
    CHECK(read_file(tmp.prefix("bbf_complex.csv")).rfind("u,v,weight\n", 0) == 0);
}
