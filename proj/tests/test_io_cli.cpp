#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dstm/cli.hpp"
#include "dstm/io.hpp"
#include "testutil.hpp"

using namespace dstm;
using namespace dstm::testutil;
using nlohmann::json;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "dstm-io-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("tensor json parses integers and rational strings") {
    auto t = parse_tensor_json(R"({"shape":[2,2],"degree":1,"entries":[1,1,1,3]})");
    CHECK(t == rational_tensor(Shape::of({2, 2}), 1, {1, 1, 1, 3}));

    auto u = parse_tensor_json(R"({"shape":[2,2],"degree":1,"entries":["1/2","-3/4","7","0/1"]}
    )");
    CHECK(u.shape == Shape::of({2, 2}));
    CHECK(u.degree == 1);
    CHECK(u.c == std::vector<Rational>{make_rational(1, 2), make_rational(-3, 4), Rational(7),
                                       Rational(0)});

    auto m = parse_tensor_json(R"({"shape":[3],"degree":2,"entries":[5,"-2/3",0]})");
    CHECK(m.c == std::vector<Rational>{Rational(5), make_rational(-2, 3), Rational(0)});
}

TEST_CASE("tensor json writes canonically and re-parses identically") {
    auto t = worked_t33();
    t.c[4] = make_rational(-7, 5);
    auto text = tensor_json(t);
    CHECK(parse_tensor_json(text) == t);
    CHECK(text.back() == '\n');
    CHECK(text.find("\"-7/5\"") != std::string::npos);
    // Canonical output is a fixed point.
    CHECK(tensor_json(parse_tensor_json(text)) == text);
}

TEST_CASE("malformed tensor documents are rejected as input errors") {
    auto rejects = [](const std::string& text) {
        try {
            parse_tensor_json(text);
            return false;
        } catch (const Error& e) {
            return e.kind() == ErrKind::input;
        }
    };
    CHECK(rejects("not json {"));
    CHECK(rejects("{}"));
    CHECK(rejects(R"({"shape":[2,2],"degree":1})"));
    CHECK(rejects(R"({"shape":3,"degree":0,"entries":[1]})"));
    CHECK(rejects(R"({"shape":[2,2.5],"degree":0,"entries":[1]})"));
    CHECK(rejects(R"({"shape":[2,0],"degree":0,"entries":[1]})"));
    CHECK(rejects(R"({"shape":[2,2],"degree":"x","entries":[1]})"));
    CHECK(rejects(R"({"shape":[2,2],"degree":-1,"entries":[1]})"));
    CHECK(rejects(R"({"shape":[2,2],"degree":0,"entries":7})"));
    CHECK(rejects(R"({"shape":[2,2],"degree":0,"entries":[true]})"));
    CHECK(rejects(R"({"shape":[2,2],"degree":0,"entries":["1/0"]})"));
    CHECK(rejects(R"({"shape":[2,2],"degree":1,"entries":[1,2,3]})"));
}

TEST_CASE("tensor files round trip and missing files are input errors") {
    auto path = temp_file("roundtrip.json");
    auto t = worked_t33();
    write_tensor_file(path.string(), t);
    CHECK(read_tensor_file(path.string()) == t);

    try {
        read_tensor_file((temp_file("") / "does-not-exist.json").string());
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::input);
    }
}

TEST_CASE("cli usage: no command, version, bad shapes") {
    CHECK(run({}).code == 2);
    auto v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out == "0.1.0\n");
    CHECK(run({"classify", "--shape", "3,x"}).code == 2);
    CHECK(run({"classify", "--shape", "0,2"}).code == 2);
    CHECK(run({"verify", "--shape", "3,3", "--suite", "nosuch"}).code == 2);
    CHECK(run({"classify", "--format", "yaml", "--shape", "3,3"}).code == 2);
}

TEST_CASE("cli classify reports threshold and strictness") {
    auto r = run({"classify", "--shape", "3,3"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["command"] == "dstm classify --shape 3,3");
    CHECK(doc["version"] == "0.1.0");
    CHECK(doc["shape"] == json::array({3, 3}));
    CHECK(doc["k"] == 2);
    CHECK(doc["n"] == 2);
    CHECK(doc["threshold"] == 2);
    CHECK(doc["strict"] == true);
    CHECK_FALSE(doc.contains("witness_degrees"));

    auto w = run({"classify", "--shape", "2,3"});
    auto wdoc = json::parse(w.out);
    CHECK(wdoc["strict"] == false);
    CHECK(wdoc["threshold"] == 2);
    CHECK(wdoc["witness_degrees"] == json::array({2, 2}));

    auto c = run({"classify", "--shape", "2,3", "--format", "csv"});
    REQUIRE(c.code == 0);
    CHECK(c.out.rfind("k,n,threshold,strict,verdict\n2,1,2,false,", 0) == 0);
}

TEST_CASE("cli ranks emits the golden table for the square shape") {
    auto r = run({"ranks", "--shape", "3,3", "--pmax", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "p,dimX,dimR,dimN,dimZ,fR,fZ,ok\n"
          "0,1,-,1,1,-,1,ok\n"
          "1,4,3,3,2,3,2,ok\n"
          "2,9,2,2,0,2,0,ok\n"
          "3,16,0,0,0,0,0,ok\n");

    auto j = run({"ranks", "--shape", "3,3", "--pmax", "3"});
    REQUIRE(j.code == 0);
    auto doc = json::parse(j.out);
    CHECK(doc["all_ok"] == true);
    CHECK(doc["rows"].size() == 4);
    CHECK(doc["rows"][1]["dimX"] == 4);
    CHECK(doc["rows"][1]["dimR"] == 3);
    CHECK(doc["rows"][0]["dimR"].is_null());
}

TEST_CASE("cli verify runs the identity suites") {
    std::vector<std::string> args = {"verify", "--shape", "3,3", "--pmax", "3",
                                     "--seed", "5",     "--trials", "3"};
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["pass"] == true);
    REQUIRE(doc["suites"].size() == 4);
    CHECK(doc["suites"][0]["suite"] == "horn");
    CHECK(doc["suites"][1]["suite"] == "normalization");
    CHECK(doc["suites"][2]["suite"] == "contraction");
    CHECK(doc["suites"][3]["suite"] == "spectral");
    for (const auto& s : doc["suites"]) {
        CHECK(s["pass"] == true);
        CHECK(s["checks"].size() > 0);
    }

    // Identical invocations are byte-identical.
    CHECK(run(args).out == r.out);

    auto one = run({"verify", "--shape", "2,3", "--suite", "contraction", "--trials", "2"});
    REQUIRE(one.code == 0);
    CHECK(json::parse(one.out)["suites"].size() == 1);
}

TEST_CASE("cli realize reports the worked example end to end") {
    auto path = temp_file("t33.json");
    write_tensor_file(path.string(), worked_t33());

    std::vector<std::string> args = {"realize", "--tensor", path.string(),
                                     "--seed", "1", "--trials", "2"};
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["shape"] == json::array({3, 3}));
    CHECK(doc["degree"] == 2);
    CHECK(doc["pmax"] == 2);
    CHECK(doc["tensor_hash"].get<std::string>().size() == 16);
    CHECK(doc["source_dims"] == json::array({3, 6, 10}));
    CHECK(doc["ranks"] == json::array({1, 4, 8}));
    CHECK(doc["kernel_dims"] == json::array({2, 2, 2}));
    CHECK(doc["kernel_bases"][0] ==
          json::array({json::array({"1/1", "0/1", "-1/3"}),
                       json::array({"0/1", "1/1", "-2/3"})}));
    CHECK(doc["incidence"] == true);
    CHECK(doc["betti"] == json::array({0, 1, 0}));
    CHECK(doc["betti_agree"] == true);
    CHECK(doc["generic_ranks"] == json::array({1, 4, 8}));
    CHECK(doc["generic"] == true);

    // Identical invocations are byte-identical.
    CHECK(run(args).out == r.out);

    auto csv = run({"realize", "--tensor", path.string(), "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("p,dimC,rank,dimK\n0,3,1,2\n1,6,4,2\n2,10,8,2\nK0\n", 0) == 0);
    CHECK(csv.out.find("1/1,0/1,-1/3\n0/1,1/1,-2/3\n") != std::string::npos);

    auto copy = temp_file("t33-copy.json");
    auto w = run({"realize", "--tensor", path.string(), "--write-tensor", copy.string()});
    REQUIRE(w.code == 0);
    CHECK(read_tensor_file(copy.string()) == worked_t33());

    CHECK(run({"realize", "--tensor", path.string(), "--shape", "2,3"}).code == 3);
    CHECK(run({"realize", "--tensor", (temp_file("") / "nope.json").string()}).code == 3);

    auto bad = temp_file("bad.json");
    std::ofstream(bad) << "{ not json";
    CHECK(run({"realize", "--tensor", bad.string()}).code == 3);

    auto low = temp_file("low.json");
    write_tensor_file(low.string(), rational_tensor(Shape::of({3, 3}), 1, {1, 2, 3, 4}));
    CHECK(run({"realize", "--tensor", low.string()}).code == 3);
}

TEST_CASE("cli generic-rank certifies the sampled rank") {
    auto r = run({"generic-rank", "--shape", "2,2", "--p", "1", "--trials", "3", "--seed", "9"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["rank"] == 2);
    CHECK(doc["trials"] == 3);
    CHECK(doc["all_trials_agree"] == true);
    CHECK(doc["certified_lower"] == true);
    CHECK(doc["exact_mode"] == true);
    CHECK(doc["exact"] == 2);
    CHECK(doc["exact_matches_sampled"] == true);
    CHECK(doc["q"].get<uint64_t>() > (1ull << 30));
}

TEST_CASE("cli moduli fingerprint study") {
    std::vector<std::string> args = {"moduli", "--samples", "2", "--seed", "4"};
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["shape"] == json::array({3, 3}));
    CHECK(doc["samples"] == 2);
    CHECK(doc["pairs_identical"] == 2);
    CHECK(doc["distinct_checked"] == 2);
    CHECK(doc["distinct_separated"] == 2);
    CHECK(doc["pass"] == true);
    CHECK(doc["fingerprints"].size() == 2);

    CHECK(run(args).out == r.out);
    CHECK(run({"moduli", "--shape", "2,2", "--samples", "1"}).code == 1);
}
