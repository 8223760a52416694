#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "lexbetti/errors.hpp"
#include "lexbetti/ideal.hpp"
#include "lexbetti/json_io.hpp"

using namespace lexbetti;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        path = std::string("lexbetti_test_") + std::to_string(counter++) + ".json";
        std::ofstream out(path);
        out << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
    static int counter;
};
int TempFile::counter = 0;

}  // namespace

TEST_CASE("monomial wire format") {
    Monomial t({2, 0, 1});
    CHECK(to_json(t) == json::array({2, 0, 1}));
    CHECK(monomial_from_json(json::array({2, 0, 1})) == t);

    CHECK_THROWS_AS(monomial_from_json(json::object()), InputError);
    CHECK_THROWS_AS(monomial_from_json(json::array()), InputError);
    CHECK_THROWS_AS(monomial_from_json(json::parse("[1, -2]")), InputError);
    CHECK_THROWS_AS(monomial_from_json(json::parse("[1.5, 0]")), InputError);
}

TEST_CASE("monomial set wire format canonicalizes") {
    json j = json::parse(R"({"vars": 3, "degree": 2,
                             "elements": [[0,2,0], [2,0,0], [0,2,0]]})");
    MonomialSet s = set_from_json(j);
    CHECK(s.size() == 2);
    CHECK(s.elements()[0] == Monomial({2, 0, 0}));
    CHECK(set_from_json(to_json(s)) == s);

    CHECK_THROWS_AS(set_from_json(json::parse(R"({"vars": 3, "degree": 2,
                                                  "elements": [[1,0,0]]})")),
                    InputError);
    CHECK_THROWS_AS(set_from_json(json::parse(R"({"degree": 2, "elements": []})")),
                    InputError);
}

TEST_CASE("hilbert function wire format") {
    HilbertFunction h{3, {0, 0, 3, 7}};
    CHECK(hilbert_from_json(to_json(h)) == h);
    CHECK(to_json(h) == json::parse(R"({"vars": 3, "values": [0, 0, 3, 7]})"));

    CHECK_THROWS_AS(hilbert_from_json(json::parse(R"({"vars": 0, "values": [0]})")),
                    InputError);
    CHECK_THROWS_AS(hilbert_from_json(json::parse(R"({"vars": 2, "values": []})")),
                    InputError);
    CHECK_THROWS_AS(hilbert_from_json(json::parse(R"({"vars": 2, "values": [0, -3]})")),
                    InputError);
}

TEST_CASE("ideal wire format minimalizes and reports it") {
    json minimal = json::parse(R"({"vars": 3, "generators": [[2,0,0], [1,1,0]]})");
    LoadedIdeal a = ideal_from_json(minimal);
    CHECK(a.was_minimal);
    CHECK(a.ideal.generator_count() == 2);
    CHECK(ideal_from_json(to_json(a.ideal)).ideal == a.ideal);

    json redundant = json::parse(
        R"({"vars": 3, "generators": [[2,0,0], [2,1,0], [1,1,0]]})");
    LoadedIdeal b = ideal_from_json(redundant);
    CHECK_FALSE(b.was_minimal);
    CHECK(b.ideal == a.ideal);

    CHECK_THROWS_AS(
        ideal_from_json(json::parse(R"({"vars": 3, "generators": [[1,0]]})")),
        InputError);
    CHECK_THROWS_AS(
        ideal_from_json(json::parse(R"({"vars": 3, "generators": [[0,0,0]]})")),
        InputError);
}

TEST_CASE("betti table wire format is byte stable") {
    BettiTable t = ek_betti(MonomialIdeal::minimalize(
        {Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({0, 2, 0})}, 3));
    CHECK(to_json(t).dump() ==
          R"({"betas":[3,2,0],"by_degree":{"2":[3,2,0]}})");
}

TEST_CASE("file loading") {
    TempFile good(R"({"vars": 2, "generators": [[1, 0]]})");
    json j = load_json_file(good.path);
    CHECK(ideal_from_json(j).ideal.generator_count() == 1);

    TempFile bad("{not json");
    CHECK_THROWS_AS(load_json_file(bad.path), InputError);
    CHECK_THROWS_AS(load_json_file("definitely_missing_file.json"), InputError);
}
