#include "doctest.h"

#include "qht/cli.hpp"

using namespace qht;

namespace {

CommandResult cli(std::initializer_list<std::string> args) { return run(std::vector<std::string>(args)); }

bool has_float(const Json& j) {
    if (j.is_number_float()) return true;
    if (j.is_structured()) {
        for (const auto& x : j) {
            if (has_float(x)) return true;
        }
    }
    return false;
}

const char* kComplex = R"({
    "field": {"kind": "laurent", "lambda0": "1", "N_M": 1},
    "generators": [{"orbit_id": "x", "action": "2", "index": 1},
                   {"orbit_id": "y", "action": "1/2", "index": 0},
                   {"orbit_id": "z", "action": "1", "index": 0}],
    "differential": [{"from": "x", "to": "y", "scalar": "1"}, {"from": "x", "to": "z", "scalar": "1"}]
})";

}  // namespace

TEST_CASE("ring decompose reproduces the CP2 idempotents") {
    auto r = cli({"ring", "decompose", "cp2_novikov", "--generator", "u"});
    REQUIRE(r.ok);
    CHECK(r.exit_code() == 0);
    CHECK(r.payload["count"] == 3);
    CHECK(r.payload["exact"] == true);
    CHECK(r.payload["verified"] == true);
    CHECK(r.payload["idempotents"].size() == 3);
    CHECK_FALSE(has_float(to_json(r)));
    CHECK(to_json(r).dump() == to_json(cli({"ring", "decompose", "cp2_novikov", "--generator", "u"})).dump());

    auto d = cli({"ring", "decompose", "quadric2"});
    REQUIRE(d.ok);
    CHECK(d.payload["count"] == 2);
    auto nc = cli({"ring", "decompose", "quadric4", "--generator", "s1"});
    CHECK_FALSE(nc.ok);
    CHECK(nc.code == "NotCyclic");
}

TEST_CASE("ring verify, extend and product") {
    auto v = cli({"ring", "verify", "quadric4_homology"});
    REQUIRE(v.ok);
    CHECK(v.payload["valid"] == true);
    CHECK(v.payload["dim"] == 6);

    auto e = cli({"ring", "extend", "cp2"});
    REQUIRE(e.ok);
    CHECK(e.payload["coefficients"] == "novikov");

    auto p = cli({"ring", "product", "cp1", "cp1"});
    REQUIRE(p.ok);
    CHECK(p.payload["basis"].size() == 4);
    auto bad = cli({"ring", "product", "cp1", "cp2"});
    CHECK(bad.code == "MonotonicityMismatch");
    CHECK(cli({"ring", "verify", "no_such_ring"}).code == "SchemaError");
}

TEST_CASE("spectral commands") {
    auto r = cli({"spectral", "rho", kComplex, "z"});
    REQUIRE(r.ok);
    CHECK(r.payload["rho"] == "1/2");
    auto r2 = cli({"spectral", "rho", kComplex, R"([{"generator": "z", "scalar": "s"}])"});
    REQUIRE(r2.ok);
    CHECK(r2.payload["rho"] == "3/2");
    CHECK(cli({"spectral", "rho", kComplex, "x"}).code == "NotACycle");
    CHECK(cli({"spectral", "rho", kComplex, "y + z - y - z"}).code == "NullHomologous");

    auto e = cli({"spectral", "extend", kComplex});
    REQUIRE(e.ok);
    CHECK(e.payload["field"]["kind"] == "novikov");
    auto back = cli({"spectral", "rho", e.payload.dump(), "z"});
    REQUIRE(back.ok);
    CHECK(back.payload["rho"] == "1/2");

    auto s = cli({"spectral", "suite", "--seeds", "100"});
    REQUIRE(s.ok);
    CHECK(s.payload["extension_invariance"] == "100/100 exact");
}

TEST_CASE("gc commands") {
    auto c = cli({"gc", "classify", "gr24", "2", "3", "1", "2"});
    REQUIRE(c.ok);
    CHECK(c.payload["class"] == "Interior");
    CHECK(cli({"gc", "classify", "gr24", "10", "10", "10", "10"}).payload["class"] == "Outside");
    CHECK(cli({"gc", "classify", "gr24", "1", "2"}).code == "DimensionMismatch");
    auto b = cli({"gc", "classify", "cp1", "--lambda", "1,-1", "--", "1"});
    REQUIRE(b.ok);
    CHECK(b.payload["class"] == "Boundary");

    auto p = cli({"gc", "polytope", "gr24", "--monotone", "2"});
    REQUIRE(p.ok);
    CHECK(p.payload["lambda"] == Json::array({"4", "4", "0", "0"}));
    CHECK(p.payload["index_set_size"] == 4);
    CHECK(p.payload["flag_dim"] == 4);
    CHECK_FALSE(has_float(p.payload));

    auto v = cli({"gc", "vertices", "cp1", "--lambda", "1", "-1"});
    REQUIRE(v.ok);
    CHECK(v.payload["vertices"] == Json::array({Json::array({"-1"}), Json::array({"1"})}));
    CHECK(cli({"gc", "polytope", "gr24", "--lambda", "1,1,1,1"}).code == "BadLambdaShape");
    CHECK(cli({"gc", "polytope", "gr44"}).code == "BadFlagSpec");
}

TEST_CASE("command errors and suite") {
    auto u = cli({"frobnicate"});
    CHECK_FALSE(u.ok);
    CHECK(u.code == "UnknownCommand");
    CHECK(u.exit_code() != 0);
    CHECK(cli({"ring"}).code == "UnknownCommand");
    CHECK(cli({"--help"}).ok);

    auto m = cli({"--m", "24", "ring", "verify", "cp2"});
    REQUIRE(m.ok);
    CHECK(m.provenance["m"] == 24);

    auto s = cli({"suite", "all"});
    CHECK(s.ok);
    CHECK(s.payload["passed"] == 7);
    CHECK_FALSE(has_float(to_json(s)));
}
