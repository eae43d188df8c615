#include <doctest.h>

#include "ech/serialize.hpp"
#include "support.hpp"

using namespace ech;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

}  // namespace

TEST_CASE("orbit set JSON layout") {
    OrbitSet s;
    s.add(ReebOrbit::elliptic("g1", {q("2/3"), Tilt::Minus}, q("5/2")), 3);
    s.add(ReebOrbit::hyperbolic("h", EigenvalueSign::Negative, q("4")), 1);
    const Json j = orbit_set_to_json(s);
    CHECK(j.dump() ==
          R"([{"label":"g1","kind":"elliptic","rotation":{"value":"2/3","tilt":"-"},"action":"5/2","multiplicity":3},)"
          R"({"label":"h","kind":"hyperbolic","eigenvalue_sign":-1,"action":"4","multiplicity":1}])");
}

TEST_CASE("orbit set JSON round-trips") {
    testing::RationalGen gen(0x7502);
    for (int trial = 0; trial < 50; ++trial) {
        OrbitSet s;
        const auto n = gen.integer(0, 5);
        for (std::int64_t i = 0; i < n; ++i) {
            const std::string label = "o" + std::to_string(i);
            if (gen.integer(0, 1))
                s.add(ReebOrbit::elliptic(label, {gen.in_range(0, 4), gen.tilt()}, gen.in_range(1, 9)),
                      gen.integer(1, 9));
            else
                s.add(ReebOrbit::hyperbolic(label, gen.integer(0, 1) ? EigenvalueSign::Positive
                                                                     : EigenvalueSign::Negative,
                                            gen.in_range(1, 9)),
                      gen.integer(1, 9));
        }
        CHECK(orbit_set_from_json(Json::parse(orbit_set_to_json(s).dump())) == s);
    }
}

TEST_CASE("orbit set JSON rejects malformed input") {
    CHECK_THROWS_AS(orbit_set_from_json(Json::parse("{}")), ParseError);
    CHECK_THROWS_AS(orbit_set_from_json(Json::parse(R"([{"label":"x"}])")), ParseError);
    CHECK_THROWS_AS(
        orbit_set_from_json(Json::parse(R"([{"label":"x","kind":"weird","action":"1","multiplicity":1}])")),
        ParseError);
    CHECK_THROWS_AS(orbit_set_from_json(Json::parse(
                        R"([{"label":"x","kind":"hyperbolic","eigenvalue_sign":2,"action":"1","multiplicity":1}])")),
                    ParseError);
    // invariants still enforced
    CHECK_THROWS_AS(orbit_set_from_json(Json::parse(
                        R"([{"label":"x","kind":"elliptic","rotation":{"value":"1/2","tilt":"0"},"action":"1","multiplicity":1}])")),
                    PreconditionViolation);
}

TEST_CASE("generator records as JSON and CSV") {
    const Ellipsoid e(q("3/2"), q("1"), Tilt::Plus);
    const auto gens = sorted_generators(e, 3);
    CHECK(generators_to_json(gens).dump() ==
          R"([{"m1":0,"m2":0,"grading":0,"action":"0"},{"m1":0,"m2":1,"grading":2,"action":"1"},)"
          R"({"m1":1,"m2":0,"grading":4,"action":"3/2"}])");
    CHECK(generators_to_csv(gens) == "m1,m2,grading,action\n0,0,0,0\n0,1,2,1\n1,0,4,3/2\n");

    const auto table = homology_table(e, 2);
    CHECK(homology_to_json(table) == generators_to_json(gens));
    CHECK(homology_to_csv(table) == generators_to_csv(gens));
}

TEST_CASE("capacity sequence as JSON and CSV") {
    const auto seq = capacity_sequence(q("3/2"), q("1"), 4);
    CHECK(capacities_to_json(seq).dump() == R"({"a":"3/2","b":"1","values":["0","1","3/2","2"]})");
    CHECK(capacities_to_csv(seq) == "k,value\n1,0\n2,1\n3,3/2\n4,2\n");
}

TEST_CASE("large integers stay exact in JSON") {
    CHECK(integer_to_json(Integer(42)).dump() == "42");
    const Integer huge = Integer(1) << 80;
    CHECK(integer_to_json(huge).dump() == "\"1208925819614629174706176\"");
}
