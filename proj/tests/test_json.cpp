#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "isodiam/constructions.hpp"
#include "isodiam/convex.hpp"
#include "isodiam/json_io.hpp"

using namespace isodiam;
using nlohmann::json;

TEST_CASE("profiles round-trip through JSON")
{
    const RadialProfile p = random_profile(Dimension(4), 3);
    const RadialProfile q = profile_from_json(parse_json_text(profile_to_json(p).dump()));
    CHECK(q.n() == 4);
    REQUIRE(q.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(q.radii()[i] == p.radii()[i]);
        CHECK(q.angles()[i] == p.angles()[i]);
    }
    CHECK(volume(q) == volume(p));
}

TEST_CASE("malformed profiles are rejected with invalid_argument")
{
    json j = profile_to_json(ball_profile(Dimension(2)));
    json corrupted = j;
    corrupted["angles"][10] = 4.0;
    CHECK_THROWS_AS(profile_from_json(corrupted), std::invalid_argument);
    json wrong_n = j;
    wrong_n["n"] = 12;
    CHECK_THROWS_AS(profile_from_json(wrong_n), std::invalid_argument);
    json fractional_n = j;
    fractional_n["n"] = 2.5;
    CHECK_THROWS_AS(profile_from_json(fractional_n), std::invalid_argument);
    json missing = j;
    missing.erase("radii");
    CHECK_THROWS_AS(profile_from_json(missing), std::invalid_argument);
    json text = j;
    text["radii"][3] = "x";
    CHECK_THROWS_AS(profile_from_json(text), std::invalid_argument);
    json unsorted = j;
    std::swap(unsorted["radii"][3], unsorted["radii"][4]);
    CHECK_THROWS_AS(profile_from_json(unsorted), std::invalid_argument);
    CHECK_THROWS_AS(parse_json_text("{\"n\": 2,"), std::invalid_argument);
    CHECK_THROWS_AS(read_json_file("/nonexistent/profile.json"), std::invalid_argument);
}

TEST_CASE("polytopes round-trip through JSON")
{
    const Polytope f = random_hull(3, 8);
    const Polytope g = polytope_from_json(parse_json_text(polytope_to_json(f).dump()));
    CHECK(g.n == 3);
    CHECK(g.vertices.size() == f.vertices.size());
    CHECK(perimeter(g) == doctest::Approx(perimeter(f)).epsilon(1e-14));
    CHECK(body_volume(g) == doctest::Approx(body_volume(f)).epsilon(1e-14));
    const json flat = {{"n", 2}, {"vertices", {{0, 0}, {1, 1}, {2, 2}}}};
    CHECK_THROWS_AS(polytope_from_json(flat), std::invalid_argument);
    const json bad = {{"n", 2}, {"vertices", {{0, 0}, {1, "a"}, {2, 2}}}};
    CHECK_THROWS_AS(polytope_from_json(bad), std::invalid_argument);
}

TEST_CASE("ball oracles load from JSON")
{
    const json j = parse_json_text(R"({"n": 3, "balls": [
        {"center": [0.5, 0, 0], "radius": 0.3},
        {"center": [-0.5, 0, 0], "radius": 0.2, "sign": 1}]})");
    const IndicatorSet e = oracle_from_json(j);
    CHECK(e.n.value() == 3);
    REQUIRE(e.known_volume.has_value());
    CHECK(*e.known_volume == doctest::Approx(4.0 / 3.0 * kPi * (0.027 + 0.008)));
    CHECK(*e.known_diameter == doctest::Approx(1.5));
    const std::vector<double> inside = {0.5, 0.1, 0.0};
    CHECK(e.contains(inside));

    CHECK_THROWS_AS(oracle_from_json(parse_json_text(R"({"n": 9, "balls": [{"center": [0], "radius": 1}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle_from_json(parse_json_text(R"({"n": 2, "balls": [{"center": [0, 0]}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle_from_json(parse_json_text(R"({"n": 2, "balls": [{"center": [0, 0], "radius": 1, "sign": 0.5}]})")),
                    std::invalid_argument);
}

TEST_CASE("reports serialise every field")
{
    const DeficitReport rep = report(ball_minus_ball(Dimension(2), 0.3, 0.35));
    const json j = deficit_report_json(rep);
    for (const char* key : {"scale", "diameter", "volume", "delta", "r_out", "r_in", "r_in_axis_restricted",
                            "hausdorff_lo", "hausdorff_hi", "symdiff_min", "symdiff_t", "thm_main_margin"})
        CHECK(j.contains(key));
    CHECK(j["delta"].get<double>() == rep.delta);
    const json c = convex_report_json(convex_report(random_hull(2, 1)));
    CHECK(c["delta_prime"].get<double>() >= 0.0);
}
