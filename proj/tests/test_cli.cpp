#include <doctest.h>

#include "monopole/edgelist.hpp"
#include "monopole/errors.hpp"
#include "monopole/report.hpp"

using namespace monopole;

TEST_CASE("divisor parsing: dense, sparse, P alias") {
    Divisor dense = parse_divisor("2,0,-1,0", 4, std::nullopt);
    CHECK(dense[0] == 2);
    CHECK(dense[2] == -1);

    Divisor sparse = parse_divisor("1:3,3:-2", 4, std::nullopt);
    CHECK(sparse[1] == 3);
    CHECK(sparse[3] == -2);
    CHECK(sparse[0] == 0);

    Divisor aliased = parse_divisor("P:3", 5, 4);
    CHECK(aliased[4] == 3);

    CHECK(parse_vertex("P", 5, 4) == 4);
    CHECK(parse_vertex("2", 5, std::nullopt) == 2);

    // no width limit on coefficients
    Divisor wide = parse_divisor("0:100000000000000000000000", 3, std::nullopt);
    CHECK(wide[0] == Int("100000000000000000000000"));

    CHECK_THROWS_AS(parse_divisor("1,2", 3, std::nullopt), BadParameter);
    CHECK_THROWS_AS(parse_divisor("1,-,3", 3, std::nullopt), BadParameter);
    CHECK_THROWS_AS(parse_divisor("9:1", 3, std::nullopt), BadParameter);
    CHECK_THROWS_AS(parse_divisor("P:1", 3, std::nullopt), BadParameter);
    CHECK_THROWS_AS(parse_divisor("a,b,c", 3, std::nullopt), BadParameter);
    CHECK_THROWS_AS(parse_vertex("7", 3, std::nullopt), BadParameter);
}

TEST_CASE("containment report serializes to the documented schema") {
    GeneratedGraph fig1 = bridged(cycle(3).graph, cycle(3).graph);
    ContainmentReport r = containment_report(fig1.graph, fig1.p, 4);
    Json j = containment_json(fig1.graph, r, true);

    CHECK(j["graph"]["n"] == 7);
    CHECK(j["graph"]["edges"].size() == 8);
    CHECK(j["vertex"] == fig1.p);
    CHECK(j["B"] == 4);
    for (const char* key : {"hf", "hr", "hred"}) {
        CHECK(j[key].contains("members"));
        CHECK(j[key].contains("gaps"));
        CHECK(j[key].contains("witnesses"));
    }
    CHECK(j["checks"]["containment_hred_hf"] == true);
    CHECK(j["checks"]["hr_subset_hf"] == true);
    CHECK(j["checks"]["hr_window_closed"] == true);
    CHECK(j["checks"]["min_hf"] == 1);
    CHECK(j["checks"]["deg_P"] == 2);
    CHECK(j["checks"]["lambda"] == 1);
    CHECK(j["checks"]["genus"] == 2);

    // Same inputs, byte-identical report.
    ContainmentReport r2 = containment_report(fig1.graph, fig1.p, 4);
    CHECK(containment_json(fig1.graph, r2, true).dump() == j.dump());
}

TEST_CASE("sweep units serialize one line each plus a summary") {
    SweepSpec spec;
    spec.family = SweepSpec::Family::cycle;
    spec.n_min = 3;
    spec.n_max = 4;
    SweepResult res = conjecture_sweep(spec);
    REQUIRE(res.units.size() == 7);
    for (const SweepUnit& u : res.units) {
        Json j = sweep_unit_json(u);
        CHECK(j["status"] == "ok");
        CHECK(j.contains("graph"));
        CHECK(j.contains("vertex"));
        std::string line = j.dump();
        CHECK(line.find('\n') == std::string::npos);
    }
    Json summary = sweep_summary_json(res);
    CHECK(summary["summary"]["units"] == 7);
    CHECK(summary["summary"]["violations"] == 0);

    SweepResult res2 = conjecture_sweep(spec);
    for (std::size_t i = 0; i < res.units.size(); ++i) {
        CHECK(sweep_unit_json(res.units[i]).dump() == sweep_unit_json(res2.units[i]).dump());
    }
}

TEST_CASE("jacobian and rank reports") {
    Json j = jacobian_json(jacobian(cycle(5).graph, 0));
    CHECK(j["factors"] == Json::array({5}));
    CHECK(j["order"] == 5);

    GeneratedGraph w = wheel(4);
    Divisor d(static_cast<std::size_t>(5));
    d[w.p] = 3;
    RankCertificate cert = rank(w.graph, d);
    Json rj = rank_json(w.graph, cert);
    CHECK(rj["rank"] == 0);
    CHECK(rj["obstruction"].is_array());

    ReducedForm red = reduce(w.graph, d, 0);
    Json dj = reduced_json(red);
    CHECK(dj["base"] == 0);
    CHECK(dj["reduced"].size() == 5);
    CHECK(dj["script"].size() == 5);
}

TEST_CASE("big integers serialize losslessly") {
    Int big = Int("123456789012345678901234567890");
    Json j = json_int(big);
    CHECK(j.is_string());
    CHECK(j.get<std::string>() == "123456789012345678901234567890");
    CHECK(json_int(Int(-42)) == -42);
}
