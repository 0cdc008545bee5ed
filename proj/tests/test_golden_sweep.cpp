#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hypergruss/golden.hpp"
#include "hypergruss/sweep.hpp"

namespace {

bool close_rel(double got, double ref, double rel) {
    return std::fabs(got - ref) <= rel * std::max(1e-300, std::fabs(ref));
}

std::string temp_path(const char* stem) {
    return (std::filesystem::temp_directory_path() / stem).string();
}

}  // namespace

TEST_CASE("axis parsing") {
    auto ax = hypergruss::parse_axis("0:1:5");
    CHECK(ax.lo == 0.0);
    CHECK(ax.hi == 1.0);
    CHECK(ax.steps == 5);
    auto vals = hypergruss::axis_values(ax);
    REQUIRE(vals.size() == 5);
    CHECK(vals.front() == 0.0);  // endpoints are exact
    CHECK(vals.back() == 1.0);
    CHECK(vals[2] == doctest::Approx(0.5));

    auto single = hypergruss::parse_axis("2.5");
    CHECK(single.lo == 2.5);
    CHECK(single.hi == 2.5);
    CHECK(single.steps == 1);
    CHECK(hypergruss::axis_values(single) == std::vector<double>{2.5});

    CHECK_THROWS_AS(hypergruss::parse_axis("1:2:0"), std::domain_error);
    CHECK_THROWS_AS(hypergruss::parse_axis("abc"), std::domain_error);
    CHECK_THROWS_AS(hypergruss::parse_axis("1:2:3:4"), std::domain_error);
}

TEST_CASE("checker names round-trip") {
    using hypergruss::CheckerId;
    for (auto id : {CheckerId::envelopes, CheckerId::generalized_envelopes,
                    CheckerId::ratio_confluent, CheckerId::ratio_gauss,
                    CheckerId::shift_confluent, CheckerId::shift_gauss,
                    CheckerId::classical, CheckerId::gruss_random}) {
        auto back = hypergruss::checker_from_name(hypergruss::checker_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(hypergruss::checker_from_name("bogus").has_value());
}

TEST_CASE("sweep counts are consistent and a small run passes") {
    hypergruss::SweepSpec spec;
    spec.checker = hypergruss::CheckerId::ratio_confluent;
    spec.b = {1.0, 2.0, 2};
    spec.c_offset = {1.0, 1.0, 1};
    spec.alpha = {1.0, 1.0, 1};
    spec.beta_offset = {1.5, 1.5, 1};
    spec.p = {0.5, 1.5, 2};
    spec.z = {0.4, 1.2, 3};
    spec.z0 = {0.4, 1.2, 3};

    auto sum = hypergruss::run_sweep(spec, 2);
    CHECK(sum.checker == "ratio-confluent");
    CHECK(sum.cartesian == 2 * 2 * 9);
    CHECK(sum.skipped > 0);  // pairs with z > z0 fail the hypotheses
    CHECK(sum.evaluated == sum.cartesian - sum.skipped);
    CHECK(sum.passed + sum.uncertain + sum.failed == sum.evaluated);
    CHECK(sum.failed == 0);
    CHECK(sum.reports_total == static_cast<long>(sum.reports.size()));
    CHECK(sum.has_worst);
    CHECK(sum.worst.gating);
}

TEST_CASE("sweep output is identical across thread counts") {
    hypergruss::SweepSpec spec;
    spec.checker = hypergruss::CheckerId::ratio_gauss;
    spec.a = {0.6, 2.6, 2};
    spec.b = {1.0, 2.0, 2};
    spec.p = {0.5, 1.5, 2};
    spec.z = {0.2, 0.8, 3};
    spec.z0 = {0.2, 0.8, 3};

    auto one = hypergruss::run_sweep(spec, 1);
    auto many = hypergruss::run_sweep(spec, 4);

    std::ostringstream s1, s2;
    hypergruss::write_reports_ndjson(s1, one);
    hypergruss::write_reports_ndjson(s2, many);
    CHECK(s1.str() == s2.str());

    std::ostringstream c1, c2;
    hypergruss::write_reports_csv(c1, one);
    hypergruss::write_reports_csv(c2, many);
    CHECK(c1.str() == c2.str());
}

TEST_CASE("report writers emit the frozen schema") {
    hypergruss::SweepSpec spec;
    spec.checker = hypergruss::CheckerId::gruss_random;
    spec.trials = 5;
    spec.max_n = 20;
    auto sum = hypergruss::run_sweep(spec, 1);
    CHECK(sum.evaluated == 5);
    CHECK(sum.failed == 0);

    std::ostringstream csv;
    hypergruss::write_reports_csv(csv, sum);
    std::istringstream lines(csv.str());
    std::string header;
    REQUIRE(std::getline(lines, header));
    CHECK(header ==
          "schema_version,checker,name,gating,a,b,c,alpha,beta,p,z,z0,z1,z2,z3,"
          "t,n,trial,lhs,rhs,slack,err_budget,holds,uncertain");

    std::ostringstream nd;
    hypergruss::write_reports_ndjson(nd, sum);
    std::istringstream jlines(nd.str());
    std::string first;
    REQUIRE(std::getline(jlines, first));
    CHECK(first.find("\"schema_version\":1") != std::string::npos);
    CHECK(first.find("\"name\":\"gruss/discrete\"") != std::string::npos);
    // Parameters irrelevant to this checker serialize as null, never NaN.
    CHECK(first.find("nan") == std::string::npos);
    CHECK(first.find("\"a\":null") != std::string::npos);
}

TEST_CASE("gruss sweep is deterministic for a fixed seed") {
    hypergruss::SweepSpec spec;
    spec.checker = hypergruss::CheckerId::gruss_random;
    spec.trials = 50;
    spec.max_n = 30;
    spec.seed = 777;
    auto a = hypergruss::run_sweep(spec, 4);
    auto b = hypergruss::run_sweep(spec, 1);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].lhs == b.reports[i].lhs);
        CHECK(a.reports[i].rhs == b.reports[i].rhs);
    }
    spec.seed = 778;
    auto c = hypergruss::run_sweep(spec, 1);
    CHECK(a.reports[0].lhs != c.reports[0].lhs);
}

TEST_CASE("golden records table is fixed") {
    auto recs = hypergruss::canonical_golden_records();
    REQUIRE(recs.size() == 16);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CAPTURE(i);
        CHECK(recs[i].resolution > 0);
        CHECK(hypergruss::golden_discretization_bound(i) > 0.0);
    }
    CHECK(recs[0].kind == hypergruss::GoldenKind::series_2f1);
    CHECK(std::string(hypergruss::golden_kind_name(recs[0].kind)) == "series-2f1");
}

TEST_CASE("golden file io round-trips") {
    auto recs = hypergruss::canonical_golden_records();
    // Give them synthetic values; io must preserve doubles exactly.
    for (std::size_t i = 0; i < recs.size(); ++i)
        recs[i].value = 1.0 / (3.0 + static_cast<double>(i));

    const std::string path = temp_path("hypergruss_golden_roundtrip.txt");
    hypergruss::write_golden_file(path, recs);
    auto back = hypergruss::read_golden_file(path);
    REQUIRE(back.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CAPTURE(i);
        CHECK(back[i].kind == recs[i].kind);
        CHECK(back[i].value == recs[i].value);
        CHECK(back[i].resolution == recs[i].resolution);
        CHECK(back[i].z == recs[i].z);
    }
    std::remove(path.c_str());
}

TEST_CASE("golden file parser rejects malformed input") {
    const std::string path = temp_path("hypergruss_golden_bad.txt");
    {
        std::FILE* f = std::fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fputs("series-2f1 | a=1 b=1 c=2 | z=0.5\n", f);  // missing fields
        std::fclose(f);
    }
    CHECK_THROWS_AS(hypergruss::read_golden_file(path), std::runtime_error);
    std::remove(path.c_str());
    CHECK_THROWS_AS(hypergruss::read_golden_file(temp_path("no_such_file_x.txt")),
                    std::runtime_error);
}

TEST_CASE("shipped golden values match closed forms where available") {
#ifdef HYPERGRUSS_GOLDEN_FILE
    auto recs = hypergruss::read_golden_file(HYPERGRUSS_GOLDEN_FILE);
    REQUIRE(recs.size() == 16);
    // Record 0 is the 2F1(1,1;2;1/2) series at 1e5 terms: 2 log 2 up to a
    // truncation tail far below 1e-13.
    CHECK(close_rel(recs[0].value, 2.0 * std::log(2.0), 1e-13));
    // Record 3 is the 1F1(1;2;1) series: e - 1.
    CHECK(close_rel(recs[3].value, std::expm1(1.0), 1e-13));
    // Record 10 is the weighted beta with all-ones arguments; its value is
    // positive and below the classical beta B(1,1) = 1.
    CHECK(recs[10].value > 0.0);
    CHECK(recs[10].value < 1.0);
#else
    FAIL("HYPERGRUSS_GOLDEN_FILE not defined");
#endif
}
