#include "doctest.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hypergruss/inequalities.hpp"
#include "hypergruss/oracle.hpp"

namespace {

hypergruss::ParamSet typical_params() {
    hypergruss::ParamSet ps;
    ps.a = 2.0;
    ps.b = 1.0;
    ps.c = 2.0;
    ps.alpha = 1.0;
    ps.beta = 2.5;
    ps.p = 1.0;
    return ps;
}

const hypergruss::IneqReport& find_report(
    const std::vector<hypergruss::IneqReport>& reports, const std::string& name) {
    for (const auto& r : reports) {
        if (r.name == name) return r;
    }
    REQUIRE_MESSAGE(false, "missing report " << name);
    static hypergruss::IneqReport dummy;
    return dummy;
}

}  // namespace

TEST_CASE("discrete gruss bound agrees with the pairwise oracle") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    std::uniform_real_distribution<double> wgt(0.0, 2.0);
    for (int inst = 0; inst < 100; ++inst) {
        const int n = 2 + static_cast<int>(rng() % 49);
        hypergruss::GrussInstance g;
        g.x.resize(n);
        g.y.resize(n);
        g.m.resize(n);
        for (int i = 0; i < n; ++i) {
            g.x[i] = val(rng);
            g.y[i] = val(rng);
            g.m[i] = wgt(rng);
        }
        g.x_lo = *std::min_element(g.x.begin(), g.x.end());
        g.x_hi = *std::max_element(g.x.begin(), g.x.end());
        g.y_lo = *std::min_element(g.y.begin(), g.y.end());
        g.y_hi = *std::max_element(g.y.begin(), g.y.end());

        auto rep = hypergruss::gruss_check(g);
        const double olhs = hypergruss::oracle::gruss_lhs(g.m, g.x, g.y);
        const double orhs =
            hypergruss::oracle::gruss_rhs(g.m, g.x_lo, g.x_hi, g.y_lo, g.y_hi);
        const double scale = std::max({1.0, std::fabs(olhs), std::fabs(orhs)});
        CAPTURE(inst);
        CHECK(std::fabs(rep.lhs - olhs) <= 1e-11 * scale);
        CHECK(std::fabs(rep.rhs - orhs) <= 1e-12 * scale);
        // The bound is exact mathematics: no certain failures, ever.
        CHECK((rep.holds || rep.uncertain));
    }
}

TEST_CASE("discrete gruss bound is sharp for the two-point witness") {
    hypergruss::GrussInstance g;
    g.m = {1.0, 1.0};
    g.x = {-1.0, 2.0};
    g.y = {0.5, 4.5};
    g.x_lo = -1.0;
    g.x_hi = 2.0;
    g.y_lo = 0.5;
    g.y_hi = 4.5;
    auto rep = hypergruss::gruss_check(g);
    CHECK(std::fabs(rep.slack) <= 1e-12 * std::max(1.0, rep.rhs));
}

TEST_CASE("gruss input validation") {
    hypergruss::GrussInstance g;
    g.m = {1.0, -0.5};
    g.x = {0.0, 1.0};
    g.y = {0.0, 1.0};
    g.x_lo = 0.0;
    g.x_hi = 1.0;
    g.y_lo = 0.0;
    g.y_hi = 1.0;
    CHECK_THROWS_AS(hypergruss::gruss_check(g), std::domain_error);

    g.m = {1.0, 1.0};
    g.x = {0.0, 2.0};  // outside [x_lo, x_hi]
    CHECK_THROWS_AS(hypergruss::gruss_check(g), std::domain_error);

    g.x = {0.0, 1.0};
    g.y = {0.0};  // length mismatch
    CHECK_THROWS_AS(hypergruss::gruss_check(g), std::domain_error);
}

TEST_CASE("normalized confluent ratio is exactly one at z = 0") {
    auto ps = typical_params();
    hypergruss::CheckOptions opt;
    CHECK(hypergruss::ratio_confluent(ps, 0.0, opt) == 1.0);
    CHECK(hypergruss::ratio_gauss(ps, 0.0, opt) == 1.0);
}

TEST_CASE("pointwise envelopes hold at a typical point") {
    auto ps = typical_params();
    auto reports = hypergruss::check_envelopes(ps, 0.5, 0.3);
    CHECK(reports.size() == 6);
    for (const auto& r : reports) {
        CAPTURE(r.name);
        if (r.gating) CHECK((r.holds || r.uncertain));
    }
    // Stable names.
    find_report(reports, "envelopes/confluent");
    find_report(reports, "envelopes/kernel-flat");
    find_report(reports, "envelopes/kernel-windowed");
    find_report(reports, "envelopes/weighted-beta");
    find_report(reports, "envelopes/gauss");
    CHECK_FALSE(find_report(reports, "envelopes/weighted-beta-alt").gating);
}

TEST_CASE("generalized envelopes hold at a typical point") {
    auto ps = typical_params();
    auto reports = hypergruss::check_generalized_envelopes(ps, 0.4);
    CHECK(reports.size() == 2);
    find_report(reports, "generalized-envelopes/confluent");
    find_report(reports, "generalized-envelopes/gauss");
    for (const auto& r : reports) {
        CAPTURE(r.name);
        CHECK((r.holds || r.uncertain));
    }
}

TEST_CASE("confluent ratio bounds hold and vanish at z = z0") {
    auto ps = typical_params();
    auto reports = hypergruss::check_ratio_confluent(ps, 0.7, 1.4);
    CHECK(reports.size() == 2);
    for (const auto& r : reports) {
        CAPTURE(r.name);
        CHECK((r.holds || r.uncertain));
    }

    auto degenerate = hypergruss::check_ratio_confluent(ps, 1.4, 1.4);
    CHECK(find_report(degenerate, "ratio-confluent/centered").lhs == 0.0);
}

TEST_CASE("gauss ratio bounds: gating forms hold, alt forms are informational") {
    auto ps = typical_params();
    auto reports = hypergruss::check_ratio_gauss(ps, 0.3, 0.8);
    CHECK(reports.size() == 4);
    const auto& centered = find_report(reports, "ratio-gauss/centered");
    const auto& scaled = find_report(reports, "ratio-gauss/scaled");
    CHECK(centered.gating);
    CHECK(scaled.gating);
    CHECK((centered.holds || centered.uncertain));
    CHECK((scaled.holds || scaled.uncertain));
    CHECK_FALSE(find_report(reports, "ratio-gauss/centered-alt").gating);
    CHECK_FALSE(find_report(reports, "ratio-gauss/scaled-alt").gating);

    auto degenerate = hypergruss::check_ratio_gauss(ps, 0.8, 0.8);
    CHECK(find_report(degenerate, "ratio-gauss/centered").lhs == 0.0);
}

TEST_CASE("shift bounds vanish in their degenerate configurations") {
    auto ps = typical_params();

    auto rc = hypergruss::check_shift_confluent(ps, 0.6, 1.0, 1.5);
    CHECK(rc.size() == 1);
    CHECK(rc[0].name == "shift-confluent");
    CHECK(rc[0].lhs == 0.0);  // z2 = 1 makes both sides identical

    auto rc0 = hypergruss::check_shift_confluent(ps, 0.6, 0.4, 0.0);
    CHECK(rc0[0].lhs == 0.0);  // z3 = 0 collapses both arguments to zero

    auto rg = hypergruss::check_shift_gauss(ps, 0.6, 1.0, 0.5);
    CHECK(rg.size() == 1);
    CHECK(rg[0].name == "shift-gauss");
    CHECK(rg[0].lhs == 0.0);

    auto live = hypergruss::check_shift_confluent(ps, 0.6, 0.4, 1.2);
    CHECK((live[0].holds || live[0].uncertain));
    auto live_g = hypergruss::check_shift_gauss(ps, 0.7, 0.5, 0.6);
    CHECK((live_g[0].holds || live_g[0].uncertain));
}

TEST_CASE("hypothesis gaps throw unless exploratory") {
    auto ps = typical_params();
    CHECK_THROWS_AS(hypergruss::check_ratio_confluent(ps, 1.5, 0.7),
                    hypergruss::HypothesisViolation);  // z > z0
    CHECK_THROWS_AS(hypergruss::check_ratio_gauss(ps, 0.3, 1.0),
                    hypergruss::HypothesisViolation);  // z0 must stay below 1

    hypergruss::ParamSet bad = ps;
    bad.a = 1.0;  // envelopes need a != 1
    CHECK_THROWS_AS(hypergruss::check_envelopes(bad, 0.5, 0.3),
                    hypergruss::HypothesisViolation);

    hypergruss::CheckOptions opt;
    opt.exploratory = true;
    CHECK_NOTHROW(hypergruss::check_ratio_confluent(ps, 1.5, 0.7, opt));
}

TEST_CASE("hypothesis validators report the first gap as text") {
    auto ps = typical_params();
    CHECK_FALSE(hypergruss::ratio_confluent_hypothesis_gap(ps, 0.5, 0.8).has_value());
    CHECK(hypergruss::ratio_confluent_hypothesis_gap(ps, 0.9, 0.8).has_value());
    CHECK(hypergruss::envelopes_hypothesis_gap(ps, 0.0, 0.5).has_value());  // z != 0
    CHECK_FALSE(hypergruss::envelopes_hypothesis_gap(ps, 0.5, 0.5).has_value());
    hypergruss::ParamSet shallow = ps;
    shallow.beta = shallow.alpha + 0.5;
    CHECK(hypergruss::envelopes_hypothesis_gap(shallow, 0.5, 0.5).has_value());
}

TEST_CASE("classical limit checkers mirror the p = 0 parents") {
    auto ps = typical_params();
    ps.p = 0.0;
    hypergruss::CheckOptions opt;

    auto parent = hypergruss::check_ratio_confluent(ps, 0.5, 1.1, opt);
    auto limit = hypergruss::check_classical_limit(
        hypergruss::ClassicalLimit::ratio_confluent, ps, 0.5, 1.1, 0.0, opt);
    REQUIRE(limit.size() == 2);
    const auto& pc = find_report(parent, "ratio-confluent/centered");
    const auto& lc = find_report(limit, "classical/ratio-confluent/centered");
    CHECK(std::fabs(pc.lhs - lc.lhs) <= 1e-9 * std::max(1.0, std::fabs(lc.lhs)));
    CHECK(std::fabs(pc.rhs - lc.rhs) <= 1e-9 * std::max(1.0, std::fabs(lc.rhs)));

    auto limit_g = hypergruss::check_classical_limit(
        hypergruss::ClassicalLimit::ratio_gauss, ps, 0.25, 0.75, 0.0, opt);
    CHECK(limit_g.size() == 4);
    for (const auto& r : limit_g) {
        CAPTURE(r.name);
        if (r.gating) CHECK((r.holds || r.uncertain));
    }

    auto limit_s = hypergruss::check_classical_limit(
        hypergruss::ClassicalLimit::shift_confluent, ps, 0.6, 0.4, 1.2, opt);
    REQUIRE(limit_s.size() == 2);
    const auto& gating_form = find_report(limit_s, "classical/shift-confluent/exp-shift");
    CHECK(gating_form.gating);
    CHECK((gating_form.holds || gating_form.uncertain));
    CHECK_FALSE(
        find_report(limit_s, "classical/shift-confluent/exp-shift-alt").gating);

    auto limit_sg = hypergruss::check_classical_limit(
        hypergruss::ClassicalLimit::shift_gauss, ps, 0.6, 0.5, 0.4, opt);
    REQUIRE(limit_sg.size() == 1);
    CHECK(limit_sg[0].name == "classical/shift-gauss/power-shift");
    CHECK((limit_sg[0].holds || limit_sg[0].uncertain));
}

TEST_CASE("classical limit names round-trip") {
    using hypergruss::ClassicalLimit;
    for (auto k : {ClassicalLimit::ratio_confluent, ClassicalLimit::ratio_gauss,
                   ClassicalLimit::shift_confluent, ClassicalLimit::shift_gauss}) {
        auto back = hypergruss::classical_limit_from_name(
            hypergruss::classical_limit_name(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK_FALSE(hypergruss::classical_limit_from_name("nonsense").has_value());
}

TEST_CASE("report bookkeeping fields are consistent") {
    auto ps = typical_params();
    for (const auto& r : hypergruss::check_envelopes(ps, 0.5, 0.3)) {
        CHECK(r.slack == doctest::Approx(r.rhs - r.lhs).epsilon(1e-12));
        CHECK(r.err_budget >= 0.0);
        CHECK(r.holds == (r.slack >= 0.0));
        if (r.uncertain) CHECK(std::fabs(r.slack) <= 10.0 * r.err_budget);
    }
}
