#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tuttelab/config.hpp"
#include "tuttelab/graph.hpp"
#include "tuttelab/montecarlo.hpp"
#include "tuttelab/tutte.hpp"

#include <cmath>

using namespace tuttelab;

namespace {

PolySystem single_var_system() {
    MultiPoly x(1);
    x.add_term({1, 0}, BigInt(1));
    return PolySystem(std::move(x));
}

PolySystem k4_ising_system() {
    Graph k4 = build_family({FamilySpec::Kind::Complete, 4, 1, 1});
    return PolySystem(tutte_delcon(k4).with_q_set(BigInt(2)));
}

}  // namespace

TEST_CASE("estimates are reproducible across threads and chunking") {
    PolySystem sys = k4_ising_system();
    FieldSpec f5 = make_field(5);

    McConfig a{20'000, 0.05, 99, 1 << 14};
    McResult base = mc_count(sys, f5, a);

    config::set_threads(1);
    McResult serial = mc_count(sys, f5, a);
    config::set_threads(5);
    McConfig tiny = a;
    tiny.chunk = 64;
    McResult chopped = mc_count(sys, f5, tiny);
    config::set_threads(0);

    CHECK(base.hits == serial.hits);
    CHECK(base.hits == chopped.hits);
    CHECK(base.b_hat == serial.b_hat);

    // and a different seed genuinely changes the sample
    McConfig other = a;
    other.seed = 100;
    CHECK(mc_count(sys, f5, other).hits != base.hits);
}

TEST_CASE("error bound follows the formula") {
    PolySystem sys = single_var_system();
    FieldSpec f5 = make_field(5);

    const double want_const = 4.0 * std::log(2.0 / 0.05);
    for (uint64_t n : {10'000ull, 40'000ull, 160'000ull}) {
        McResult r = mc_count(sys, f5, {n, 0.05, 7, 1 << 14});
        double b = r.b_hat.convert_to<double>();
        REQUIRE(b > 0);
        // epsilon^2 N / b_hat is the fixed constant 4 ln(2/delta)
        CHECK(std::abs(r.epsilon * r.epsilon * static_cast<double>(n) / b - want_const) <
              1e-9);
    }

    // quadrupling N at frozen b halves the bound exactly
    McResult r1 = mc_count(sys, f5, {10'000, 0.05, 7, 1 << 14});
    double b = r1.b_hat.convert_to<double>();
    double eps_n = std::sqrt(want_const * b / 10'000.0);
    double eps_4n = std::sqrt(want_const * b / 40'000.0);
    CHECK(std::abs(eps_n - 2.0 * eps_4n) < 1e-15);

    // monotone in delta through the log factor
    McResult loose = mc_count(sys, f5, {10'000, 0.5, 7, 1 << 14});
    CHECK(loose.epsilon < r1.epsilon);
}

TEST_CASE("law of large numbers on a known fraction") {
    PolySystem sys = single_var_system();  // b = 1/5 exactly
    McResult r = mc_count(sys, make_field(5), {1'000'000, 0.05, 2026, 1 << 14});
    double b_hat = r.b_hat.convert_to<double>();
    CHECK(std::abs(b_hat - 0.2) <= 3.0 * r.epsilon);
    CHECK(r.trials == 1'000'000);
    CHECK(r.seed == 2026);
}

TEST_CASE("tetrahedron fraction lands near 413/729") {
    McResult r = mc_count(k4_ising_system(), make_field(3), {10'000, 0.05, 11, 1 << 14});
    double truth = 413.0 / 729.0;
    CHECK(std::abs(r.b_hat.convert_to<double>() - truth) <= 3.0 * r.epsilon);
    CHECK(std::abs(r.estimate - 413.0) / 413.0 < 0.1);
}

TEST_CASE("comparison rows") {
    McComparisonRow row =
        mc_vs_exact(k4_ising_system(), make_field(5), {10'000, 0.05, 3, 1 << 14});
    CHECK(row.exact == 4449);
    CHECK(!row.absolute);
    CHECK(std::abs(row.error) < 0.1);
    CHECK(row.bound > 0);
    CHECK(row.p == 5);

    // hint path must short-circuit identically
    McComparisonRow hinted = mc_vs_exact(k4_ising_system(), make_field(5),
                                         {10'000, 0.05, 3, 1 << 14}, BigInt(4449));
    CHECK(hinted.estimate == row.estimate);

    // rootless system: relative error is undefined, report the difference
    MultiPoly quad(1);
    quad.add_term({2, 0}, BigInt(1));
    quad.add_term({1, 0}, BigInt(2));
    quad.add_term({0, 0}, BigInt(2));
    McComparisonRow zero =
        mc_vs_exact(PolySystem(quad), make_field(3), {5'000, 0.05, 3, 1 << 14});
    CHECK(zero.exact == 0);
    CHECK(zero.absolute);
    CHECK(zero.error == zero.estimate);
    CHECK(zero.estimate == 0.0);  // the polynomial literally has no roots to hit
}

TEST_CASE("per-q probe shapes") {
    Graph tri = build_family({FamilySpec::Kind::Polygon, 3, 1, 1});

    // p = 3: one spin value, estimate only
    McFibrationReport lone = fibration_mc_probe(tri, make_field(3), {2'000, 0.05, 5, 512});
    CHECK(lone.per_q.size() == 1);
    CHECK(!lone.non_constant.has_value());

    CHECK_THROWS_AS(fibration_mc_probe(tri, make_field(2), {100, 0.05, 5, 512}), UsageError);

    // constant family: the square over F_5 has equal counts at q = 2, 3, 4
    Graph c4 = build_family({FamilySpec::Kind::Polygon, 4, 1, 1});
    McFibrationReport flat = fibration_mc_probe(c4, make_field(5), {200'000, 0.05, 31, 1 << 14});
    REQUIRE(flat.per_q.size() == 3);
    REQUIRE(flat.non_constant.has_value());
    CHECK(!*flat.non_constant);
}

TEST_CASE("configuration validation") {
    PolySystem sys = single_var_system();
    FieldSpec f = make_field(3);
    CHECK_THROWS_AS(mc_count(sys, f, {0, 0.05, 1, 64}), UsageError);
    CHECK_THROWS_AS(mc_count(sys, f, {10, 0.0, 1, 64}), UsageError);
    CHECK_THROWS_AS(mc_count(sys, f, {10, 1.0, 1, 64}), UsageError);
    CHECK_THROWS_AS(mc_count(sys, f, {10, 0.05, 1, 0}), UsageError);
}
