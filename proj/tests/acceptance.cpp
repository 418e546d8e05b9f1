// Acceptance suite: one pass/fail line per criterion, every tolerance and
// seed pinned here in code. Exit status is 0 only if every criterion holds.

#include "tuttelab/classpoly.hpp"
#include "tuttelab/config.hpp"
#include "tuttelab/counting.hpp"
#include "tuttelab/decomposition.hpp"
#include "tuttelab/field.hpp"
#include "tuttelab/fitting.hpp"
#include "tuttelab/graph.hpp"
#include "tuttelab/montecarlo.hpp"
#include "tuttelab/numbers.hpp"
#include "tuttelab/reduction.hpp"
#include "tuttelab/reference_tables.hpp"
#include "tuttelab/thermo.hpp"
#include "tuttelab/tutte.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace tuttelab;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& msg) {
        pass = false;
        notes.push_back(msg);
    }
    void note(const std::string& msg) { notes.push_back(msg); }
};

// Shared graph corpus: cycles, paths, the tetrahedron, and two-block chains.
std::vector<std::pair<std::string, Graph>> corpus() {
    std::vector<std::pair<std::string, Graph>> out;
    out.emplace_back("polygon:3", build_family({FamilySpec::Kind::Polygon, 3}));
    out.emplace_back("polygon:4", build_family({FamilySpec::Kind::Polygon, 4}));
    out.emplace_back("polygon:5", build_family({FamilySpec::Kind::Polygon, 5}));
    out.emplace_back("tree:2", build_family({FamilySpec::Kind::Tree, 2}));
    out.emplace_back("tree:3", build_family({FamilySpec::Kind::Tree, 3}));
    out.emplace_back("k4", build_family({FamilySpec::Kind::Complete, 4}));
    out.emplace_back("bowtie", Graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
    out.emplace_back("polychain:m=2,k=1,N=2",
                     build_family({FamilySpec::Kind::PolygonChain, 2, 1, 2}));
    return out;
}

const long long kIsingPrimes[8] = {3, 5, 7, 11, 13, 17, 19, 23};
const long long kIsingCounts[8] = {413,     4449,    20901,   180333,
                                   403025,  1493449, 2580541, 6627909};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PolySystem z_system(const Graph& g, long long q) {
    return PolySystem(tutte_delcon(g).with_q_set(BigInt(q)));
}

// ---------------------------------------------------------------- criterion 1
void c01_ising_counts(Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    double small_secs = 0.0;
    for (int i = 0; i < 8; ++i) {
        const long long p = kIsingPrimes[i];
        CountRecord rec = tutte_count(build_family({FamilySpec::Kind::Complete, 4}), 2,
                                      make_field(static_cast<uint32_t>(p)));
        if (rec.count != BigInt(kIsingCounts[i]))
            out.fail("p=" + std::to_string(p) + ": got " + rec.count.str() + ", want " +
                     std::to_string(kIsingCounts[i]));
        if (p <= 13) small_secs = seconds_since(t0);
    }
    double total = seconds_since(t0);
    if (small_secs >= 10.0)
        out.fail("p <= 13 runtime " + std::to_string(small_secs) + " s, limit 10 s");
    if (total >= 300.0)
        out.fail("full sweep runtime " + std::to_string(total) + " s, limit 300 s");
    out.note("p <= 13 in " + std::to_string(small_secs) + " s, all eight primes in " +
             std::to_string(total) + " s");
}

// ---------------------------------------------------------------- criterion 2
void c02_fibration_failure(Outcome& out) {
    FibrationReport rep =
        fibration_test(build_family({FamilySpec::Kind::Complete, 4}), make_field(11));
    if (rep.counts[0] != BigInt(1771561))
        out.fail("q=0 count " + rep.counts[0].str() + ", want 1771561");
    if (rep.counts[1] != BigInt(771561))
        out.fail("q=1 count " + rep.counts[1].str() + ", want 771561");
    if (rep.verdict != FibrationReport::Verdict::Fails)
        out.fail("verdict is not 'fails': " + rep.detail);
    if (rep.counts[2] != BigInt(180333))
        out.fail("q=2 count " + rep.counts[2].str() + ", want 180333");
    const long long printed = reference::k4_per_q_f11[2].published;
    if (BigInt(printed) == rep.counts[2]) {
        out.fail("expected the published per-q table to disagree at q=2");
    } else {
        out.note("discrepancy log: published per-q table prints " + std::to_string(printed) +
                 " at q=2; enumeration and the q=2 count table both give 180333");
    }
    for (int q = 3; q <= 10; ++q)
        if (rep.counts[q] != BigInt(reference::k4_per_q_f11[q].published))
            out.fail("q=" + std::to_string(q) + " count " + rep.counts[q].str() +
                     " disagrees with the published per-q table " +
                     std::to_string(reference::k4_per_q_f11[q].published));
}

// ---------------------------------------------------------------- criterion 3
void c03_q1_law(Outcome& out) {
    for (const auto& [name, g] : corpus()) {
        const int m = g.edge_count();
        for (uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
            BigInt got = tutte_count(g, 1, make_field(p)).count;
            BigInt want = ipow(BigInt(p), m) - ipow(BigInt(p) - 1, m);
            if (got != want)
                out.fail(name + " p=" + std::to_string(p) + ": got " + got.str() +
                         ", want " + want.str());
        }
    }
}

// ---------------------------------------------------------------- criterion 4
void c04_divisible_q(Outcome& out) {
    const std::vector<std::pair<long long, uint32_t>> cases = {
        {2, 2}, {3, 3}, {4, 2}, {6, 2}, {6, 3}};
    for (const auto& [name, g] : corpus()) {
        const int m = g.edge_count();
        for (const auto& [q, p] : cases) {
            FieldSpec field = make_field(p);
            BigInt want = ipow(BigInt(p), m);
            BigInt got = tutte_count(g, q, field).count;
            if (got != want)
                out.fail(name + " q=" + std::to_string(q) + " p=" + std::to_string(p) +
                         ": got " + got.str() + ", want " + want.str());
            // cross-check one way that does not know about the collapse
            if (ipow(BigInt(p), m) <= BigInt(1000000)) {
                BigInt direct = brute_count(z_system(g, q), field).count;
                if (direct != want)
                    out.fail(name + " q=" + std::to_string(q) + " p=" + std::to_string(p) +
                             ": direct enumeration got " + direct.str());
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 5
void c05_polygon_class(Outcome& out) {
    int rows = 0, bad = 0;
    for (int m = 1; m <= 4; ++m) {
        Graph cyc = build_family({FamilySpec::Kind::Polygon, m + 1});
        ClassPoly cls = class_polygon(m);
        for (long long q : {2, 3, 5}) {
            for (uint64_t size : {3u, 4u, 5u, 7u, 9u}) {
                FieldSpec field = size == 4   ? make_field(2, 2)
                                  : size == 9 ? make_field(3, 2)
                                              : make_field(static_cast<uint32_t>(size));
                if (q % field.p() == 0) continue;  // gcd(q, char) != 1
                ++rows;
                BigInt predicted = evaluate_class(cls, BigInt(size), m + 1);
                BigInt counted = tutte_count(cyc, q, field).count;
                if (predicted != counted) {
                    ++bad;
                    std::string why = (q % field.p() == 1)
                                          ? " (q acts as 1 in characteristic " +
                                                std::to_string(field.p()) +
                                                "; the closed form assumes q outside {0,1}"
                                                " in the base field)"
                                          : "";
                    out.fail("m=" + std::to_string(m) + " q=" + std::to_string(q) +
                             " field size " + std::to_string(size) + ": class predicts " +
                             predicted.str() + ", enumeration gives " + counted.str() + why);
                }
            }
        }
    }
    out.note(std::to_string(rows) + " grid rows, " + std::to_string(bad) + " mismatches");
}

// ---------------------------------------------------------------- criterion 6
void c06_deletion_contraction(Outcome& out) {
    for (const auto& [name, g] : corpus())
        if (tutte_subset(g).key() != tutte_delcon(g).key())
            out.fail(name + ": subset and deletion-contraction expansions differ");

    std::vector<std::pair<std::string, Graph>> trio = {
        {"polygon:3", build_family({FamilySpec::Kind::Polygon, 3})},
        {"polygon:4", build_family({FamilySpec::Kind::Polygon, 4})},
        {"k4", build_family({FamilySpec::Kind::Complete, 4})}};
    for (const auto& [name, g] : trio) {
        for (uint32_t p : {3u, 5u, 7u}) {
            FieldSpec field = make_field(p);
            const BigRat inv_q(1, p);
            for (long long q : {2, 3}) {
                PolySystem whole = z_system(g, q);
                BigRat z_whole = zfrak(whole, field);
                BigRat zc_whole = zfrak_complement(whole, field);
                for (int e = 0; e < g.edge_count(); ++e) {
                    PolySystem con = z_system(g.contracted(e), q);
                    PolySystem del = z_system(g.deleted(e), q);
                    PolySystem joint(
                        std::vector<MultiPoly>{con.polys[0], del.polys[0]});
                    BigRat z_con = zfrak(con, field);
                    BigRat rhs = inv_q - inv_q * z_con + zfrak(joint, field);
                    if (z_whole != rhs)
                        out.fail(name + " e=" + std::to_string(e) + " p=" +
                                 std::to_string(p) + " q=" + std::to_string(q) +
                                 ": zero-fraction recursion broken");
                    BigRat rhs_vee = zfrak_complement(joint, field) -
                                     inv_q * zfrak_complement(con, field);
                    if (zc_whole != rhs_vee)
                        out.fail(name + " e=" + std::to_string(e) + " p=" +
                                 std::to_string(p) + " q=" + std::to_string(q) +
                                 ": complement recursion broken");
                    DelconCountReport rep = delcon_count_identity(g, e, q, field);
                    if (!rep.holds)
                        out.fail(name + " e=" + std::to_string(e) + " p=" +
                                 std::to_string(p) + " q=" + std::to_string(q) +
                                 ": count identity broken: " + rep.detail);
                }
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 7
void c07_fortuin_kasteleyn(Outcome& out) {
    std::mt19937_64 rng(0xAB5EEDull);
    for (const auto& [name, g] : corpus()) {
        if (g.vertex_count() > 6) continue;
        MultiPoly z = tutte_subset(g);
        for (long long q : {1, 2, 3}) {
            for (int round = 0; round < 50; ++round) {
                std::vector<BigInt> t(g.edge_count());
                for (auto& w : t) w = BigInt(static_cast<long long>(rng() % 9) - 3);
                BigInt via_sum = potts_state_sum(g, q, t);
                BigInt via_tutte = z.evaluate<BigInt>(BigInt(q), t);
                if (via_sum != via_tutte) {
                    out.fail(name + " q=" + std::to_string(q) + " round " +
                             std::to_string(round) + ": state sum " + via_sum.str() +
                             " vs subset expansion " + via_tutte.str());
                    break;
                }
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 8
void c08_reduction_oracle(Outcome& out) {
    std::mt19937_64 rng(0x0DDC0DEull);
    const std::vector<FieldSpec> fields = {make_field(3), make_field(2, 2), make_field(5),
                                           make_field(7), make_field(3, 2)};
    int ran = 0;
    // 70 random sparse systems
    while (ran < 70) {
        const int m = 4 + static_cast<int>(rng() % 3);
        const FieldSpec& field = fields[rng() % fields.size()];
        const int npolys = 1 + static_cast<int>(rng() % 2);
        std::vector<MultiPoly> polys;
        for (int k = 0; k < npolys; ++k) {
            MultiPoly f(m);
            const int terms = 2 + static_cast<int>(rng() % 6);
            for (int s = 0; s < terms; ++s) {
                std::vector<uint32_t> exps(m + 1, 0);
                for (int v = 0; v < m; ++v) exps[v] = rng() % 3;
                f.add_term(exps, BigInt(static_cast<long long>(rng() % 9) - 4));
            }
            polys.push_back(std::move(f));
        }
        PolySystem sys(std::move(polys));
        BigInt a = brute_count(sys, field).count;
        BigInt b = reduced_count(sys, field).count;
        if (a != b)
            out.fail("random system " + std::to_string(ran) + " over F_" +
                     std::to_string(field.size()) + ": brute " + a.str() + " vs reduced " +
                     b.str());
        ++ran;
    }
    // 30 graph hypersurfaces with random spin counts
    auto graphs = corpus();
    while (ran < 100) {
        const auto& [name, g] = graphs[rng() % graphs.size()];
        const FieldSpec& field = fields[rng() % fields.size()];
        if (ipow(BigInt(static_cast<long long>(field.size())), g.edge_count()) >
            BigInt(10000000))
            continue;
        long long q = 2 + static_cast<long long>(rng() % 5);
        PolySystem sys = z_system(g, q);
        BigInt a = brute_count(sys, field).count;
        BigInt b = reduced_count(sys, field).count;
        if (a != b)
            out.fail(name + " q=" + std::to_string(q) + " over F_" +
                     std::to_string(field.size()) + ": brute " + a.str() + " vs reduced " +
                     b.str());
        ++ran;
    }
    out.note("100 systems verified");
}

// ---------------------------------------------------------------- criterion 9
void c09_quadratic_pattern(Outcome& out) {
    MultiPoly x = MultiPoly::var_t(1, 0);
    MultiPoly f = x * x + MultiPoly::constant(1, 2) * x + MultiPoly::constant(1, 2);
    for (uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
        FieldSpec field = make_field(p);
        BigRat z = zfrak(PolySystem(f), field);
        BigRat want = (p % 4 == 1) ? BigRat(2, p) : BigRat(0);
        if (z != want)
            out.fail("p=" + std::to_string(p) + ": zero fraction " + z.str() + ", want " +
                     want.str());
    }
    FieldSpec f5 = make_field(5);
    std::set<uint32_t> roots;
    for (uint32_t v = 0; v < 5; ++v) {
        FieldElement val = eval_poly(f, f5, f5.zero(), {f5.from_integer(v)});
        if (val == f5.zero()) roots.insert(v);
    }
    if (roots != std::set<uint32_t>{1, 2}) {
        std::string got;
        for (uint32_t v : roots) got += std::to_string(v) + " ";
        out.fail("roots over F_5 are {" + got + "}, want {1, 2}");
    }
}

// --------------------------------------------------------------- criterion 10
void c10_monte_carlo(Outcome& out) {
    Graph k4 = build_family({FamilySpec::Kind::Complete, 4});
    PolySystem sys = z_system(k4, 2);
    FieldSpec f3 = make_field(3);

    // (a) the error radius halves exactly when the trial count quadruples
    McConfig cfg;
    cfg.trials = 10000;
    cfg.delta = 0.05;
    cfg.seed = 7;
    McResult probe = mc_count(sys, f3, cfg);
    const double ln_term = std::log(2.0 / cfg.delta);
    const double b_hat = static_cast<double>(probe.b_hat);
    double eps_n = std::sqrt(4.0 * b_hat * ln_term / 10000.0);
    double eps_4n = std::sqrt(4.0 * b_hat * ln_term / 40000.0);
    if (std::abs(probe.epsilon - eps_n) > 1e-12 * eps_n)
        out.fail("reported epsilon does not follow the bound formula");
    if (eps_4n != eps_n / 2.0)
        out.fail("epsilon fails to halve exactly at quadrupled trials");

    // (b) coverage across 200 seeds
    const double b_true = 413.0 / 729.0;
    int covered = 0;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        cfg.seed = seed;
        McResult r = mc_count(sys, f3, cfg);
        if (std::abs(static_cast<double>(r.b_hat) - b_true) <= r.epsilon) ++covered;
    }
    if (covered < 184)
        out.fail("coverage " + std::to_string(covered) + "/200, need >= 184");
    else
        out.note("coverage " + std::to_string(covered) + "/200 at delta=0.05");

    // (c) relative error at 10^4 trials stays below 0.1 for p <= 23, seed 2
    cfg.seed = 2;
    for (int i = 0; i < 8; ++i) {
        FieldSpec field = make_field(static_cast<uint32_t>(kIsingPrimes[i]));
        McComparisonRow row = mc_vs_exact(sys, field, cfg, BigInt(kIsingCounts[i]));
        if (row.absolute || std::abs(row.error) >= 0.1)
            out.fail("p=" + std::to_string(kIsingPrimes[i]) + ": relative error " +
                     std::to_string(row.error) + ", want |err| < 0.1");
    }
}

// --------------------------------------------------------------- criterion 11
void c11_fitter(Outcome& out) {
    // the eight tetrahedron points admit no integer polynomial of degree <= 6
    std::vector<FitPoint> k4_points;
    for (int i = 0; i < 8; ++i)
        k4_points.push_back({BigInt(kIsingPrimes[i]), BigInt(kIsingCounts[i])});
    CountabilityVerdict v = fit_count_polynomial(k4_points, 6);
    if (v.status != CountabilityVerdict::Status::NonPolynomial)
        out.fail("tetrahedron data did not come back non-polynomial");
    else
        out.note("tetrahedron witness: " + v.witness);

    // polygon datasets recover the published expansions
    for (int m = 1; m <= 5; ++m) {
        Graph cyc = build_family({FamilySpec::Kind::Polygon, m + 1});
        std::vector<FitPoint> pts;
        for (int i = 0; i < 8; ++i) {
            FieldSpec field = make_field(static_cast<uint32_t>(kIsingPrimes[i]));
            pts.push_back({BigInt(kIsingPrimes[i]), tutte_count(cyc, 2, field).count});
        }
        CountabilityVerdict pv = fit_count_polynomial(pts, m);
        if (pv.status != CountabilityVerdict::Status::PolynomialCandidate) {
            out.fail("polygon m=" + std::to_string(m) + " did not fit: " + pv.witness);
            continue;
        }
        std::vector<BigInt> want;
        for (int i = 0; i <= m; ++i)
            want.push_back(BigInt(reference::polygon_q2_counts[m - 1][i]));
        if (UniPoly(pv.coeffs) != UniPoly(want))
            out.fail("polygon m=" + std::to_string(m) + " coefficients " +
                     UniPoly(pv.coeffs).str("s") + " differ from the closed form " +
                     UniPoly(want).str("s"));
    }

    // synthetic recovery: degree 5 and degree 3, six points each
    auto eval_at = [](const std::vector<BigInt>& c, long long x) {
        BigInt acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    const std::vector<std::vector<BigInt>> targets = {
        {BigInt(-9), BigInt(1), BigInt(0), BigInt(2), BigInt(-7), BigInt(3)},
        {BigInt(5), BigInt(-2), BigInt(0), BigInt(4)}};
    for (const auto& target : targets) {
        std::vector<FitPoint> pts;
        for (long long x : {2, 3, 4, 5, 6, 7}) pts.push_back({BigInt(x), eval_at(target, x)});
        CountabilityVerdict sv = fit_count_polynomial(pts, 5);
        if (sv.status != CountabilityVerdict::Status::PolynomialCandidate ||
            UniPoly(sv.coeffs) != UniPoly(target))
            out.fail("synthetic polynomial " + UniPoly(target).str("x") +
                     " was not recovered exactly");
    }
}

// --------------------------------------------------------------- criterion 12
void c12_chains(Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    Graph k4 = build_family({FamilySpec::Kind::Complete, 4});
    FieldSpec f3 = make_field(3);

    std::vector<std::pair<Graph, CountRecord>> blocks;
    blocks.emplace_back(k4, tutte_count(k4, 2, f3));
    blocks.emplace_back(k4, tutte_count(k4, 2, f3));
    CountRecord formula = chain_count(blocks, 2, f3);
    if (formula.count != BigInt(431585))
        out.fail("tetrachain:2 formula value " + formula.count.str() + ", want 431585");

    Graph chain2 = build_family({FamilySpec::Kind::TetraChain, 2});
    BigInt direct = brute_count(z_system(chain2, 2), f3).count;
    if (direct != BigInt(431585))
        out.fail("tetrachain:2 direct enumeration " + direct.str() + ", want 431585");

    Graph tri = build_family({FamilySpec::Kind::Polygon, 3});
    Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    for (uint32_t p : {3u, 5u}) {
        FieldSpec field = make_field(p);
        std::vector<std::pair<Graph, CountRecord>> two;
        two.emplace_back(tri, tutte_count(tri, 2, field));
        two.emplace_back(tri, tutte_count(tri, 2, field));
        BigInt via_formula = chain_count(two, 2, field).count;
        BigInt via_brute = brute_count(z_system(bowtie, 2), field).count;
        if (via_formula != via_brute)
            out.fail("two triangles at p=" + std::to_string(p) + ": formula " +
                     via_formula.str() + " vs direct " + via_brute.str());
    }
    double secs = seconds_since(t0);
    if (secs >= 60.0) out.fail("runtime " + std::to_string(secs) + " s, limit 60 s");
    out.note("done in " + std::to_string(secs) + " s");
}

// --------------------------------------------------------------- criterion 13
void c13_decomposition_audit(Outcome& out) {
    for (uint32_t p : {3u, 5u, 7u}) {
        K4DecompositionReport rep = k4_decomposition_check(make_field(p));
        if (rep.terms.empty() || rep.detail.empty()) {
            out.fail("p=" + std::to_string(p) + ": report missing term-by-term values");
            continue;
        }
        out.note("p=" + std::to_string(p) + ": formula " + rep.formula_value.str() +
                 ", direct " + rep.brute_value.str() + ", " +
                 (rep.match ? "match" : "MISMATCH"));
        for (const ZTermReport& term : rep.terms)
            out.note("  " + term.label + ": zfrak " + term.z.str() + " x scale " +
                     term.scale_value.str() + " = " + term.contribution.str());
    }
}

// --------------------------------------------------------------- criterion 14
void c14_periods(Outcome& out) {
    // constant observable: normalized average is exactly 1 with zero spread
    Graph c4 = build_family({FamilySpec::Kind::Polygon, 4});
    PeriodEstimate one =
        normalized_period(c4, 2, RatPoly::constant(4, BigRat(1)), 4096, 5);
    if (one.value != 1.0 || one.std_error != 0.0)
        out.fail("constant observable gave " + std::to_string(one.value) + " +- " +
                 std::to_string(one.std_error) + ", want exactly 1 +- 0");

    // single edge at q = 2: the zero-dimensional simplex pins <t_1> = 1/3
    Graph bridge = build_family({FamilySpec::Kind::Tree, 1});
    PeriodEstimate third = period_estimate(bridge, 2, RatPoly::var_t(1, 0), 8192, 3);
    if (third.value != 1.0 / 3.0 || third.std_error != 0.0)
        out.fail("single-edge average came out " + std::to_string(third.value) + " +- " +
                 std::to_string(third.std_error) + ", want exactly 1/3 +- 0");

    // standard error scales like N^{-1/2} within factor 1.5, 50 seeds
    Graph tri = build_family({FamilySpec::Kind::Polygon, 3});
    RatPoly t1 = RatPoly::var_t(3, 0);
    int off_count = 0;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        PeriodEstimate lo = period_estimate(tri, 2, t1, 2000, seed);
        PeriodEstimate hi = period_estimate(tri, 2, t1, 8000, seed);
        double ratio = lo.std_error / hi.std_error;
        if (!(ratio >= 2.0 / 1.5 && ratio <= 2.0 * 1.5)) {
            ++off_count;
            out.fail("seed " + std::to_string(seed) + ": se ratio " + std::to_string(ratio) +
                     " outside [1.333, 3.0]");
        }
    }
    if (off_count == 0) out.note("se ratio within [1.333, 3.0] for all 50 seeds");

    // positivity of the partition function across the corpus at one million samples
    for (const auto& [name, g] : corpus()) {
        try {
            PeriodEstimate est =
                period_estimate(g, 2, RatPoly::var_t(g.edge_count(), 0), 1000000, 11);
            if (!std::isfinite(est.value) || !std::isfinite(est.std_error))
                out.fail(name + ": non-finite estimate");
        } catch (const std::exception& e) {
            out.fail(name + ": " + e.what());
        }
    }
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        void (*fn)(Outcome&);
    };
    const Entry entries[] = {
        {1, "tetrahedron Ising counts p=3..23 with runtime targets", c01_ising_counts},
        {2, "fibration condition fails for the tetrahedron at p=11", c02_fibration_failure},
        {3, "q=1 counts follow p^m - (p-1)^m on the corpus", c03_q1_law},
        {4, "p | q collapses the count to p^m on the corpus", c04_divisible_q},
        {5, "polygon class formula matches enumeration on the grid", c05_polygon_class},
        {6, "deletion-contraction identities, symbolic and numeric", c06_deletion_contraction},
        {7, "state sum equals the subset expansion (50 random weights)", c07_fortuin_kasteleyn},
        {8, "reduction engine agrees with enumeration on 100 systems", c08_reduction_oracle},
        {9, "x^2+2x+2 zero fractions follow p mod 4; roots {1,2} at p=5",
         c09_quadratic_pattern},
        {10, "Monte Carlo bound formula, coverage, and error magnitude", c10_monte_carlo},
        {11, "countability fitter: refutation, polygons, synthetic recovery", c11_fitter},
        {12, "chain formula: tetrachain:2 = 431585 and two triangles", c12_chains},
        {13, "tetrahedron count decomposition audit at p=3,5,7", c13_decomposition_audit},
        {14, "period estimates: exact anchors, se scaling, positivity", c14_periods},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            e.fn(out);
        } catch (const std::exception& ex) {
            out.fail(std::string("unexpected exception: ") + ex.what());
        }
        double secs = seconds_since(t0);
        std::printf("[%s] criterion %2d: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", e.id,
                    e.title, secs);
        for (const std::string& n : out.notes) std::printf("         %s\n", n.c_str());
        if (!out.pass) ++failures;
        std::fflush(stdout);
    }
    std::printf("%d of 14 criteria passed\n", 14 - failures);
    return failures == 0 ? 0 : 1;
}
