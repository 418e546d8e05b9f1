#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tuttelab/counting.hpp"
#include "tuttelab/graph.hpp"
#include "tuttelab/reduction.hpp"
#include "tuttelab/tutte.hpp"

#include <random>

using namespace tuttelab;

namespace {

Graph k4() { return build_family({FamilySpec::Kind::Complete, 4, 1, 1}); }

MultiPoly x2_2x_2() {
    // x^2 + 2x + 2 in one variable
    MultiPoly f(1);
    f.add_term({2, 0}, BigInt(1));
    f.add_term({1, 0}, BigInt(2));
    f.add_term({0, 0}, BigInt(2));
    return f;
}

}  // namespace

TEST_CASE("ising counts on the tetrahedron, small primes") {
    CHECK(tutte_count(k4(), 2, make_field(3)).count == 413);
    CHECK(tutte_count(k4(), 2, make_field(5)).count == 4449);
    CHECK(tutte_count(k4(), 2, make_field(7)).count == 20901);
}

TEST_CASE("polygon counts at q=2 across fields") {
    auto poly = [](int s) { return build_family({FamilySpec::Kind::Polygon, s, 1, 1}); };
    struct Row {
        int sides;
        uint32_t p, r;
        long long want;
    };
    const Row rows[] = {
        {2, 3, 1, 2},    {2, 5, 1, 4},    {2, 7, 1, 6},    {2, 3, 2, 8},
        {3, 3, 1, 13},   {3, 5, 1, 31},   {3, 7, 1, 57},   {3, 3, 2, 91},
        {4, 3, 1, 50},   {4, 5, 1, 214},  {4, 7, 1, 538},  {4, 3, 2, 1070},
        {5, 3, 1, 181},  {5, 5, 1, 1381}, {5, 7, 1, 4901}, {5, 3, 2, 12421},
    };
    for (const auto& row : rows) {
        CAPTURE(row.sides);
        CAPTURE(row.p);
        CAPTURE(row.r);
        CHECK(tutte_count(poly(row.sides), 2, make_field(row.p, row.r)).count == row.want);
    }
}

TEST_CASE("q=1 closed form") {
    const Graph gs[] = {
        Graph(2, {{0, 1}}),
        Graph(3, {{0, 1}, {1, 2}, {2, 0}}),
        k4(),
        build_family({FamilySpec::Kind::Polygon, 4, 1, 1}),
    };
    for (uint32_t p : {2u, 3u, 5u}) {
        FieldSpec f = make_field(p);
        for (const Graph& g : gs) {
            int m = g.edge_count();
            BigInt want = ipow(BigInt(p), m) - ipow(BigInt(p) - 1, m);
            CHECK(tutte_count(g, 1, f).count == want);
        }
    }
}

TEST_CASE("q divisible by the characteristic collapses everything") {
    CHECK(tutte_count(k4(), 3, make_field(3)).count == 729);
    CHECK(tutte_count(k4(), 0, make_field(5)).count == 15625);
    CHECK(tutte_count(k4(), 10, make_field(5)).count == 15625);
    // and it skips enumeration, so a huge space is fine
    Graph big = build_family({FamilySpec::Kind::TetraChain, 4, 1, 1});  // 24 edges
    CHECK(tutte_count(big, 5, make_field(5)).count == ipow(BigInt(5), 24));
}

TEST_CASE("single quadratic, known root counts") {
    PolySystem sys(x2_2x_2());
    CHECK(brute_count(sys, make_field(5)).count == 2);
    CHECK(brute_count(sys, make_field(7)).count == 0);
    CHECK(brute_count(sys, make_field(3)).count == 0);
    CHECK(brute_count(sys, make_field(13)).count == 2);

    CHECK(zfrak(sys, make_field(5)) == BigRat(2, 5));
    CHECK(zfrak(sys, make_field(7)) == 0);
    CHECK(zfrak_complement(sys, make_field(5)) == BigRat(3, 5));
}

TEST_CASE("constants and the zero polynomial") {
    PolySystem two(MultiPoly::constant(0, BigInt(2)));
    CHECK(zfrak(two, make_field(3)) == 0);
    CHECK(zfrak(two, make_field(2)) == 1);

    PolySystem zero(MultiPoly(3));
    CHECK(zfrak(zero, make_field(3)) == 1);
    CHECK(brute_count(zero, make_field(3)).count == 27);
}

TEST_CASE("zfrak denominators divide the space size") {
    Graph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    MultiPoly z = tutte_subset(tri).with_q_set(BigInt(2));
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{3, 1}, {5, 1}, {3, 2}}) {
        FieldSpec f = make_field(p, r);
        BigRat v = zfrak(PolySystem(z), f);
        CHECK(v >= 0);
        CHECK(v <= 1);
        BigInt space = point_space_size(f, 3);
        CHECK(space % boost::multiprecision::denominator(v) == 0);
    }
}

TEST_CASE("joint enumeration over (q, t)") {
    // bridge: q^2 + q t = 0 over F_3: q=0 gives 3 points, q!=0 forces t=-q
    Graph bridge(2, {{0, 1}});
    CHECK(tutte_count_joint(bridge, make_field(3)).count == 5);

    // cross-check against a plain double loop
    FieldSpec f5 = make_field(5);
    MultiPoly z = tutte_subset(bridge);
    long long direct = 0;
    for (uint32_t a = 0; a < 5; ++a)
        for (uint32_t b = 0; b < 5; ++b)
            if (eval_poly(z, f5, FieldElement{a}, {FieldElement{b}}).idx == 0) ++direct;
    CHECK(tutte_count_joint(bridge, f5).count == direct);
}

TEST_CASE("chunking and thread count do not change the result") {
    Graph c4 = build_family({FamilySpec::Kind::Polygon, 4, 1, 1});
    FieldSpec f7 = make_field(7);
    config::set_threads(1);
    BigInt one = tutte_count(c4, 2, f7).count;
    config::set_threads(7);
    BigInt seven = tutte_count(c4, 2, f7).count;
    config::set_threads(0);
    CHECK(one == seven);
    CHECK(one == 538);
}

TEST_CASE("budget enforcement") {
    config::set_point_budget(100);
    CHECK_THROWS_AS(tutte_count(k4(), 2, make_field(3)), BudgetExceeded);
    config::set_point_budget(2'000'000'000ull);
}

TEST_CASE("deletion-contraction count identity") {
    auto run = [](const Graph& g, long long q, uint32_t p) {
        FieldSpec f = make_field(p);
        for (int e = 0; e < g.edge_count(); ++e) {
            DelconCountReport rep = delcon_count_identity(g, e, q, f);
            CAPTURE(e);
            CAPTURE(p);
            CHECK(rep.holds);
        }
    };
    run(build_family({FamilySpec::Kind::Polygon, 4, 1, 1}), 2, 3);
    run(k4(), 2, 5);
    run(Graph(1, {{0, 0}}), 3, 5);
}

TEST_CASE("wedge chain shortcut") {
    FieldSpec f3 = make_field(3);

    // single block: formula reduces to the block count
    CountRecord nk4 = tutte_count(k4(), 2, f3);
    CountRecord chained = chain_count({{k4(), nk4}}, 2, f3);
    CHECK(chained.count == nk4.count);
    CHECK(chained.method == "chain-formula");

    // two triangles sharing a vertex
    Graph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CountRecord ntri = tutte_count(tri, 2, f3);
    CountRecord wedge = chain_count({{tri, ntri}, {tri, ntri}}, 2, f3);
    CHECK(wedge.count == tutte_count(bowtie, 2, f3).count);

    CHECK_THROWS_AS(chain_count({{tri, ntri}}, 3, f3), UsageError);
    CHECK_THROWS_AS(chain_count({{tri, ntri}}, 2, make_field(5)), UsageError);
}

TEST_CASE("reduction engine matches brute force") {
    // named instances first
    CHECK(reduced_count(PolySystem(tutte_subset(k4()).with_q_set(BigInt(2))),
                        make_field(7))
              .count == 20901);
    Graph tri(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(reduced_count(PolySystem(tutte_subset(tri).with_q_set(BigInt(2))),
                        make_field(5))
              .count == 31);

    // one linear polynomial with a unit leading coefficient has one root
    MultiPoly lin(1);
    lin.add_term({1, 0}, BigInt(3));
    lin.add_term({0, 0}, BigInt(4));
    CHECK(reduced_count(PolySystem(lin), make_field(5)).count == 1);

    // randomized sweep, mixed fields and system sizes
    std::mt19937_64 rng(0xA11CE5);
    const FieldSpec fields[] = {make_field(3), make_field(5), make_field(2, 2)};
    for (int round = 0; round < 24; ++round) {
        const FieldSpec& f = fields[round % 3];
        int m = 5 + static_cast<int>(rng() % 3);       // 5..7 variables
        int npolys = 1 + static_cast<int>(rng() % 3);  // 1..3 polynomials
        std::vector<MultiPoly> polys;
        for (int i = 0; i < npolys; ++i) {
            MultiPoly p(m);
            int terms = 2 + static_cast<int>(rng() % 6);
            for (int t = 0; t < terms; ++t) {
                Exps e(m + 1, 0);
                int spread = 1 + static_cast<int>(rng() % 3);
                for (int s = 0; s < spread; ++s) e[rng() % m] += rng() % 2;
                p.add_term(std::move(e), BigInt(static_cast<long long>(rng() % 7) - 3));
            }
            polys.push_back(std::move(p));
        }
        PolySystem sys(polys);
        CAPTURE(round);
        CHECK(reduced_count(sys, f).count == brute_count(sys, f).count);
    }
}

TEST_CASE("count records carry consistent metadata") {
    FieldSpec f5 = make_field(5);
    CountRecord rec = tutte_count(k4(), 2, f5);
    CHECK(rec.method == "brute");
    CHECK(rec.p == 5);
    CHECK(rec.r == 1);
    CHECK(rec.arity == 6);
    CHECK(rec.spin_q.has_value());
    CHECK(*rec.spin_q == 2);
    CHECK(!rec.seed.has_value());
    CHECK(rec.count >= 0);
    CHECK(rec.count <= point_space_size(f5, 6));
    CHECK(!rec.poly_hash.empty());
}
