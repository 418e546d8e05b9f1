#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tuttelab/counting.hpp"
#include "tuttelab/field.hpp"
#include "tuttelab/graph.hpp"
#include "tuttelab/tutte.hpp"

#include <set>

using namespace tuttelab;

TEST_CASE("prime field basics") {
    FieldSpec f5 = make_field(5);
    CHECK(f5.size() == 5);
    CHECK(f5.describe() == "F_5");
    CHECK(f5.inv(FieldElement{2}).idx == 3);
    CHECK(f5.mul(FieldElement{3}, FieldElement{4}).idx == 2);
    CHECK(f5.add(FieldElement{4}, FieldElement{3}).idx == 2);
    CHECK(f5.neg(FieldElement{0}).idx == 0);
    CHECK(f5.from_integer(-1).idx == 4);
    CHECK(f5.from_bigint(BigInt(-7)).idx == 3);
    CHECK_THROWS_AS(f5.inv(FieldElement{0}), UsageError);
}

TEST_CASE("moduli found by ascending search") {
    FieldSpec f4 = make_field(2, 2);
    CHECK(f4.size() == 4);
    CHECK(f4.modulus() == std::vector<uint32_t>{1, 1, 1});  // x^2 + x + 1
    // x * x = x + 1
    FieldElement x = f4.from_coeffs({0, 1});
    CHECK(f4.mul(x, x) == f4.from_coeffs({1, 1}));
    CHECK(f4.describe() == "F_4 = F_2[x]/(x^2 + x + 1)");

    FieldSpec f9 = make_field(3, 2);
    CHECK(f9.modulus() == std::vector<uint32_t>{1, 0, 1});  // x^2 + 1, rootless over F_3
    for (uint32_t a = 0; a < 3; ++a)
        CHECK((a * a + 1) % 3 != 0);

    FieldSpec f8 = make_field(2, 3);
    // x^3 + x + 1 comes before x^3 + x^2 + 1 in the ascending scan
    CHECK(f8.modulus() == std::vector<uint32_t>{1, 1, 0, 1});
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(make_field(4), UsageError);
    CHECK_THROWS_AS(make_field(1), UsageError);
    CHECK_THROWS_AS(make_field(2, 0), UsageError);
    CHECK_THROWS_AS(make_field(2, 25), UsageError);  // 2^25 past the limit
}

TEST_CASE("field axioms on every element, assorted orders") {
    for (auto [p, r] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                        {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}}) {
        FieldSpec f = make_field(p, r);
        const uint64_t q = f.size();
        CAPTURE(f.describe());
        for (uint64_t a = 0; a < q; ++a) {
            FieldElement ea{static_cast<uint32_t>(a)};
            CHECK(f.add(ea, f.neg(ea)).idx == 0);
            if (a) CHECK(f.mul(ea, f.inv(ea)).idx == 1);
            // Frobenius fixes everything: a^q = a
            CHECK(f.pow(ea, q) == ea);
        }
    }
}

TEST_CASE("coefficient round trip and printing") {
    FieldSpec f9 = make_field(3, 2);
    for (uint32_t a = 0; a < 9; ++a) {
        FieldElement e{a};
        CHECK(f9.from_coeffs(f9.coeffs(e)) == e);
    }
    CHECK(f9.str(f9.from_coeffs({2, 1})) == "x+2");
    CHECK(f9.str(f9.zero()) == "0");
    CHECK(f9.str(f9.from_coeffs({0, 2})) == "2*x");
}

TEST_CASE("point enumeration in lexicographic order with chunking") {
    FieldSpec f3 = make_field(3);
    PointStream s = enumerate_points(f3, 2);
    std::vector<FieldElement> pt;
    std::vector<std::pair<uint32_t, uint32_t>> seen;
    while (s.next(pt)) seen.emplace_back(pt[0].idx, pt[1].idx);
    REQUIRE(seen.size() == 9);
    CHECK(seen.front() == std::pair<uint32_t, uint32_t>{0, 0});
    CHECK(seen[1] == std::pair<uint32_t, uint32_t>{0, 1});  // last coordinate fastest
    CHECK(seen.back() == std::pair<uint32_t, uint32_t>{2, 2});
    CHECK(std::set(seen.begin(), seen.end()).size() == 9);

    // ranges [0,40) and [40,81) partition F_3^4
    std::set<std::vector<uint32_t>> all;
    for (auto [lo, hi] : {std::pair<uint64_t, uint64_t>{0, 40}, {40, 81}}) {
        PointStream chunk(f3, 4, lo, hi);
        while (chunk.next(pt)) {
            std::vector<uint32_t> key;
            for (auto e : pt) key.push_back(e.idx);
            CHECK(all.insert(key).second);
        }
    }
    CHECK(all.size() == 81);

    CHECK_THROWS_AS(PointStream(f3, 2, 0, 10), UsageError);
}

TEST_CASE("single point evaluation") {
    FieldSpec f5 = make_field(5);
    Graph bridge(2, {{0, 1}});
    MultiPoly z = tutte_subset(bridge);
    CHECK(eval_poly(z, f5, FieldElement{2}, {FieldElement{1}}).idx == 1);

    FieldSpec f7 = make_field(7);
    Graph loop(1, {{0, 0}});
    CHECK(eval_poly(tutte_subset(loop), f7, FieldElement{2}, {FieldElement{6}}).idx == 0);

    FieldSpec f3 = make_field(3);
    Graph k4 = build_family({FamilySpec::Kind::Complete, 4, 1, 1});
    std::vector<FieldElement> zeros(6, FieldElement{0});
    CHECK(eval_poly(tutte_subset(k4), f3, FieldElement{2}, zeros).idx == 1);

    CHECK_THROWS_AS(eval_poly(z, f5, FieldElement{2}, zeros), UsageError);
}

TEST_CASE("evaluation respects ring structure") {
    FieldSpec f9 = make_field(3, 2);
    // fixed little polynomials in two variables
    MultiPoly f(2), g(2);
    f.add_term({1, 0, 0}, BigInt(2));
    f.add_term({0, 2, 0}, BigInt(1));
    f.add_term({0, 0, 1}, BigInt(1));  // + q
    g.add_term({1, 1, 0}, BigInt(1));
    g.add_term({0, 0, 0}, BigInt(2));
    MultiPoly sum = f + g, prod = f * g;
    for (uint32_t a = 0; a < 9; ++a)
        for (uint32_t b = 0; b < 9; ++b) {
            std::vector<FieldElement> pt{FieldElement{a}, FieldElement{b}};
            FieldElement qv{static_cast<uint32_t>((a + 2 * b) % 9)};
            FieldElement vf = eval_poly(f, f9, qv, pt);
            FieldElement vg = eval_poly(g, f9, qv, pt);
            CHECK(eval_poly(sum, f9, qv, pt) == f9.add(vf, vg));
            CHECK(eval_poly(prod, f9, qv, pt) == f9.mul(vf, vg));
        }
}
