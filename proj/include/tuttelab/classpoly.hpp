#pragma once

#include "tuttelab/numbers.hpp"

#include <string>
#include <vector>

namespace tuttelab {

// Dense univariate polynomial with integer coefficients, stored ascending.
// Small utility type backing the closed-form class computations; not meant
// as a general polynomial engine (that is what SparsePoly is for).
struct UniPoly {
    std::vector<BigInt> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<BigInt> coeffs) : c(std::move(coeffs)) { trim(); }

    static UniPoly constant(BigInt v);
    static UniPoly monomial(int deg, BigInt coeff = BigInt(1));

    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 when zero
    bool is_zero() const { return c.empty(); }
    void trim();

    BigInt eval(const BigInt& x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly pow(unsigned k) const;

    // Exact division by the variable. Throws std::logic_error when the
    // constant term is nonzero, since every use here is an identity that
    // guarantees divisibility and a remainder means corrupted input.
    UniPoly divided_by_x() const;

    std::string str(const std::string& var) const;

    bool operator==(const UniPoly& o) const { return c == o.c; }
};

// Integer polynomial in T, the class of the one-dimensional torus; the affine
// line class is L = T + 1. With `complement` set the polynomial describes the
// class of the ambient space minus the zero locus, so the predicted point
// count over a field with 𝔮 elements is 𝔮^m - value(T = 𝔮 - 1).
struct ClassPoly {
    UniPoly in_t;
    bool complement = true;

    UniPoly in_l() const;                        // rewrite in L = T + 1
    static UniPoly l_to_t(const UniPoly& in_l);  // inverse change of basis
    std::string str() const;
};

// Complement class of the q-state hypersurface of the (m+1)-gon, any q with
// q != 0, 1 in the base field:
//   T^{m+1} + T (T^m - (T-1)^m) + ((T-1)^m - (-1)^m) / T
// The trailing division is exact; a remainder throws.
ClassPoly class_polygon(int m);

// Complement class T^m shared by every graph with m edges at q = 1.
ClassPoly class_q1(int edge_count);

// Complement class T^m of a tree with m edges, valid whenever the
// characteristic does not divide q.
ClassPoly class_tree(int m);

// Complement class of a chain of blocks glued at single vertices through
// connector paths: the product of the block classes times T^connector_exponent.
// Every input must be a complement class.
ClassPoly class_chain(const std::vector<ClassPoly>& blocks, int connector_exponent);

// Predicted point count over a field with `field_size` elements in ambient
// dimension m: substitute T = field_size - 1, complement classes flip to
// field_size^m - value.
BigInt evaluate_class(const ClassPoly& c, const BigInt& field_size, int ambient_dim);

}  // namespace tuttelab
