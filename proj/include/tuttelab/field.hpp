#pragma once

#include "tuttelab/config.hpp"
#include "tuttelab/numbers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tuttelab {

// An element of F_{p^r}, stored as the base-p digit encoding of its
// coefficient vector: idx = c_0 + c_1 p + ... + c_{r-1} p^{r-1}.
struct FieldElement {
    uint32_t idx = 0;
    bool operator==(const FieldElement&) const = default;
};

class FieldSpec {
public:
    uint32_t p() const { return p_; }
    uint32_t r() const { return r_; }
    uint64_t size() const { return q_; }  // p^r

    // Modulus coefficients c_0..c_r (monic, degree r); empty when r = 1.
    const std::vector<uint32_t>& modulus() const { return mod_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement from_integer(long long v) const;
    FieldElement from_bigint(const BigInt& v) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;  // throws on zero
    FieldElement pow(FieldElement a, uint64_t e) const;

    std::vector<uint32_t> coeffs(FieldElement a) const;  // length r, entries in [0,p)
    FieldElement from_coeffs(const std::vector<uint32_t>& c) const;

    std::string str(FieldElement a) const;  // e.g. "x+2" in F_9
    std::string describe() const;           // "F_9 = F_3[x]/(x^2 + 1)" or "F_5"

    // Dense operation tables, built for extension fields with size() <= 1024;
    // null otherwise. Prime fields use modular arithmetic directly.
    const uint32_t* add_table() const { return add_.empty() ? nullptr : add_.data(); }
    const uint32_t* mul_table() const { return mul_.empty() ? nullptr : mul_.data(); }
    const uint32_t* neg_table() const { return negt_.empty() ? nullptr : negt_.data(); }

private:
    friend FieldSpec make_field(uint32_t, uint32_t);
    uint32_t p_ = 2, r_ = 1;
    uint64_t q_ = 2;
    std::vector<uint32_t> mod_;
    std::vector<uint32_t> add_, mul_, negt_;

    std::vector<uint32_t> raw_mul(const std::vector<uint32_t>& a,
                                  const std::vector<uint32_t>& b) const;
};

// Smallest-modulus field of order p^r; p must be prime, p^r within the
// configured size limit.
FieldSpec make_field(uint32_t p, uint32_t r = 1);

// Lexicographic walk over F^m (first coordinate most significant), restricted
// to tuple indices [begin, end). Chunks partition the space exactly.
class PointStream {
public:
    PointStream(const FieldSpec& f, int arity, uint64_t begin, uint64_t end);
    // Fills `out` (resized to arity) and advances; false when exhausted.
    bool next(std::vector<FieldElement>& out);

private:
    const FieldSpec* f_;
    int m_;
    uint64_t at_, end_;
};

// Full stream over all q^m tuples; throws BudgetExceeded past the point budget.
PointStream enumerate_points(const FieldSpec& f, int arity);

// q^m as a big integer (no budget applied).
BigInt point_space_size(const FieldSpec& f, int arity);

}  // namespace tuttelab
