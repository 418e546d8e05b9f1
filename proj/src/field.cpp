#include "tuttelab/field.hpp"

#include <algorithm>
#include <sstream>

namespace tuttelab {

namespace {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense univariate arithmetic over F_p, little-endian coefficient vectors.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<uint32_t>((out[i + j] + uint64_t(a[i]) * b[j]) % p);
    trim(out);
    return out;
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
    trim(a);
    const size_t db = b.size() - 1;  // b monic, degree db
    while (a.size() > db) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - db;
        if (lead) {
            for (size_t i = 0; i <= db; ++i) {
                uint64_t sub = uint64_t(lead) * b[i] % p;
                uint32_t& slot = a[shift + i];
                slot = static_cast<uint32_t>((slot + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

// Exact divisibility test of a by monic b (both little-endian).
bool poly_divisible(const Poly& a, const Poly& b, uint32_t p) {
    return poly_mod(a, b, p).empty();
}

// Monic polynomial of degree d whose lower coefficients encode `idx` base p.
Poly monic_from_index(uint64_t idx, uint32_t d, uint32_t p) {
    Poly c(d + 1, 0);
    for (uint32_t i = 0; i < d; ++i) {
        c[i] = static_cast<uint32_t>(idx % p);
        idx /= p;
    }
    c[d] = 1;
    return c;
}

bool irreducible(const Poly& f, uint32_t p) {
    const uint32_t d = static_cast<uint32_t>(f.size() - 1);
    if (d == 1) return true;
    // trial division by every monic polynomial of degree 1..d/2
    for (uint32_t dd = 1; dd * 2 <= d; ++dd) {
        uint64_t total = 1;
        for (uint32_t i = 0; i < dd; ++i) total *= p;
        for (uint64_t idx = 0; idx < total; ++idx)
            if (poly_divisible(f, monic_from_index(idx, dd, p), p)) return false;
    }
    return true;
}

}  // namespace

FieldSpec make_field(uint32_t p, uint32_t r) {
    if (!is_prime(p)) throw UsageError("field characteristic must be prime");
    if (r < 1) throw UsageError("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > config::field_size_limit())
            throw UsageError("field size exceeds configured limit");
    }

    FieldSpec f;
    f.p_ = p;
    f.r_ = r;
    f.q_ = q;
    if (r > 1) {
        bool found = false;
        for (uint64_t idx = 0; idx < q && !found; ++idx) {
            Poly cand = monic_from_index(idx, r, p);
            if (irreducible(cand, p)) {
                f.mod_ = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible modulus found");
    }

    // Dense tables make extension arithmetic branch-free in the hot loop.
    // Built into locals first: the accessors switch to table lookups the
    // moment the members are populated.
    if (r > 1 && q <= 1024) {
        std::vector<uint32_t> addt(q * q), mult(q * q), negt(q);
        for (uint64_t a = 0; a < q; ++a) {
            FieldElement ea{static_cast<uint32_t>(a)};
            negt[a] = f.neg(ea).idx;
            for (uint64_t b = 0; b < q; ++b) {
                FieldElement eb{static_cast<uint32_t>(b)};
                addt[a * q + b] = f.add(ea, eb).idx;
                mult[a * q + b] = f.mul(ea, eb).idx;
            }
        }
        f.add_ = std::move(addt);
        f.mul_ = std::move(mult);
        f.negt_ = std::move(negt);
    }
    return f;
}

FieldElement FieldSpec::from_integer(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return {static_cast<uint32_t>(m)};
}

FieldElement FieldSpec::from_bigint(const BigInt& v) const {
    BigInt m = v % p_;
    if (m < 0) m += p_;
    return {static_cast<uint32_t>(m)};
}

std::vector<uint32_t> FieldSpec::coeffs(FieldElement a) const {
    std::vector<uint32_t> c(r_, 0);
    uint32_t v = a.idx;
    for (uint32_t i = 0; i < r_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

FieldElement FieldSpec::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() != r_) throw UsageError("coefficient vector length mismatch");
    uint32_t idx = 0;
    for (uint32_t i = r_; i-- > 0;) {
        if (c[i] >= p_) throw UsageError("coefficient out of range");
        idx = idx * p_ + c[i];
    }
    return {idx};
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const {
    if (r_ == 1) {
        uint32_t s = a.idx + b.idx;
        return {s >= p_ ? s - p_ : s};
    }
    if (!add_.empty()) return {add_[uint64_t(a.idx) * q_ + b.idx]};
    uint32_t out = 0, mul = 1, x = a.idx, y = b.idx;
    for (uint32_t i = 0; i < r_; ++i) {
        uint32_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        out += s * mul;
        mul *= p_;
        x /= p_;
        y /= p_;
    }
    return {out};
}

FieldElement FieldSpec::neg(FieldElement a) const {
    if (r_ == 1) return {a.idx ? p_ - a.idx : 0};
    if (!negt_.empty()) return {negt_[a.idx]};
    uint32_t out = 0, mul = 1, x = a.idx;
    for (uint32_t i = 0; i < r_; ++i) {
        uint32_t c = x % p_;
        out += (c ? p_ - c : 0) * mul;
        mul *= p_;
        x /= p_;
    }
    return {out};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const {
    return add(a, neg(b));
}

std::vector<uint32_t> FieldSpec::raw_mul(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) const {
    Poly prod = poly_mul(a, b, p_);
    Poly red = poly_mod(std::move(prod), mod_, p_);
    red.resize(r_, 0);
    return red;
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
    if (r_ == 1) return {static_cast<uint32_t>(uint64_t(a.idx) * b.idx % p_)};
    if (!mul_.empty()) return {mul_[uint64_t(a.idx) * q_ + b.idx]};
    return from_coeffs(raw_mul(coeffs(a), coeffs(b)));
}

FieldElement FieldSpec::pow(FieldElement a, uint64_t e) const {
    FieldElement acc = one(), base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FieldElement FieldSpec::inv(FieldElement a) const {
    if (a.idx == 0) throw UsageError("inversion of zero");
    if (r_ == 1) {
        // extended Euclid on integers
        int64_t t = 0, nt = 1, rr = p_, nr = a.idx;
        while (nr) {
            int64_t qq = rr / nr;
            int64_t tmp = t - qq * nt;
            t = nt;
            nt = tmp;
            tmp = rr - qq * nr;
            rr = nr;
            nr = tmp;
        }
        if (t < 0) t += p_;
        return {static_cast<uint32_t>(t)};
    }
    return pow(a, q_ - 2);
}

std::string FieldSpec::str(FieldElement a) const {
    if (r_ == 1) return std::to_string(a.idx);
    auto c = coeffs(a);
    std::ostringstream os;
    bool any = false;
    for (uint32_t i = r_; i-- > 0;) {
        if (!c[i]) continue;
        if (any) os << "+";
        any = true;
        if (i == 0 || c[i] != 1) os << c[i];
        if (i >= 1) {
            if (c[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (!any) return "0";
    return os.str();
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    if (r_ == 1) {
        os << "F_" << p_;
        return os.str();
    }
    os << "F_" << q_ << " = F_" << p_ << "[x]/(";
    bool any = false;
    for (uint32_t i = r_ + 1; i-- > 0;) {
        uint32_t c = i < mod_.size() ? mod_[i] : 0;
        if (!c) continue;
        if (any) os << " + ";
        any = true;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) {
            if (c != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    os << ")";
    return os.str();
}

PointStream::PointStream(const FieldSpec& f, int arity, uint64_t begin, uint64_t end)
    : f_(&f), m_(arity), at_(begin), end_(end) {
    if (arity < 0) throw UsageError("negative arity");
    BigInt total = point_space_size(f, arity);
    if (BigInt(begin) > total || BigInt(end) > total || begin > end)
        throw UsageError("point range outside enumeration space");
}

bool PointStream::next(std::vector<FieldElement>& out) {
    if (at_ >= end_) return false;
    out.assign(m_, FieldElement{0});
    uint64_t v = at_;
    for (int i = m_; i-- > 0;) {
        // first coordinate most significant: peel from the back
        out[i] = FieldElement{static_cast<uint32_t>(v % f_->size())};
        v /= f_->size();
    }
    ++at_;
    return true;
}

PointStream enumerate_points(const FieldSpec& f, int arity) {
    BigInt total = point_space_size(f, arity);
    if (total > config::point_budget())
        throw BudgetExceeded("enumeration space exceeds point budget");
    return PointStream(f, arity, 0, total.convert_to<uint64_t>());
}

BigInt point_space_size(const FieldSpec& f, int arity) {
    return ipow(BigInt(f.size()), static_cast<uint64_t>(arity));
}

}  // namespace tuttelab
