#include "tuttelab/classpoly.hpp"

#include "tuttelab/config.hpp"

#include <sstream>
#include <stdexcept>

namespace tuttelab {

UniPoly UniPoly::constant(BigInt v) {
    UniPoly p;
    if (v != 0) p.c.push_back(std::move(v));
    return p;
}

UniPoly UniPoly::monomial(int deg, BigInt coeff) {
    UniPoly p;
    if (coeff == 0) return p;
    p.c.assign(deg + 1, BigInt(0));
    p.c[deg] = std::move(coeff);
    return p;
}

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

BigInt UniPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly out;
    out.c.resize(std::max(c.size(), o.c.size()), BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) out.c[i] += o.c[i];
    out.trim();
    return out;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    UniPoly out;
    out.c.resize(std::max(c.size(), o.c.size()), BigInt(0));
    for (size_t i = 0; i < c.size(); ++i) out.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) out.c[i] -= o.c[i];
    out.trim();
    return out;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly out;
    if (c.empty() || o.c.empty()) return out;
    out.c.assign(c.size() + o.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) out.c[i + j] += c[i] * o.c[j];
    out.trim();
    return out;
}

UniPoly UniPoly::pow(unsigned k) const {
    UniPoly acc = UniPoly::constant(BigInt(1));
    UniPoly base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

UniPoly UniPoly::divided_by_x() const {
    if (c.empty()) return {};
    if (c[0] != 0)
        throw std::logic_error("inexact division by the variable: constant term " +
                               c[0].str());
    UniPoly out;
    out.c.assign(c.begin() + 1, c.end());
    return out;
}

std::string UniPoly::str(const std::string& var) const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const BigInt& a = c[d];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        BigInt mag = abs(a);
        if (mag != 1 || d == 0) os << mag.str();
        if (d >= 1) {
            if (mag != 1) os << "*";
            os << var;
            if (d > 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Substitute x -> base + shift in a polynomial; used for both T = L - 1 and
// L = T + 1, which is why the basis change is exactly involutive.
UniPoly shifted(const UniPoly& p, long long shift) {
    UniPoly x_plus = UniPoly({BigInt(shift), BigInt(1)});
    UniPoly acc;
    // Horner scheme in the shifted variable
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        acc = acc * x_plus + UniPoly::constant(*it);
    return acc;
}

}  // namespace

UniPoly ClassPoly::in_l() const { return shifted(in_t, -1); }

UniPoly ClassPoly::l_to_t(const UniPoly& in_l) { return shifted(in_l, +1); }

std::string ClassPoly::str() const {
    std::string s = in_t.str("T");
    return complement ? ("complement: " + s) : s;
}

ClassPoly class_polygon(int m) {
    if (m < 1) throw UsageError("class_polygon needs m >= 1");
    const UniPoly t = UniPoly::monomial(1);
    const UniPoly t_minus_1 = UniPoly({BigInt(-1), BigInt(1)});
    const UniPoly sign = UniPoly::constant(m % 2 == 0 ? BigInt(1) : BigInt(-1));

    UniPoly head = t.pow(m + 1);
    UniPoly middle = t * (t.pow(m) - t_minus_1.pow(m));
    UniPoly tail = (t_minus_1.pow(m) - sign).divided_by_x();

    return ClassPoly{head + middle + tail, true};
}

ClassPoly class_q1(int edge_count) {
    if (edge_count < 0) throw UsageError("negative edge count");
    return ClassPoly{UniPoly::monomial(edge_count), true};
}

ClassPoly class_tree(int m) {
    if (m < 1) throw UsageError("class_tree needs m >= 1");
    return ClassPoly{UniPoly::monomial(m), true};
}

ClassPoly class_chain(const std::vector<ClassPoly>& blocks, int connector_exponent) {
    if (connector_exponent < 0) throw UsageError("negative connector exponent");
    UniPoly acc = UniPoly::monomial(connector_exponent);
    for (const ClassPoly& b : blocks) {
        if (!b.complement)
            throw UsageError("chain composition is defined on complement classes");
        acc = acc * b.in_t;
    }
    return ClassPoly{acc, true};
}

BigInt evaluate_class(const ClassPoly& c, const BigInt& field_size, int ambient_dim) {
    BigInt value = c.in_t.eval(field_size - 1);
    if (!c.complement) return value;
    return ipow(field_size, ambient_dim) - value;
}

}  // namespace tuttelab
