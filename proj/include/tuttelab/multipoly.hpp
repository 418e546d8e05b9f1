#pragma once

#include "tuttelab/config.hpp"
#include "tuttelab/numbers.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tuttelab {

// Exponent vector: slots [0, arity) are t_1..t_m, the last slot is q.
using Exps = std::vector<uint32_t>;

// Graded order, total degree first, then lexicographic with q least
// significant (it sits in the last slot). Highest term first.
struct TermOrder {
    bool operator()(const Exps& a, const Exps& b) const {
        uint64_t ta = 0, tb = 0;
        for (uint32_t x : a) ta += x;
        for (uint32_t x : b) tb += x;
        if (ta != tb) return ta > tb;
        return a > b;
    }
};

template <class C>
class SparsePoly {
public:
    using TermMap = std::map<Exps, C, TermOrder>;

    SparsePoly() = default;
    explicit SparsePoly(int arity) : arity_(arity) {
        if (arity < 0) throw UsageError("negative arity");
    }

    static SparsePoly constant(int arity, C c) {
        SparsePoly p(arity);
        p.add_term(Exps(arity + 1, 0), std::move(c));
        return p;
    }
    // t_e with 0-based e
    static SparsePoly var_t(int arity, int e) {
        if (e < 0 || e >= arity) throw UsageError("t variable index out of range");
        SparsePoly p(arity);
        Exps ex(arity + 1, 0);
        ex[e] = 1;
        p.add_term(std::move(ex), C(1));
        return p;
    }
    static SparsePoly var_q(int arity) {
        SparsePoly p(arity);
        Exps ex(arity + 1, 0);
        ex[arity] = 1;
        p.add_term(std::move(ex), C(1));
        return p;
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(Exps e, C c) {
        if (static_cast<int>(e.size()) != arity_ + 1)
            throw UsageError("exponent vector length mismatch");
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    SparsePoly operator*(const SparsePoly& o) const {
        check_arity(o);
        SparsePoly out(arity_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Exps e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }

    SparsePoly scaled(const C& f) const {
        SparsePoly out(arity_);
        if (f == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * f);
        return out;
    }

    bool operator==(const SparsePoly&) const = default;

    int degree_q() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[arity_]));
        return d;
    }
    int min_degree_q() const {
        if (terms_.empty()) return -1;
        int d = std::numeric_limits<int>::max();
        for (const auto& [e, c] : terms_) d = std::min(d, static_cast<int>(e[arity_]));
        return d;
    }
    int degree_t(int v) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[v]));
        return d;
    }
    bool multilinear_in_t() const {
        for (const auto& [e, c] : terms_)
            for (int v = 0; v < arity_; ++v)
                if (e[v] > 1) return false;
        return true;
    }

    C coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    // Substitute a value for q; result still carries an (unused) q slot.
    SparsePoly with_q_set(const C& value) const {
        SparsePoly out(arity_);
        for (const auto& [e, c] : terms_) {
            C f = c;
            for (uint32_t i = 0; i < e[arity_]; ++i) f *= value;
            Exps en = e;
            en[arity_] = 0;
            out.add_term(std::move(en), std::move(f));
        }
        return out;
    }

    // The t-polynomial multiplying q^k.
    SparsePoly coefficient_of_q(int k) const {
        SparsePoly out(arity_);
        for (const auto& [e, c] : terms_)
            if (static_cast<int>(e[arity_]) == k) {
                Exps en = e;
                en[arity_] = 0;
                out.add_term(std::move(en), c);
            }
        return out;
    }

    SparsePoly divided_by_q(int k) const {
        SparsePoly out(arity_);
        for (const auto& [e, c] : terms_) {
            if (static_cast<int>(e[arity_]) < k)
                throw std::logic_error("inexact division by q^k");
            Exps en = e;
            en[arity_] -= static_cast<uint32_t>(k);
            out.add_term(std::move(en), c);
        }
        return out;
    }

    // Lowest total t-degree homogeneous slice.
    SparsePoly lowest_t_part() const {
        SparsePoly out(arity_);
        if (terms_.empty()) return out;
        uint64_t best = UINT64_MAX;
        for (const auto& [e, c] : terms_) {
            uint64_t d = 0;
            for (int v = 0; v < arity_; ++v) d += e[v];
            best = std::min(best, d);
        }
        for (const auto& [e, c] : terms_) {
            uint64_t d = 0;
            for (int v = 0; v < arity_; ++v) d += e[v];
            if (d == best) out.add_term(e, c);
        }
        return out;
    }

    // Move into a wider variable space; tmap[v] is the new index of old t_v.
    SparsePoly extended(int new_arity, const std::vector<int>& tmap) const {
        if (static_cast<int>(tmap.size()) != arity_)
            throw UsageError("variable map length mismatch");
        SparsePoly out(new_arity);
        for (const auto& [e, c] : terms_) {
            Exps en(new_arity + 1, 0);
            for (int v = 0; v < arity_; ++v) en[tmap[v]] += e[v];
            en[new_arity] = e[arity_];
            out.add_term(std::move(en), c);
        }
        return out;
    }

    template <class R>
    R evaluate(const R& q, const std::vector<R>& t) const {
        if (static_cast<int>(t.size()) != arity_)
            throw UsageError("evaluation point arity mismatch");
        R acc(0);
        for (const auto& [e, c] : terms_) {
            R term = convert_coeff<R>(c);
            for (int v = 0; v < arity_; ++v)
                for (uint32_t i = 0; i < e[v]; ++i) term *= t[v];
            for (uint32_t i = 0; i < e[arity_]; ++i) term *= q;
            acc += term;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            C mag = c;
            if (first) {
                if (c < 0) {
                    os << "-";
                    mag = -c;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) mag = -c;
            }
            first = false;
            bool any_var = false;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) any_var = true;
            if (mag != 1 || !any_var) os << mag;
            bool lead = (mag == 1 && any_var);
            for (int v = 0; v < arity_; ++v) {
                if (!e[v]) continue;
                if (!lead) os << "*";
                lead = false;
                os << "t" << (v + 1);
                if (e[v] > 1) os << "^" << e[v];
            }
            if (e[arity_]) {
                if (!lead) os << "*";
                lead = false;
                os << "q";
                if (e[arity_] > 1) os << "^" << e[arity_];
            }
        }
        return os.str();
    }

    // Compact canonical encoding (hash/memo key material).
    std::string key() const {
        std::ostringstream os;
        os << "a" << arity_ << ";";
        for (const auto& [e, c] : terms_) {
            for (size_t i = 0; i < e.size(); ++i) {
                if (i) os << ",";
                os << e[i];
            }
            os << ":" << c << ";";
        }
        return os.str();
    }

private:
    void check_arity(const SparsePoly& o) const {
        if (arity_ != o.arity_) throw UsageError("polynomial arity mismatch");
    }
    template <class R>
    static R convert_coeff(const C& c) {
        if constexpr (std::is_same_v<R, C>) {
            return c;
        } else if constexpr (std::is_same_v<R, double>) {
            return static_cast<double>(c);
        } else {
            return R(c);
        }
    }

    int arity_ = 0;
    TermMap terms_;
};

using MultiPoly = SparsePoly<BigInt>;
using RatPoly = SparsePoly<BigRat>;

}  // namespace tuttelab
