#include "tuttelab/reduction.hpp"

#include "tuttelab/config.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace tuttelab {

namespace {

using ExpsV = std::vector<uint32_t>;

// Terms ordered leading-first (reuses the graded order; no q slot here).
struct RPoly {
    std::map<ExpsV, uint32_t, TermOrder> t;

    bool zero() const { return t.empty(); }
    bool nonzero_constant() const {
        if (t.size() != 1) return false;
        for (uint32_t e : t.begin()->first)
            if (e) return false;
        return true;
    }
};

RPoly from_kpoly(const detail::KPoly& k) {
    RPoly r;
    for (const auto& term : k) r.t[term.e] = term.c;
    return r;
}

detail::KPoly to_kpoly(const RPoly& r) {
    detail::KPoly k;
    for (const auto& [e, c] : r.t) k.push_back(detail::KTerm{c, e});
    return k;
}

int degree_in(const RPoly& f, int v) {
    int d = 0;
    for (const auto& [e, c] : f.t) d = std::max(d, static_cast<int>(e[v]));
    return d;
}

void add_term(RPoly& f, ExpsV e, uint32_t c, const FieldSpec& F) {
    if (!c) return;
    auto it = f.t.find(e);
    if (it == f.t.end()) {
        f.t.emplace(std::move(e), c);
    } else {
        uint32_t s = F.add(FieldElement{it->second}, FieldElement{c}).idx;
        if (s)
            it->second = s;
        else
            f.t.erase(it);
    }
}

RPoly mul(const RPoly& a, const RPoly& b, const FieldSpec& F) {
    RPoly out;
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            ExpsV e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(out, std::move(e), F.mul(FieldElement{ca}, FieldElement{cb}).idx, F);
        }
    return out;
}

RPoly sub(const RPoly& a, const RPoly& b, const FieldSpec& F) {
    RPoly out = a;
    for (const auto& [e, c] : b.t)
        add_term(out, e, F.neg(FieldElement{c}).idx, F);
    return out;
}

// f = C x_v + D with deg_v(f) <= 1; C and D keep the full slot layout with
// slot v zeroed.
std::pair<RPoly, RPoly> split_on(const RPoly& f, int v) {
    RPoly C, D;
    for (const auto& [e, c] : f.t) {
        ExpsV en = e;
        if (en[v]) {
            en[v] = 0;
            C.t.emplace(std::move(en), c);
        } else {
            D.t.emplace(std::move(en), c);
        }
    }
    return {std::move(C), std::move(D)};
}

RPoly drop_slot(const RPoly& f, int v) {
    RPoly out;
    for (const auto& [e, c] : f.t) {
        ExpsV en;
        en.reserve(e.size() - 1);
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != v) en.push_back(e[i]);
        out.t.emplace(std::move(en), c);
    }
    return out;
}

RPoly monic(const RPoly& f, const FieldSpec& F) {
    if (f.t.empty()) return f;
    uint32_t lead = f.t.begin()->second;
    if (lead == 1) return f;
    uint32_t s = F.inv(FieldElement{lead}).idx;
    RPoly out;
    for (const auto& [e, c] : f.t)
        out.t.emplace(e, F.mul(FieldElement{c}, FieldElement{s}).idx);
    return out;
}

std::string serialize(const RPoly& f) {
    std::ostringstream os;
    for (const auto& [e, c] : f.t) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) os << ",";
            os << e[i];
        }
        os << ":" << c << "|";
    }
    return os.str();
}

std::shared_mutex memo_mu;
std::unordered_map<std::string, BigInt> memo;

struct Ctx {
    const FieldSpec& F;
    std::string field_tag;
};

BigInt count_rec(Ctx& ctx, std::vector<RPoly> sys, int arity);

BigInt brute_tail(Ctx& ctx, const std::vector<RPoly>& sys, int arity) {
    if (point_space_size(ctx.F, arity) > config::point_budget())
        throw BudgetExceeded("reduction tail exceeds the point budget");
    std::vector<detail::KPoly> ks;
    ks.reserve(sys.size());
    for (const auto& f : sys) ks.push_back(to_kpoly(f));
    return detail::count_common_zeros(ctx.F, arity, ks, config::threads());
}

BigInt count_rec(Ctx& ctx, std::vector<RPoly> sys, int arity) {
    // scrub zeros and obvious contradictions
    std::vector<RPoly> live;
    live.reserve(sys.size());
    for (auto& f : sys) {
        if (f.zero()) continue;
        if (f.nonzero_constant()) return 0;
        live.push_back(std::move(f));
    }
    if (live.empty()) return ipow(BigInt(ctx.F.size()), arity);

    // compress away variables that occur nowhere
    std::vector<char> used(arity, 0);
    for (const auto& f : live)
        for (const auto& [e, c] : f.t)
            for (int v = 0; v < arity; ++v)
                if (e[v]) used[v] = 1;
    int used_count = static_cast<int>(std::count(used.begin(), used.end(), 1));
    if (used_count < arity) {
        std::vector<RPoly> packed;
        packed.reserve(live.size());
        for (const auto& f : live) {
            RPoly g;
            for (const auto& [e, c] : f.t) {
                ExpsV en;
                en.reserve(used_count);
                for (int v = 0; v < arity; ++v)
                    if (used[v]) en.push_back(e[v]);
                g.t.emplace(std::move(en), c);
            }
            packed.push_back(std::move(g));
        }
        return ipow(BigInt(ctx.F.size()), arity - used_count) *
               count_rec(ctx, std::move(packed), used_count);
    }

    // canonical form: monic members, duplicates out, sorted serializations
    for (auto& f : live) f = monic(f, ctx.F);
    std::vector<std::string> ser;
    ser.reserve(live.size());
    for (const auto& f : live) ser.push_back(serialize(f));
    std::vector<size_t> order(live.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return ser[a] < ser[b]; });
    std::vector<RPoly> canon;
    std::string key = ctx.field_tag + "#" + std::to_string(arity) + "#";
    for (size_t i = 0; i < order.size(); ++i) {
        if (i && ser[order[i]] == ser[order[i - 1]]) continue;
        canon.push_back(std::move(live[order[i]]));
        key += ser[order[i]];
        key += "#";
    }

    {
        std::shared_lock lock(memo_mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    auto remember = [&](const BigInt& n) {
        std::unique_lock lock(memo_mu);
        memo.emplace(key, n);
        return n;
    };

    size_t biggest = 0;
    for (const auto& f : canon) biggest = std::max(biggest, f.t.size());

    int pivot_var = -1;
    if (arity > 4 && biggest <= 4096) {
        // variables of degree <= 1 everywhere; favor sparse involvement
        long best_score = -1;
        for (int v = 0; v < arity; ++v) {
            int maxdeg = 0, involved = 0;
            long terms = 0;
            for (const auto& f : canon) {
                int d = degree_in(f, v);
                maxdeg = std::max(maxdeg, d);
                if (d == 1) {
                    ++involved;
                    terms += static_cast<long>(f.t.size());
                }
            }
            if (maxdeg != 1) continue;
            long score = static_cast<long>(involved) * 1000000 + terms;
            if (pivot_var == -1 || score < best_score) {
                pivot_var = v;
                best_score = score;
            }
        }
    }
    if (pivot_var == -1) return remember(brute_tail(ctx, canon, arity));

    // pivot member: fewest terms among those linear in the pivot
    size_t pick = canon.size();
    for (size_t i = 0; i < canon.size(); ++i) {
        if (degree_in(canon[i], pivot_var) != 1) continue;
        if (pick == canon.size() || canon[i].t.size() < canon[pick].t.size()) pick = i;
    }

    auto [A, B] = split_on(canon[pick], pivot_var);

    // A = 0 stratum: x stays free
    std::vector<RPoly> sys1;
    sys1.reserve(canon.size() + 1);
    for (size_t i = 0; i < canon.size(); ++i)
        if (i != pick) sys1.push_back(canon[i]);
    sys1.push_back(A);
    sys1.push_back(B);
    BigInt n1 = count_rec(ctx, std::move(sys1), arity);

    // A != 0 stratum: substitute the unique root of the pivot
    std::vector<RPoly> gs;
    gs.reserve(canon.size() - 1);
    for (size_t i = 0; i < canon.size(); ++i) {
        if (i == pick) continue;
        auto [C, D] = split_on(canon[i], pivot_var);
        if (C.zero())
            gs.push_back(drop_slot(canon[i], pivot_var));
        else
            gs.push_back(drop_slot(sub(mul(A, D, ctx.F), mul(B, C, ctx.F), ctx.F), pivot_var));
    }
    std::vector<RPoly> gs_with_a = gs;
    gs_with_a.push_back(drop_slot(A, pivot_var));
    BigInt n2 = count_rec(ctx, std::move(gs), arity - 1) -
                count_rec(ctx, std::move(gs_with_a), arity - 1);

    return remember(n1 + n2);
}

}  // namespace

CountRecord reduced_count(const PolySystem& system, const FieldSpec& field) {
    system.validate();
    const int m = system.arity();
    auto t0 = std::chrono::steady_clock::now();

    std::vector<RPoly> sys;
    sys.reserve(system.polys.size());
    for (const auto& p : system.polys)
        sys.push_back(from_kpoly(detail::compile_system_member(p, field)));

    std::ostringstream tag;
    tag << "F" << field.p() << "." << field.r();
    Ctx ctx{field, tag.str()};

    CountRecord rec;
    rec.poly_hash = system.hash();
    rec.p = field.p();
    rec.r = field.r();
    rec.arity = m;
    rec.method = "reduced";
    rec.count = count_rec(ctx, std::move(sys), m);
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            t0)
                      .count();
    return rec;
}

}  // namespace tuttelab
