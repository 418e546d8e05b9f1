#include "tuttelab/counting.hpp"

#include "tuttelab/config.hpp"
#include "tuttelab/tutte.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace tuttelab {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void budget_check(const FieldSpec& field, int arity) {
    if (point_space_size(field, arity) > config::point_budget())
        throw BudgetExceeded("q^m exceeds the point budget");
}

}  // namespace

int PolySystem::arity() const {
    validate();
    return polys.front().arity();
}

void PolySystem::validate() const {
    if (polys.empty()) throw UsageError("empty polynomial system");
    int a = polys.front().arity();
    for (const auto& p : polys)
        if (p.arity() != a) throw UsageError("system members disagree on arity");
}

std::string PolySystem::hash() const {
    validate();
    std::vector<std::string> keys;
    keys.reserve(polys.size());
    for (const auto& p : polys) keys.push_back(p.key());
    std::sort(keys.begin(), keys.end());
    uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& k : keys) h = fnv1a64(k) ^ (h * 1099511628211ull);
    return hex64(h);
}

namespace detail {

KPoly compile_system_member(const MultiPoly& p, const FieldSpec& field) {
    if (p.degree_q() > 0)
        throw UsageError("specialize q before counting (or use the joint mode)");
    const int m = p.arity();
    KPoly out;
    for (const auto& [e, c] : p.terms()) {
        FieldElement fc = field.from_bigint(c);
        if (fc.idx == 0) continue;
        KTerm t;
        t.c = fc.idx;
        t.e.assign(e.begin(), e.begin() + m);
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace detail

CountRecord brute_count(const PolySystem& system, const FieldSpec& field) {
    system.validate();
    const int m = system.arity();
    auto t0 = std::chrono::steady_clock::now();

    std::vector<detail::KPoly> ks;
    ks.reserve(system.polys.size());
    for (const auto& p : system.polys)
        ks.push_back(detail::compile_system_member(p, field));

    bool all_zero = true;
    for (const auto& k : ks)
        if (!k.empty()) all_zero = false;

    CountRecord rec;
    rec.poly_hash = system.hash();
    rec.p = field.p();
    rec.r = field.r();
    rec.arity = m;
    rec.method = "brute";

    if (all_zero) {
        // no enumeration needed: the zero system vanishes everywhere
        rec.count = point_space_size(field, m);
        rec.wall_ms = ms_since(t0);
        return rec;
    }

    budget_check(field, m);
    rec.count = detail::count_common_zeros(field, m, ks, config::threads());
    rec.wall_ms = ms_since(t0);
    return rec;
}

CountRecord tutte_count(const Graph& g, long long q, const FieldSpec& field) {
    std::ostringstream label;
    label << "graph[" << g.vertex_count() << "v" << g.edge_count() << "e]";

    // Every monomial of Z_G carries a factor q^{k(A)} with k(A) >= 1, so once
    // q = 0 in the field the whole polynomial vanishes and every point lies on
    // the locus. Decide that up front; expanding Z_G for a large chain only to
    // discover a zero polynomial would cost exponential memory for nothing.
    const long long p = field.p();
    const bool q_vanishes = g.vertex_count() > 0 && ((q % p) + p) % p == 0;
    if (q_vanishes) {
        CountRecord rec;
        rec.label = label.str();
        rec.spin_q = q;
        rec.p = field.p();
        rec.r = field.r();
        rec.arity = g.edge_count();
        rec.count = point_space_size(field, g.edge_count());
        rec.method = "brute";
        MultiPoly zero(g.edge_count());
        rec.poly_hash = PolySystem(std::move(zero)).hash();
        return rec;
    }

    MultiPoly z = tutte_delcon(g).with_q_set(BigInt(q));
    PolySystem sys(std::move(z));
    CountRecord rec = brute_count(sys, field);
    rec.spin_q = q;
    rec.label = label.str();
    return rec;
}

CountRecord tutte_count_joint(const Graph& g, const FieldSpec& field) {
    // Treat q as one more enumeration variable, placed after the t block.
    MultiPoly z = tutte_delcon(g);
    const int m = g.edge_count();
    MultiPoly widened(m + 1);
    for (const auto& [e, c] : z.terms()) {
        Exps en(m + 2, 0);
        for (int v = 0; v < m; ++v) en[v] = e[v];
        en[m] = e[m];  // old q exponent becomes the last t-variable
        widened.add_term(std::move(en), c);
    }
    PolySystem sys(std::move(widened));
    CountRecord rec = brute_count(sys, field);
    rec.label = "joint(q,t)";
    return rec;
}

RationalProb zfrak(const PolySystem& system, const FieldSpec& field) {
    CountRecord rec = brute_count(system, field);
    return BigRat(rec.count, point_space_size(field, rec.arity));
}

RationalProb zfrak_complement(const PolySystem& system, const FieldSpec& field) {
    return BigRat(1) - zfrak(system, field);
}

DelconCountReport delcon_count_identity(const Graph& g, int edge, long long q,
                                        const FieldSpec& field) {
    if (edge < 0 || edge >= g.edge_count()) throw UsageError("edge index out of range");
    const int m = g.edge_count();

    // Deletion and contraction drop the same edge index, so the surviving
    // edges share one variable order across both minors.
    MultiPoly z = tutte_delcon(g).with_q_set(BigInt(q));
    MultiPoly z_del = tutte_delcon(g.deleted(edge)).with_q_set(BigInt(q));
    MultiPoly z_con = tutte_delcon(g.contracted(edge)).with_q_set(BigInt(q));

    DelconCountReport rep;
    rep.lhs = brute_count(PolySystem(z), field).count;
    rep.n_contracted = brute_count(PolySystem(z_con), field).count;
    rep.n_intersection =
        brute_count(PolySystem(std::vector<MultiPoly>{z_con, z_del}), field).count;
    rep.power_term = point_space_size(field, m - 1);
    rep.rhs = BigInt(field.size()) * rep.n_intersection + rep.power_term - rep.n_contracted;
    rep.holds = (rep.lhs == rep.rhs);

    std::ostringstream os;
    os << "N = " << rep.lhs << ", q*N(cap) = " << BigInt(field.size()) * rep.n_intersection
       << ", q^(m-1) = " << rep.power_term << ", N(contracted) = " << rep.n_contracted;
    rep.detail = os.str();
    return rep;
}

CountRecord chain_count(const std::vector<std::pair<Graph, CountRecord>>& blocks,
                        long long q, const FieldSpec& field) {
    if (blocks.empty()) throw UsageError("chain requires at least one block");
    if (q % static_cast<long long>(field.p()) == 0)
        throw UsageError("chain formula needs q nonzero in the field");
    auto t0 = std::chrono::steady_clock::now();

    int total_edges = 0;
    BigInt prod = 1;
    uint64_t hash_mix = 0xcbf29ce484222325ull;
    for (const auto& [block, rec] : blocks) {
        if (rec.p != field.p() || rec.r != field.r())
            throw UsageError("block count computed over a different field");
        if (rec.spin_q && *rec.spin_q != q)
            throw UsageError("block count computed at a different q");
        const int mi = block.edge_count();
        if (rec.arity != mi)
            throw UsageError("block count arity does not match block edge count");
        total_edges += mi;
        prod *= point_space_size(field, mi) - rec.count;
        hash_mix = fnv1a64(rec.poly_hash) ^ (hash_mix * 1099511628211ull);
    }

    CountRecord rec;
    rec.label = "chain(" + std::to_string(blocks.size()) + " blocks)";
    rec.poly_hash = hex64(hash_mix);
    rec.spin_q = q;
    rec.p = field.p();
    rec.r = field.r();
    rec.arity = total_edges;
    rec.count = point_space_size(field, total_edges) - prod;
    rec.method = "chain-formula";
    rec.wall_ms = ms_since(t0);
    return rec;
}

FieldElement eval_poly(const MultiPoly& poly, const FieldSpec& field,
                       FieldElement q_value, const std::vector<FieldElement>& point) {
    if (static_cast<int>(point.size()) != poly.arity())
        throw UsageError("evaluation point arity mismatch");
    const int m = poly.arity();
    FieldElement acc = field.zero();
    for (const auto& [e, c] : poly.terms()) {
        FieldElement term = field.from_bigint(c);
        for (int v = 0; v < m; ++v)
            if (e[v]) term = field.mul(term, field.pow(point[v], e[v]));
        if (e[m]) term = field.mul(term, field.pow(q_value, e[m]));
        acc = field.add(acc, term);
    }
    return acc;
}

BigInt potts_state_sum(const Graph& g, long long q, const std::vector<BigInt>& t) {
    if (q < 0) throw UsageError("spin count must be non-negative");
    if (static_cast<int>(t.size()) != g.edge_count())
        throw UsageError("weight vector length does not match the edge count");
    const int n = g.vertex_count();
    if (n * std::log(std::max<long long>(q, 1)) > std::log(2e7))
        throw UsageError("state space too large for the explicit sum");
    if (q == 0) return BigInt(n == 0 ? 1 : 0);
    std::vector<int> sigma(n, 0);
    BigInt total = 0;
    for (;;) {
        BigInt w = 1;
        for (int i = 0; i < g.edge_count(); ++i) {
            const Edge& e = g.edge(i);
            if (sigma[e.u] == sigma[e.v]) w *= 1 + t[i];
        }
        total += w;
        int pos = 0;
        while (pos < n && ++sigma[pos] == q) sigma[pos++] = 0;
        if (pos == n) break;
    }
    return total;
}

}  // namespace tuttelab
