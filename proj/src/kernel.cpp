#include "tuttelab/kernel.hpp"

#include "tuttelab/config.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace tuttelab::detail {

namespace {

constexpr uint32_t kNone = UINT32_MAX;

// ---- field operation flavors -----------------------------------------------

struct PrimeOps {
    uint32_t p;
    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(uint64_t(a) * b % p);
    }
    uint32_t neg(uint32_t a) const { return a ? p - a : 0; }
};

struct TableOps {
    uint64_t q;
    const uint32_t* addt;
    const uint32_t* mult;
    const uint32_t* negt;
    uint32_t add(uint32_t a, uint32_t b) const { return addt[a * q + b]; }
    uint32_t mul(uint32_t a, uint32_t b) const { return mult[a * q + b]; }
    uint32_t neg(uint32_t a) const { return negt[a]; }
};

// Digit-vector fallback for large extension fields.
struct GenericOps {
    const FieldSpec* f;
    uint32_t add(uint32_t a, uint32_t b) const {
        return f->add(FieldElement{a}, FieldElement{b}).idx;
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return f->mul(FieldElement{a}, FieldElement{b}).idx;
    }
    uint32_t neg(uint32_t a) const { return f->neg(FieldElement{a}).idx; }
};

// ---- compiled polynomial -----------------------------------------------

// Layer i holds nodes that are polynomials in x_1..x_i, expanded in powers
// of x_i with layer i-1 nodes as coefficients. Layer 0 nodes are constants.
// Structurally identical subtrees share a node.
struct Node {
    // (exponent of the layer variable, node id one layer down), ascending
    std::vector<std::pair<uint32_t, uint32_t>> ch;
};

struct Compiled {
    bool always_zero = false;
    std::vector<uint32_t> consts;             // layer 0
    std::vector<std::vector<Node>> layers;    // layers[i-1] = layer i, i in [1, m-1]
    // Root: expansion in the last variable; root_coeff[e] = node id at layer
    // m-1 (kNone for an absent power).
    std::vector<uint32_t> root_coeff;
};

struct Builder {
    int m;
    std::map<uint32_t, uint32_t> const_ids;
    std::vector<std::map<std::vector<std::pair<uint32_t, uint32_t>>, uint32_t>> layer_ids;
    Compiled out;

    explicit Builder(int arity) : m(arity) {
        if (m >= 2) {
            layer_ids.resize(m - 1);
            out.layers.resize(m - 1);
        }
    }

    uint32_t intern_const(uint32_t v) {
        auto [it, fresh] = const_ids.try_emplace(v, static_cast<uint32_t>(out.consts.size()));
        if (fresh) out.consts.push_back(v);
        return it->second;
    }

    // terms: nonempty, exponents limited to x_1..x_{level}; level in [0, m-1]
    uint32_t build(int level, std::vector<const KTerm*> terms) {
        if (level == 0) {
            // a single constant term (exponent vectors here are all-zero)
            return intern_const(terms.front()->c);
        }
        std::map<uint32_t, std::vector<const KTerm*>> groups;
        for (const KTerm* t : terms) groups[t->e[level - 1]].push_back(t);
        std::vector<std::pair<uint32_t, uint32_t>> ch;
        ch.reserve(groups.size());
        for (auto& [exp, sub] : groups) ch.emplace_back(exp, build(level - 1, std::move(sub)));
        auto& ids = layer_ids[level - 1];
        auto [it, fresh] = ids.try_emplace(ch, static_cast<uint32_t>(out.layers[level - 1].size()));
        if (fresh) out.layers[level - 1].push_back(Node{std::move(ch)});
        return it->second;
    }

    Compiled compile(const KPoly& poly) {
        if (poly.empty()) {
            out.always_zero = true;
            return std::move(out);
        }
        // split on the last variable
        std::map<uint32_t, std::vector<const KTerm*>> groups;
        for (const KTerm& t : poly) groups[m > 0 ? t.e[m - 1] : 0].push_back(&t);
        uint32_t maxe = groups.rbegin()->first;
        out.root_coeff.assign(maxe + 1, kNone);
        for (auto& [exp, sub] : groups) out.root_coeff[exp] = build(m - 1, std::move(sub));
        return std::move(out);
    }
};

// Per-worker evaluation state for one compiled polynomial.
struct EvalState {
    std::vector<uint32_t> const_vals;             // fixed
    std::vector<std::vector<uint32_t>> layer_vals; // parallel to layers
    std::vector<uint32_t> root_vals;              // values of root coefficients
};

// ---- the engine ---------------------------------------------------------

template <class Ops>
struct Engine {
    const FieldSpec& field;
    Ops ops;
    uint64_t q;
    int m;
    const std::vector<Compiled>& polys;
    std::vector<uint32_t> inv;  // inverse table, inv[0] unused

    Engine(const FieldSpec& f, Ops o, int arity, const std::vector<Compiled>& ps)
        : field(f), ops(o), q(f.size()), m(arity), polys(ps) {
        inv.assign(q, 0);
        for (uint64_t a = 1; a < q; ++a)
            inv[a] = field.inv(FieldElement{static_cast<uint32_t>(a)}).idx;
    }

    // x^e with tiny exponents
    uint32_t power(uint32_t x, uint32_t e) const {
        uint32_t acc = 1;
        for (uint32_t i = 0; i < e; ++i) acc = ops.mul(acc, x);
        return acc;
    }

    void refresh_layer(const Compiled& cp, EvalState& st, int level,
                       const std::vector<uint32_t>& digits) const {
        const uint32_t x = digits[level - 1];
        const auto& nodes = cp.layers[level - 1];
        auto& vals = st.layer_vals[level - 1];
        const auto& below = (level == 1) ? st.const_vals : st.layer_vals[level - 2];
        for (size_t i = 0; i < nodes.size(); ++i) {
            uint32_t acc = 0;
            for (const auto& [e, child] : nodes[i].ch)
                acc = ops.add(acc, ops.mul(below[child], power(x, e)));
            vals[i] = acc;
        }
    }

    void refresh_root(const Compiled& cp, EvalState& st) const {
        const auto& below = (m == 1) ? st.const_vals : st.layer_vals[m - 2];
        st.root_vals.resize(cp.root_coeff.size());
        for (size_t e = 0; e < cp.root_coeff.size(); ++e)
            st.root_vals[e] = cp.root_coeff[e] == kNone ? 0 : below[cp.root_coeff[e]];
    }

    // Count admissible values of the last variable for the current prefix.
    uint64_t count_last(std::vector<EvalState>& states) const {
        bool all = true;          // candidate set is the whole field
        uint32_t candidate = 0;   // valid when !all
        static thread_local std::vector<const std::vector<uint32_t>*> deferred;
        deferred.clear();

        for (size_t pi = 0; pi < polys.size(); ++pi) {
            const Compiled& cp = polys[pi];
            if (cp.always_zero) continue;
            EvalState& st = states[pi];
            refresh_root(cp, st);
            const auto& c = st.root_vals;
            int deg = -1;
            for (int e = static_cast<int>(c.size()) - 1; e >= 0; --e)
                if (c[e]) {
                    deg = e;
                    break;
                }
            if (deg == -1) continue;          // identically zero here
            if (deg == 0) return 0;           // nonzero constant: no solutions
            if (deg == 1) {
                uint32_t root = ops.neg(ops.mul(c[0], inv[c[1]]));
                if (all) {
                    all = false;
                    candidate = root;
                } else if (candidate != root) {
                    return 0;
                }
                continue;
            }
            deferred.push_back(&st.root_vals);
        }

        if (deferred.empty()) return all ? q : 1;

        auto eval_at = [&](const std::vector<uint32_t>& c, uint32_t x) {
            uint32_t acc = 0;
            for (size_t e = c.size(); e-- > 0;) acc = ops.add(ops.mul(acc, x), c[e]);
            return acc;
        };
        if (!all) {
            for (const auto* c : deferred)
                if (eval_at(*c, candidate)) return 0;
            return 1;
        }
        uint64_t hits = 0;
        for (uint64_t x = 0; x < q; ++x) {
            bool ok = true;
            for (const auto* c : deferred)
                if (eval_at(*c, static_cast<uint32_t>(x))) {
                    ok = false;
                    break;
                }
            if (ok) ++hits;
        }
        return hits;
    }

    // Count over prefix indices [begin, end).
    uint64_t run_range(uint64_t begin, uint64_t end) const {
        std::vector<EvalState> states(polys.size());
        for (size_t pi = 0; pi < polys.size(); ++pi) {
            const Compiled& cp = polys[pi];
            states[pi].const_vals = cp.consts;
            states[pi].layer_vals.resize(cp.layers.size());
            for (size_t l = 0; l < cp.layers.size(); ++l)
                states[pi].layer_vals[l].assign(cp.layers[l].size(), 0);
        }

        std::vector<uint32_t> digits(m - 1, 0);
        {
            uint64_t v = begin;
            for (int i = m - 1; i-- > 0;) {
                digits[i] = static_cast<uint32_t>(v % q);
                v /= q;
            }
        }
        for (size_t pi = 0; pi < polys.size(); ++pi)
            if (!polys[pi].always_zero)
                for (int level = 1; level <= m - 1; ++level)
                    refresh_layer(polys[pi], states[pi], level, digits);

        uint64_t total = 0;
        for (uint64_t at = begin; at < end; ++at) {
            total += count_last(states);
            if (at + 1 == end) break;
            // lexicographic increment; refresh layers from the changed digit up
            int j = m - 2;
            while (j >= 0 && digits[j] + 1 == q) {
                digits[j] = 0;
                --j;
            }
            digits[j] += 1;
            for (size_t pi = 0; pi < polys.size(); ++pi)
                if (!polys[pi].always_zero)
                    for (int level = j + 1; level <= m - 1; ++level)
                        refresh_layer(polys[pi], states[pi], level, digits);
        }
        return total;
    }
};

template <class Ops>
BigInt drive(const FieldSpec& field, Ops ops, int arity,
             const std::vector<Compiled>& polys, int threads) {
    Engine<Ops> eng(field, ops, arity, polys);

    uint64_t prefixes = 1;
    for (int i = 0; i < arity - 1; ++i) prefixes *= field.size();

    if (threads <= 1 || prefixes < 4096) {
        return BigInt(eng.run_range(0, prefixes));
    }

    const uint64_t chunks = std::min<uint64_t>(uint64_t(threads) * 8, prefixes);
    const uint64_t step = (prefixes + chunks - 1) / chunks;
    std::atomic<uint64_t> next{0};
    std::vector<uint64_t> partial(chunks, 0);
    auto worker = [&]() {
        for (;;) {
            uint64_t c = next.fetch_add(1);
            if (c >= chunks) return;
            uint64_t lo = c * step;
            uint64_t hi = std::min(prefixes, lo + step);
            if (lo < hi) partial[c] = eng.run_range(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    uint64_t sum = 0;
    for (uint64_t v : partial) sum += v;
    return BigInt(sum);
}

}  // namespace

BigInt count_common_zeros(const FieldSpec& field, int arity,
                          const std::vector<KPoly>& polys, int threads) {
    if (arity == 0) {
        // the empty tuple is a point iff no nonzero constant is present
        for (const KPoly& p : polys)
            if (!p.empty()) return BigInt(0);
        return BigInt(1);
    }

    std::vector<Compiled> compiled;
    compiled.reserve(polys.size());
    bool all_zero = true;
    for (const KPoly& p : polys) {
        Builder b(arity);
        compiled.push_back(b.compile(p));
        if (!compiled.back().always_zero) all_zero = false;
    }
    if (all_zero) return point_space_size(field, arity);

    if (field.r() == 1)
        return drive(field, PrimeOps{field.p()}, arity, compiled, threads);
    if (field.mul_table())
        return drive(field,
                     TableOps{field.size(), field.add_table(), field.mul_table(),
                              field.neg_table()},
                     arity, compiled, threads);
    return drive(field, GenericOps{&field}, arity, compiled, threads);
}

}  // namespace tuttelab::detail
