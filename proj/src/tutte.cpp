#include "tuttelab/tutte.hpp"

#include "tuttelab/config.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace tuttelab {

namespace {

void check_cap(const Graph& g) {
    if (g.edge_count() > config::subset_edge_cap())
        throw UsageError("edge count exceeds subset enumeration cap");
}

// Rollback union-find shared by the subset walks below.
struct Dsu {
    std::vector<int> parent, size;
    std::vector<std::pair<int, int>> trail;
    explicit Dsu(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        trail.emplace_back(b, a);
        return true;
    }
    void rollback(size_t mark) {
        while (trail.size() > mark) {
            auto [child, root] = trail.back();
            trail.pop_back();
            size[root] -= size[child];
            parent[child] = child;
        }
    }
};

// Walk all edge subsets once, tracking k(A) incrementally; `leaf` receives
// the inclusion flags and the component count.
template <class Leaf>
void for_each_subset(const Graph& g, Leaf&& leaf) {
    const int m = g.edge_count();
    std::vector<char> in(m, 0);
    Dsu dsu(g.vertex_count());
    auto rec = [&](auto&& self, int idx, int k) -> void {
        if (idx == m) {
            leaf(in, k);
            return;
        }
        const Edge& e = g.edge(idx);
        // excluded
        in[idx] = 0;
        self(self, idx + 1, k);
        // included
        in[idx] = 1;
        size_t mark = dsu.trail.size();
        bool merged = dsu.unite(e.u, e.v);
        self(self, idx + 1, k - (merged ? 1 : 0));
        dsu.rollback(mark);
        in[idx] = 0;
    };
    rec(rec, 0, g.vertex_count());
}

}  // namespace

MultiPoly tutte_subset(const Graph& g) {
    check_cap(g);
    const int m = g.edge_count();
    MultiPoly z(m);
    for_each_subset(g, [&](const std::vector<char>& in, int k) {
        Exps e(m + 1, 0);
        for (int i = 0; i < m; ++i) e[i] = in[i];
        e[m] = static_cast<uint32_t>(k);
        z.add_term(std::move(e), BigInt(1));
    });
    return z;
}

namespace {

// Deletion-contraction state: edges carry their original variable label so
// the recursion can hand back polynomials in the top-level variables.
struct LabeledGraph {
    int isolated = 0;  // vertices not touched by any edge
    std::vector<std::array<int, 3>> edges;  // {u, v, var}

    // Vertices renumbered in order of first appearance; isolated vertices
    // only matter through their count.
    std::string canon(int arity) const {
        std::ostringstream os;
        os << "a" << arity << "i" << isolated << "|";
        std::unordered_map<int, int> seen;
        auto label = [&](int v) {
            auto [it, fresh] = seen.emplace(v, static_cast<int>(seen.size()));
            (void)fresh;
            return it->second;
        };
        for (const auto& [u, v, var] : edges)
            os << label(u) << "." << label(v) << "@" << var << ";";
        return os.str();
    }
};

std::shared_mutex delcon_mu;
std::unordered_map<std::string, MultiPoly> delcon_memo;

MultiPoly delcon_rec(const LabeledGraph& g, int arity) {
    if (g.edges.empty()) {
        MultiPoly z(arity);
        Exps e(arity + 1, 0);
        e[arity] = static_cast<uint32_t>(g.isolated);
        z.add_term(std::move(e), BigInt(1));
        return z;
    }

    const std::string key = g.canon(arity);
    {
        std::shared_lock lock(delcon_mu);
        auto it = delcon_memo.find(key);
        if (it != delcon_memo.end()) return it->second;
    }

    auto [u, v, var] = g.edges.back();

    // Count how often each endpoint occurs elsewhere, to maintain the
    // isolated-vertex tally after removing this edge.
    auto occurrences = [&](int w) {
        int c = 0;
        for (size_t i = 0; i + 1 < g.edges.size(); ++i)
            if (g.edges[i][0] == w || g.edges[i][1] == w) ++c;
        return c;
    };

    MultiPoly result(arity);
    if (u == v) {
        // Loop: deletion and contraction agree, Z = (1 + t_var) Z_del.
        LabeledGraph del = g;
        del.edges.pop_back();
        if (occurrences(u) == 0) ++del.isolated;
        MultiPoly zd = delcon_rec(del, arity);
        result = zd;
        MultiPoly t = MultiPoly::var_t(arity, var);
        result += t * zd;
    } else {
        LabeledGraph del = g;
        del.edges.pop_back();
        if (occurrences(u) == 0) ++del.isolated;
        if (occurrences(v) == 0) ++del.isolated;

        LabeledGraph con;
        con.isolated = g.isolated;
        con.edges.reserve(g.edges.size() - 1);
        bool merged_occurs = false;
        for (size_t i = 0; i + 1 < g.edges.size(); ++i) {
            auto e = g.edges[i];
            if (e[0] == v) e[0] = u;
            if (e[1] == v) e[1] = u;
            if (e[0] == u || e[1] == u) merged_occurs = true;
            con.edges.push_back(e);
        }
        if (!merged_occurs) ++con.isolated;  // the fused vertex went quiet

        result = delcon_rec(del, arity);
        result += MultiPoly::var_t(arity, var) * delcon_rec(con, arity);
    }

    {
        std::unique_lock lock(delcon_mu);
        delcon_memo.emplace(key, result);
    }
    return result;
}

}  // namespace

MultiPoly tutte_delcon(const Graph& g) {
    check_cap(g);
    LabeledGraph lg;
    std::vector<char> touched(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        lg.edges.push_back({e.u, e.v, i});
        touched[e.u] = touched[e.v] = 1;
    }
    lg.isolated = static_cast<int>(std::count(touched.begin(), touched.end(), 0));
    return delcon_rec(lg, g.edge_count());
}

MultiPoly kirchhoff(const Graph& g) {
    const int m = g.edge_count();
    MultiPoly psi(m);
    for (const auto& forest : g.spanning_structures()) {
        Exps e(m + 1, 1);
        e[m] = 0;
        for (int i : forest) e[i] = 0;
        psi.add_term(std::move(e), BigInt(1));
    }
    return psi;
}

MultiPoly phi(const Graph& g) {
    const int m = g.edge_count();
    MultiPoly out(m);
    for (const auto& forest : g.spanning_structures()) {
        Exps e(m + 1, 0);
        for (int i : forest) e[i] = 1;
        out.add_term(std::move(e), BigInt(1));
    }
    return out;
}

MultiPoly normalized_tutte(const Graph& g) {
    return tutte_delcon(g).divided_by_q(g.components_count());
}

MultiPoly lowest_part_at_q0(const Graph& g) {
    return normalized_tutte(g).coefficient_of_q(0).lowest_t_part();
}

RatPoly second_polynomial(const Graph& g, const RatPoly& f) {
    check_cap(g);
    const int m = g.edge_count();
    if (f.arity() != m) throw UsageError("observable arity must match edge count");
    if (f.degree_q() > 0) throw UsageError("observable must not involve q");
    RatPoly p(m);
    for_each_subset(g, [&](const std::vector<char>& in, int k) {
        for (const auto& [fe, fc] : f.terms()) {
            bool supported = true;
            for (int v = 0; v < m && supported; ++v)
                if (fe[v] && !in[v]) supported = false;
            if (!supported) continue;
            Exps e = fe;
            for (int v = 0; v < m; ++v) e[v] += in[v];
            e[m] = static_cast<uint32_t>(k);
            p.add_term(std::move(e), fc);
        }
    });
    return p;
}

bool cremona_identity_check(const Graph& g) {
    MultiPoly psi = kirchhoff(g);
    MultiPoly ph = phi(g);
    if (!ph.multilinear_in_t()) return false;
    const int m = g.edge_count();
    MultiPoly flipped(m);
    for (const auto& [e, c] : ph.terms()) {
        Exps en(m + 1, 0);
        for (int v = 0; v < m; ++v) en[v] = 1 - e[v];
        flipped.add_term(std::move(en), c);
    }
    return flipped == psi;
}

}  // namespace tuttelab
