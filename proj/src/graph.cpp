#include "tuttelab/graph.hpp"

#include "tuttelab/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace tuttelab {

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edge_list) : n_(vertices) {
    if (vertices < 0) throw UsageError("negative vertex count");
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw UsageError("edge endpoint out of range");
        edges_.push_back(Edge{u, v});
    }
}

namespace {

// Union-find without path compression so unions can be rolled back.
struct Dsu {
    std::vector<int> parent, size;
    // (child_root, parent_root) pairs, for undo
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

}  // namespace

int Graph::components_count() const {
    Dsu dsu(n_);
    int k = n_;
    for (const Edge& e : edges_)
        if (dsu.unite(e.u, e.v)) --k;
    return k;
}

Graph Graph::deleted(int e) const {
    if (e < 0 || e >= edge_count()) throw UsageError("edge index out of range");
    Graph g;
    g.n_ = n_;
    g.edges_ = edges_;
    g.edges_.erase(g.edges_.begin() + e);
    return g;
}

Graph Graph::contracted(int e) const {
    if (e < 0 || e >= edge_count()) throw UsageError("edge index out of range");
    const Edge& ce = edges_[e];
    if (ce.is_loop()) return deleted(e);
    const int keep = std::min(ce.u, ce.v);
    const int gone = std::max(ce.u, ce.v);
    auto remap = [&](int w) {
        if (w == gone) return keep;
        return w > gone ? w - 1 : w;
    };
    Graph g;
    g.n_ = n_ - 1;
    g.edges_.reserve(edges_.size() - 1);
    for (int i = 0; i < edge_count(); ++i) {
        if (i == e) continue;
        g.edges_.push_back(Edge{remap(edges_[i].u), remap(edges_[i].v)});
    }
    return g;
}

std::vector<std::vector<int>> Graph::spanning_structures() const {
    const int m = edge_count();
    const int target = rank();  // edges in any maximal spanning forest
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    Dsu dsu(n_);

    // Include-first depth-first walk gives lexicographic ascending output.
    auto rec = [&](auto&& self, int idx, int picked) -> void {
        if (picked == target) {
            out.push_back(cur);
            return;
        }
        if (idx == m || m - idx < target - picked) return;
        const Edge& e = edges_[idx];
        size_t mark = dsu.trail.size();
        if (dsu.unite(e.u, e.v)) {
            cur.push_back(idx);
            self(self, idx + 1, picked + 1);
            cur.pop_back();
            dsu.rollback(mark);
        }
        self(self, idx + 1, picked);
    };
    rec(rec, 0, 0);
    return out;
}

std::string Graph::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = n_;
    auto arr = nlohmann::ordered_json::array();
    for (const Edge& e : edges_) arr.push_back({e.u, e.v});
    j["edges"] = std::move(arr);
    return j.dump();
}

Graph Graph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw UsageError(std::string("bad graph JSON: ") + err.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw UsageError("graph JSON needs \"vertices\" and \"edges\"");
    std::vector<std::pair<int, int>> edge_list;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw UsageError("each edge must be [u, v]");
        edge_list.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(j["vertices"].get<int>(), std::move(edge_list));
}

namespace {

// Shared builder state for the chained families.
struct Assembler {
    int next_vertex = 0;
    std::vector<std::pair<int, int>> edges;

    int fresh() { return next_vertex++; }

    // s-cycle through `entry` (fresh when < 0); returns the vertex used as the
    // attachment point for the next stretch of chain.
    int polygon(int s, int entry) {
        if (entry < 0) entry = fresh();
        if (s == 1) {
            edges.emplace_back(entry, entry);
            return entry;
        }
        std::vector<int> ring{entry};
        for (int i = 1; i < s; ++i) ring.push_back(fresh());
        for (int i = 0; i < s; ++i) edges.emplace_back(ring[i], ring[(i + 1) % s]);
        return ring[s / 2];
    }

    // k-edge path starting at `from`; returns the far endpoint.
    int path(int k, int from) {
        for (int i = 0; i < k; ++i) {
            int nxt = fresh();
            edges.emplace_back(from, nxt);
            from = nxt;
        }
        return from;
    }

    // K4 block through `share` (fresh when < 0); returns the opposite corner.
    int tetra(int share) {
        int a = share < 0 ? fresh() : share;
        int b = fresh(), c = fresh(), d = fresh();
        edges.emplace_back(a, b);
        edges.emplace_back(a, c);
        edges.emplace_back(a, d);
        edges.emplace_back(b, c);
        edges.emplace_back(b, d);
        edges.emplace_back(c, d);
        return d;
    }
};

}  // namespace

Graph build_family(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    auto need = [](bool ok, const char* what) {
        if (!ok) throw UsageError(std::string("bad family parameter: ") + what);
    };
    Assembler as;
    switch (spec.kind) {
        case K::Polygon:
            need(spec.a >= 1, "polygon needs sides >= 1");
            as.polygon(spec.a, -1);
            break;
        case K::Tree: {
            need(spec.a >= 1, "tree needs edges >= 1");
            as.path(spec.a, as.fresh());
            break;
        }
        case K::Complete: {
            need(spec.a >= 1, "complete graph needs vertices >= 1");
            for (int i = 0; i < spec.a; ++i) as.fresh();
            for (int i = 0; i < spec.a; ++i)
                for (int j = i + 1; j < spec.a; ++j) as.edges.emplace_back(i, j);
            break;
        }
        case K::PolygonChain: {
            need(spec.a >= 1 && spec.b >= 1 && spec.c >= 1, "polychain needs m,k,N >= 1");
            int attach = -1;
            for (int i = 0; i < spec.c; ++i) {
                int exit = as.polygon(spec.a + 1, attach);
                if (i + 1 < spec.c) attach = as.path(spec.b, exit);
            }
            break;
        }
        case K::TetraChain: {
            need(spec.a >= 1, "tetrachain needs N >= 1");
            int share = -1;
            for (int i = 0; i < spec.a; ++i) share = as.tetra(share);
            break;
        }
        case K::Edgeless:
            need(spec.a >= 0, "edgeless needs vertices >= 0");
            for (int i = 0; i < spec.a; ++i) as.fresh();
            break;
    }
    return Graph(as.next_vertex, std::move(as.edges));
}

std::optional<FamilySpec> parse_family(const std::string& text) {
    auto lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    auto num = [](const std::string& s) -> std::optional<int> {
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        try {
            return std::stoi(s);
        } catch (...) {
            return std::nullopt;
        }
    };

    std::string head = lower, tail;
    if (auto pos = lower.find(':'); pos != std::string::npos) {
        head = lower.substr(0, pos);
        tail = lower.substr(pos + 1);
    }

    FamilySpec spec;
    using K = FamilySpec::Kind;
    if (head == "polygon" || head == "cycle") {
        auto v = num(tail);
        if (!v) return std::nullopt;
        spec.kind = K::Polygon;
        spec.a = *v;
        return spec;
    }
    if (head == "tree" || head == "path") {
        auto v = num(tail);
        if (!v) return std::nullopt;
        spec.kind = K::Tree;
        spec.a = *v;
        return spec;
    }
    if (head == "complete") {
        auto v = num(tail);
        if (!v) return std::nullopt;
        spec.kind = K::Complete;
        spec.a = *v;
        return spec;
    }
    if (head == "tetrachain") {
        auto v = num(tail);
        if (!v) return std::nullopt;
        spec.kind = K::TetraChain;
        spec.a = *v;
        return spec;
    }
    if (head == "edgeless") {
        auto v = num(tail);
        if (!v) return std::nullopt;
        spec.kind = K::Edgeless;
        spec.a = *v;
        return spec;
    }
    if (head == "polychain") {
        spec.kind = K::PolygonChain;
        int seen = 0;
        std::stringstream ss(tail);
        std::string part;
        while (std::getline(ss, part, ',')) {
            auto eq = part.find('=');
            if (eq == std::string::npos) return std::nullopt;
            auto key = part.substr(0, eq);
            auto v = num(part.substr(eq + 1));
            if (!v) return std::nullopt;
            if (key == "m") spec.a = *v, seen |= 1;
            else if (key == "k") spec.b = *v, seen |= 2;
            else if (key == "n") spec.c = *v, seen |= 4;
            else return std::nullopt;
        }
        return seen == 7 ? std::optional(spec) : std::nullopt;
    }
    // "k4", "k5", ...
    if (head.size() >= 2 && head[0] == 'k' && tail.empty()) {
        auto v = num(head.substr(1));
        if (!v) return std::nullopt;
        spec.kind = K::Complete;
        spec.a = *v;
        return spec;
    }
    return std::nullopt;
}

Graph load_graph_arg(const std::string& arg) {
    if (auto fam = parse_family(arg)) return build_family(*fam);
    std::ifstream in(arg);
    if (!in) throw UsageError("not a family spec and not a readable file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return Graph::from_json(buf.str());
}

}  // namespace tuttelab
