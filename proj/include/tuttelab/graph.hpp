#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tuttelab {

// Edge of a finite multigraph. Loops (u == v) and parallel edges are allowed.
struct Edge {
    int u = 0;
    int v = 0;
    bool is_loop() const { return u == v; }
    bool operator==(const Edge&) const = default;
};

class Graph {
public:
    Graph() = default;
    Graph(int vertices, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int i) const { return edges_[i]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Connected components, isolated vertices included.
    int components_count() const;
    int rank() const { return n_ - components_count(); }        // n - k(E)
    int nullity() const { return edge_count() - rank(); }       // first Betti number

    // Edge removal; remaining edges keep their relative order, indices shift.
    Graph deleted(int e) const;
    // Contraction: endpoints identified, edge removed; loops elsewhere survive.
    // Contracting a loop is the same as deleting it.
    Graph contracted(int e) const;

    // All maximal spanning forests, each as an ascending list of edge indices,
    // emitted in lexicographic order.
    std::vector<std::vector<int>> spanning_structures() const;

    std::string to_json() const;
    static Graph from_json(const std::string& text);

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

struct FamilySpec {
    enum class Kind { Polygon, Tree, Complete, PolygonChain, TetraChain, Edgeless };
    Kind kind = Kind::Polygon;
    // Polygon: a = sides. Tree: a = edge count. Complete: a = vertices.
    // PolygonChain: a = m, b = k, c = N. TetraChain: a = N. Edgeless: a = vertices.
    int a = 1, b = 1, c = 1;
};

Graph build_family(const FamilySpec& spec);

// Accepts "polygon:4", "tree:3" (or "path:3"), "complete:5", "k4",
// "tetrachain:3", "polychain:m=3,k=2,N=4", "edgeless:2".
std::optional<FamilySpec> parse_family(const std::string& text);

// Family string or a path to a graph JSON file.
Graph load_graph_arg(const std::string& arg);

}  // namespace tuttelab
