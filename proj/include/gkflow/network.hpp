#pragma once

#include <span>
#include <string>
#include <vector>

#include "gkflow/poset.hpp"

namespace gkflow {

struct VertexInfo {
    enum class Kind { BottomSource, Top, Bottom, TopSink };
    Kind kind;
    int index; // 0 for the source, n+1 for the sink, else 1..n
};

// Unit-capacity edge; cost is -1 or 0.
struct Edge {
    int id;
    int from;
    int to;
    int cost;
    int family; // 1: source->top, 2: bottom->sink, 3: top->bottom, 4: relation
};

// Directed graph over 2n+2 vertices: source b0, tops t1..tn, bottoms b1..bn,
// sink t(n+1). Vertex ids follow that order: 0, 1..n, n+1..2n, 2n+1.
class FlowNetwork {
public:
    int n() const { return n_; }
    const Instance& instance() const { return instance_; }

    int vertex_count() const { return 2 * n_ + 2; }
    int source() const { return 0; }
    int sink() const { return 2 * n_ + 1; }
    int top(int i) const { return i; }
    int bottom(int i) const { return n_ + i; }

    VertexInfo vertex_info(int v) const;
    std::string vertex_name(int v) const;

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& out_edges(int v) const { return out_[v]; }
    const std::vector<int>& in_edges(int v) const { return in_[v]; }

    friend FlowNetwork build_network(const Instance& inst);

private:
    explicit FlowNetwork(Instance inst);

    int n_;
    Instance instance_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// Edges come in family order (1..4), each family sorted by (i, j).
FlowNetwork build_network(const Instance& inst);

// One usable arc of the admissibility graph: the forward copy of an edge with
// room left, or the reversal of an edge carrying flow, in either case with
// potential difference exactly equal to the cost.
struct ResidualArc {
    int from;
    int to;
    int edge_id;
    bool reverse;
};

std::vector<ResidualArc> admissible_edges(const FlowNetwork& net,
                                          std::span<const int> flow,
                                          std::span<const int> potential);

struct Reachability {
    std::vector<char> reachable;
    std::vector<int> parent_vertex; // -1 for the root and unreached vertices
    std::vector<int> parent_edge;
    std::vector<char> parent_reverse;
    std::vector<int> order; // BFS discovery order

    bool reaches(int v) const { return reachable[v] != 0; }
};

// BFS from the source over admissible arcs, expanding neighbors in ascending
// vertex order so that path selection is deterministic.
Reachability reachable_set(const FlowNetwork& net, std::span<const int> flow,
                           std::span<const int> potential);

// Graphviz rendering with the four edge families color-coded
// (green/red/blue/black) and element names annotated on each top/bottom pair.
std::string render_dot(const FlowNetwork& net);

} // namespace gkflow
