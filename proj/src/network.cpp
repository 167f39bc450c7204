#include "gkflow/network.hpp"

#include <algorithm>
#include <deque>

namespace gkflow {

FlowNetwork::FlowNetwork(Instance inst)
    : n_(inst.size()), instance_(std::move(inst)) {
    auto add_edge = [&](int from, int to, int cost, int family) {
        edges_.push_back({static_cast<int>(edges_.size()), from, to, cost, family});
    };
    for (int i = 1; i <= n_; ++i) add_edge(source(), top(i), 0, 1);
    for (int i = 1; i <= n_; ++i) add_edge(bottom(i), sink(), -1, 2);
    for (int i = 1; i <= n_; ++i) add_edge(top(i), bottom(i), 0, 3);
    // family 4 sorted by h-rank pair keeps edge ids stable
    std::vector<IdPair> rank_pairs;
    for (auto [x, y] : instance_.cp().pairs())
        rank_pairs.emplace_back(instance_.rank(x), instance_.rank(y));
    std::sort(rank_pairs.begin(), rank_pairs.end());
    for (auto [i, j] : rank_pairs) {
        if (i >= j)
            throw InvariantViolation("relation edge with non-increasing ranks");
        ElementId x = instance_.element_at_rank(i);
        ElementId y = instance_.element_at_rank(j);
        int cost = instance_.less(x, y) ? -1 : 0;
        add_edge(bottom(i), top(j), cost, 4);
    }

    out_.assign(vertex_count(), {});
    in_.assign(vertex_count(), {});
    for (const Edge& e : edges_) {
        out_[e.from].push_back(e.id);
        in_[e.to].push_back(e.id);
    }
}

FlowNetwork build_network(const Instance& inst) { return FlowNetwork(inst); }

VertexInfo FlowNetwork::vertex_info(int v) const {
    if (v == source()) return {VertexInfo::Kind::BottomSource, 0};
    if (v == sink()) return {VertexInfo::Kind::TopSink, n_ + 1};
    if (v <= n_) return {VertexInfo::Kind::Top, v};
    return {VertexInfo::Kind::Bottom, v - n_};
}

std::string FlowNetwork::vertex_name(int v) const {
    VertexInfo info = vertex_info(v);
    switch (info.kind) {
    case VertexInfo::Kind::BottomSource: return "b0";
    case VertexInfo::Kind::TopSink: return "t" + std::to_string(info.index);
    case VertexInfo::Kind::Top: return "t" + std::to_string(info.index);
    case VertexInfo::Kind::Bottom: return "b" + std::to_string(info.index);
    }
    return "?";
}

std::vector<ResidualArc> admissible_edges(const FlowNetwork& net,
                                          std::span<const int> flow,
                                          std::span<const int> potential) {
    std::vector<ResidualArc> arcs;
    for (const Edge& e : net.edges()) {
        if (potential[e.to] - potential[e.from] != e.cost) continue;
        if (flow[e.id] < 1) arcs.push_back({e.from, e.to, e.id, false});
        if (flow[e.id] > 0) arcs.push_back({e.to, e.from, e.id, true});
    }
    return arcs;
}

Reachability reachable_set(const FlowNetwork& net, std::span<const int> flow,
                           std::span<const int> potential) {
    const int vcount = net.vertex_count();
    std::vector<std::vector<std::pair<int, ResidualArc>>> adj(vcount);
    for (const ResidualArc& arc : admissible_edges(net, flow, potential))
        adj[arc.from].emplace_back(arc.to, arc);
    for (auto& lst : adj)
        std::sort(lst.begin(), lst.end(),
                  [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return a.second.edge_id < b.second.edge_id;
                  });

    Reachability r;
    r.reachable.assign(vcount, 0);
    r.parent_vertex.assign(vcount, -1);
    r.parent_edge.assign(vcount, -1);
    r.parent_reverse.assign(vcount, 0);

    std::deque<int> queue;
    r.reachable[net.source()] = 1;
    r.order.push_back(net.source());
    queue.push_back(net.source());
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& [to, arc] : adj[u]) {
            if (r.reachable[to]) continue;
            r.reachable[to] = 1;
            r.parent_vertex[to] = u;
            r.parent_edge[to] = arc.edge_id;
            r.parent_reverse[to] = arc.reverse ? 1 : 0;
            r.order.push_back(to);
            queue.push_back(to);
        }
    }
    return r;
}

std::string render_dot(const FlowNetwork& net) {
    static const char* family_color[] = {"", "green", "red", "blue", "black"};
    std::string out = "digraph gk {\n  rankdir=LR;\n";
    const Instance& inst = net.instance();
    for (int v = 0; v < net.vertex_count(); ++v) {
        VertexInfo info = net.vertex_info(v);
        std::string label = net.vertex_name(v);
        if (info.kind == VertexInfo::Kind::Top || info.kind == VertexInfo::Kind::Bottom)
            label += " (" + inst.name(inst.element_at_rank(info.index)) + ")";
        out += "  " + net.vertex_name(v) + " [label=\"" + label + "\"];\n";
    }
    for (const Edge& e : net.edges()) {
        out += "  " + net.vertex_name(e.from) + " -> " + net.vertex_name(e.to) +
               " [color=" + family_color[e.family] +
               ", label=\"" + std::to_string(e.cost) + "\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace gkflow
