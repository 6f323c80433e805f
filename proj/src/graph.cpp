#include "trussnet/graph.hpp"

#include <string>
#include <vector>

namespace trussnet {

namespace {

void check_edges(const std::vector<std::pair<int, int>>& edges, int n_nodes) {
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [s, r] = edges[k];
    if (s < 0 || s >= n_nodes || r < 0 || r >= n_nodes) {
      throw IndexOutOfRange("edge " + std::to_string(k) + " endpoint (" +
                            std::to_string(s) + "," + std::to_string(r) +
                            ") out of range for " + std::to_string(n_nodes) +
                            " nodes");
    }
  }
}

Eigen::MatrixXd pack_rows(const std::vector<std::vector<double>>& rows,
                          const char* what) {
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  Eigen::Index dim = n > 0 ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  Eigen::MatrixXd out(n, dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != dim) {
      throw DimensionMismatch(std::string(what) + " vectors are ragged: row " +
                              std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) +
                              " entries, expected " + std::to_string(dim));
    }
    for (Eigen::Index j = 0; j < dim; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

}  // namespace

AttributedGraph build_graph(const std::vector<std::vector<double>>& node_attrs,
                            const std::vector<std::pair<int, int>>& edges,
                            const std::vector<std::vector<double>>& edge_attrs,
                            const std::vector<double>& global_attrs) {
  Eigen::VectorXd u(static_cast<Eigen::Index>(global_attrs.size()));
  for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = global_attrs[i];
  return build_graph(pack_rows(node_attrs, "node attribute"), edges,
                     pack_rows(edge_attrs, "edge attribute"), std::move(u));
}

AttributedGraph build_graph(Eigen::MatrixXd node_attrs,
                            std::vector<std::pair<int, int>> edges,
                            Eigen::MatrixXd edge_attrs,
                            Eigen::VectorXd global_attrs) {
  if (static_cast<Eigen::Index>(edges.size()) != edge_attrs.rows()) {
    throw DimensionMismatch("edge_attrs has " +
                            std::to_string(edge_attrs.rows()) +
                            " rows but edge_list has " +
                            std::to_string(edges.size()) + " entries");
  }
  check_edges(edges, static_cast<int>(node_attrs.rows()));
  return AttributedGraph{std::move(node_attrs), std::move(edges),
                         std::move(edge_attrs), std::move(global_attrs)};
}

AttributedGraph permute_nodes(const AttributedGraph& g,
                              const std::vector<int>& perm) {
  const int n = g.num_nodes();
  if (static_cast<int>(perm.size()) != n) {
    throw InvalidPermutation("permutation has " + std::to_string(perm.size()) +
                             " entries for " + std::to_string(n) + " nodes");
  }
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) {
      throw InvalidPermutation("not a bijection on [0, " + std::to_string(n) +
                               ")");
    }
    seen[p] = 1;
  }

  AttributedGraph out;
  out.node_attrs.resize(n, g.node_dim());
  for (int i = 0; i < n; ++i) out.node_attrs.row(perm[i]) = g.node_attrs.row(i);
  out.edges.reserve(g.edges.size());
  for (const auto& [s, r] : g.edges) out.edges.emplace_back(perm[s], perm[r]);
  out.edge_attrs = g.edge_attrs;
  out.global_attrs = g.global_attrs;
  return out;
}

BatchedGraph disjoint_union(const std::vector<AttributedGraph>& graphs) {
  if (graphs.empty()) {
    throw DimensionMismatch("disjoint_union of zero graphs");
  }
  const int dv = graphs[0].node_dim();
  const int de = graphs[0].edge_dim();
  const int du = graphs[0].global_dim();
  int total_nodes = 0;
  int total_edges = 0;
  for (const auto& g : graphs) {
    if (g.node_dim() != dv || g.edge_dim() != de || g.global_dim() != du) {
      throw DimensionMismatch(
          "graphs in a batch must share node/edge/global dimensions");
    }
    total_nodes += g.num_nodes();
    total_edges += g.num_edges();
  }

  const int b = static_cast<int>(graphs.size());
  BatchedGraph out;
  out.node_attrs.resize(total_nodes, dv);
  out.edge_attrs.resize(total_edges, de);
  out.global_attrs.resize(b, du);
  out.edges.reserve(total_edges);
  out.node_graph_id.reserve(total_nodes);
  out.edge_graph_id.reserve(total_edges);
  out.node_offsets.assign(1, 0);
  out.edge_offsets.assign(1, 0);

  int node_base = 0;
  int edge_base = 0;
  for (int gi = 0; gi < b; ++gi) {
    const auto& g = graphs[gi];
    out.node_attrs.middleRows(node_base, g.num_nodes()) = g.node_attrs;
    out.edge_attrs.middleRows(edge_base, g.num_edges()) = g.edge_attrs;
    out.global_attrs.row(gi) = g.global_attrs.transpose();
    for (const auto& [s, r] : g.edges) {
      out.edges.emplace_back(s + node_base, r + node_base);
    }
    out.node_graph_id.insert(out.node_graph_id.end(), g.num_nodes(), gi);
    out.edge_graph_id.insert(out.edge_graph_id.end(), g.num_edges(), gi);
    node_base += g.num_nodes();
    edge_base += g.num_edges();
    out.node_offsets.push_back(node_base);
    out.edge_offsets.push_back(edge_base);
  }
  return out;
}

std::vector<AttributedGraph> BatchedGraph::split() const {
  std::vector<AttributedGraph> out;
  const int b = batch_size();
  out.reserve(b);
  for (int gi = 0; gi < b; ++gi) {
    const int n0 = node_offsets[gi];
    const int n1 = node_offsets[gi + 1];
    const int e0 = edge_offsets[gi];
    const int e1 = edge_offsets[gi + 1];
    AttributedGraph g;
    g.node_attrs = node_attrs.middleRows(n0, n1 - n0);
    g.edge_attrs = edge_attrs.middleRows(e0, e1 - e0);
    g.global_attrs = global_attrs.row(gi).transpose();
    g.edges.reserve(e1 - e0);
    for (int k = e0; k < e1; ++k) {
      g.edges.emplace_back(edges[k].first - n0, edges[k].second - n0);
    }
    out.push_back(std::move(g));
  }
  return out;
}

bool graphs_equal(const AttributedGraph& a, const AttributedGraph& b) {
  return a.num_nodes() == b.num_nodes() && a.edges == b.edges &&
         a.node_attrs == b.node_attrs && a.edge_attrs == b.edge_attrs &&
         a.global_attrs == b.global_attrs;
}

}  // namespace trussnet
