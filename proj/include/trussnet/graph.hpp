#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "trussnet/errors.hpp"

namespace trussnet {

/// Directed multigraph with real-valued attributes on nodes, edges and the
/// graph itself. Node attributes are the rows of `node_attrs` (n x Dv),
/// edge attributes the rows of `edge_attrs` (m x De, aligned with `edges`),
/// and `global_attrs` is a single Du-vector (possibly empty). Self-loops
/// and parallel edges are allowed. Treat instances as immutable values;
/// all operations return new graphs.
struct AttributedGraph {
  Eigen::MatrixXd node_attrs;
  std::vector<std::pair<int, int>> edges;  // (sender, receiver)
  Eigen::MatrixXd edge_attrs;
  Eigen::VectorXd global_attrs;

  int num_nodes() const { return static_cast<int>(node_attrs.rows()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int node_dim() const { return static_cast<int>(node_attrs.cols()); }
  int edge_dim() const { return static_cast<int>(edge_attrs.cols()); }
  int global_dim() const { return static_cast<int>(global_attrs.size()); }
};

/// Validating constructor from ragged input. Throws DimensionMismatch if
/// attribute vectors are ragged or misaligned, IndexOutOfRange if an edge
/// endpoint exceeds the node count.
AttributedGraph build_graph(const std::vector<std::vector<double>>& node_attrs,
                            const std::vector<std::pair<int, int>>& edges,
                            const std::vector<std::vector<double>>& edge_attrs,
                            const std::vector<double>& global_attrs);

/// Same checks for graphs assembled directly from matrices.
AttributedGraph build_graph(Eigen::MatrixXd node_attrs,
                            std::vector<std::pair<int, int>> edges,
                            Eigen::MatrixXd edge_attrs,
                            Eigen::VectorXd global_attrs);

/// Relabel nodes: node i moves to position perm[i], every edge (s, r)
/// becomes (perm[s], perm[r]). Edge and global attributes are untouched.
AttributedGraph permute_nodes(const AttributedGraph& g,
                              const std::vector<int>& perm);

/// Disjoint union of B graphs stored as one flat graph plus per-entity
/// graph ids and one global vector per member graph. No edge crosses a
/// graph boundary and split() recovers the inputs bit-exactly.
struct BatchedGraph {
  Eigen::MatrixXd node_attrs;             // N x Dv
  std::vector<std::pair<int, int>> edges;  // global node indices
  Eigen::MatrixXd edge_attrs;             // M x De
  Eigen::MatrixXd global_attrs;           // B x Du
  std::vector<int> node_graph_id;
  std::vector<int> edge_graph_id;
  std::vector<int> node_offsets;  // size B+1
  std::vector<int> edge_offsets;  // size B+1

  int batch_size() const { return static_cast<int>(global_attrs.rows()); }
  int num_nodes() const { return static_cast<int>(node_attrs.rows()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int node_dim() const { return static_cast<int>(node_attrs.cols()); }
  int edge_dim() const { return static_cast<int>(edge_attrs.cols()); }
  int global_dim() const { return static_cast<int>(global_attrs.cols()); }

  std::vector<AttributedGraph> split() const;
};

/// All graphs must agree on Dv, De and Du; throws DimensionMismatch.
BatchedGraph disjoint_union(const std::vector<AttributedGraph>& graphs);

bool graphs_equal(const AttributedGraph& a, const AttributedGraph& b);

}  // namespace trussnet
