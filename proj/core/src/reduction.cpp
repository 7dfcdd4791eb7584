#include "domset/reduction.hpp"

#include <algorithm>
#include <utility>

#include "domset/brute_oracle.hpp"
#include "domset/errors.hpp"
#include "domset/vandermonde.hpp"

namespace domset {
namespace {

std::string indexed(char prefix, std::size_t i, std::size_t s) {
  return std::string(1, prefix) + std::to_string(i + 1) + "^" + std::to_string(s + 1);
}

void require_vertices(const BipartiteGraph& b) {
  if (b.vertex_count() == 0) {
    throw InvalidInput(ErrorKind::kInvalidParameter, "bipartite graph has no vertices");
  }
}

ReductionOutcome solve_for_covers(std::vector<BigCount> values) {
  ReductionOutcome out;
  out.z = vandermonde_solve(reduction_system(values));
  out.edge_covers = out.z.back();
  out.ds_values = std::move(values);
  return out;
}

}  // namespace

ReductionInstance build_reduction(const BipartiteGraph& b, unsigned r) {
  if (r < 1) throw InvalidInput(ErrorKind::kInvalidParameter, "copy count r must be at least 1");
  require_vertices(b);
  const auto edges = b.edges();
  const std::size_t nx = b.nx();
  const std::size_t ny = b.ny();

  ReductionInstance inst;
  inst.r = r;
  VertexId next = 0;
  for (const auto& [i, j] : edges) {
    inst.q_vertices.push_back(next++);
    inst.vertex_labels.push_back("e" + std::to_string(i + 1) + "," + std::to_string(j + 1));
  }
  inst.x_vertices.assign(nx, {});
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t s = 0; s < r; ++s) {
      inst.x_vertices[i].push_back(next++);
      inst.vertex_labels.push_back(indexed('x', i, s));
    }
  }
  inst.y_vertices.assign(ny, {});
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t s = 0; s < r; ++s) {
      inst.y_vertices[j].push_back(next++);
      inst.vertex_labels.push_back(indexed('y', j, s));
    }
  }

  std::vector<std::vector<VertexId>> incident_x(nx);
  std::vector<std::vector<VertexId>> incident_y(ny);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident_x[edges[e].first].push_back(inst.q_vertices[e]);
    incident_y[edges[e].second].push_back(inst.q_vertices[e]);
  }

  auto& nodes = inst.tree.nodes;
  NodeId next_node = 0;
  inst.q_node = next_node++;
  nodes.push_back(NodeRecord{inst.q_node, inst.q_vertices, {}});
  inst.node_labels.push_back("Q");
  inst.k_nodes.assign(nx, {});
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t s = 0; s < r; ++s) {
      std::vector<VertexId> vs{inst.x_vertices[i][s]};
      vs.insert(vs.end(), incident_x[i].begin(), incident_x[i].end());
      inst.k_nodes[i].push_back(next_node);
      nodes.push_back(NodeRecord{next_node++, std::move(vs), {}});
      inst.node_labels.push_back(indexed('K', i, s));
    }
  }
  inst.h_nodes.assign(ny, {});
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t s = 0; s < r; ++s) {
      std::vector<VertexId> vs{inst.y_vertices[j][s]};
      vs.insert(vs.end(), incident_y[j].begin(), incident_y[j].end());
      inst.h_nodes[j].push_back(next_node);
      nodes.push_back(NodeRecord{next_node++, std::move(vs), {}});
      inst.node_labels.push_back(indexed('H', j, s));
    }
  }
  // Node id equals its position in `nodes`.
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t s = r; s-- > 1;) nodes[inst.k_nodes[i][s]].children.push_back(inst.k_nodes[i][s - 1]);
    nodes[inst.k_nodes[i][0]].children.push_back(inst.q_node);
  }
  for (std::size_t j = 0; j < ny; ++j) {
    nodes[inst.q_node].children.push_back(inst.h_nodes[j][0]);
    for (std::size_t s = 0; s + 1 < r; ++s) nodes[inst.h_nodes[j][s]].children.push_back(inst.h_nodes[j][s + 1]);
  }
  inst.tree.root = nx > 0 ? inst.k_nodes[0][r - 1] : inst.q_node;

  // G^r is the union of the node cliques.
  std::vector<Edge> graph_edges;
  for (const auto& rec : nodes) {
    for (std::size_t a = 0; a < rec.vertices.size(); ++a) {
      for (std::size_t c = a + 1; c < rec.vertices.size(); ++c) {
        graph_edges.emplace_back(std::min(rec.vertices[a], rec.vertices[c]),
                                 std::max(rec.vertices[a], rec.vertices[c]));
      }
    }
  }
  std::sort(graph_edges.begin(), graph_edges.end());
  graph_edges.erase(std::unique(graph_edges.begin(), graph_edges.end()), graph_edges.end());
  inst.graph = build_graph(next, graph_edges);
  return inst;
}

ReductionOutcome edge_covers_via_reduction(const BipartiteGraph& b) {
  require_vertices(b);
  const std::size_t unknowns = b.vertex_count() + 1;
  std::vector<BigCount> values;
  for (unsigned r = 1; r <= unknowns; ++r) values.push_back(split_count_ds(b, r));
  return solve_for_covers(std::move(values));
}

ReductionOutcome edge_covers_via_reduction(const BipartiteGraph& b, const GraphCounter& count) {
  require_vertices(b);
  const std::size_t unknowns = b.vertex_count() + 1;
  std::vector<BigCount> values;
  for (unsigned r = 1; r <= unknowns; ++r) values.push_back(count(build_reduction(b, r).graph));
  return solve_for_covers(std::move(values));
}

}  // namespace domset
