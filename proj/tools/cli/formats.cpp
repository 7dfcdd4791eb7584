#include "cli/formats.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace domset::cli {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& path, const std::string& what) {
  throw FormatError(where + ": " + (path.empty() ? "/" : path) + ": " + what);
}

std::uint64_t as_index(const Json& value, const std::string& where, const std::string& path,
                       std::uint64_t max = std::numeric_limits<std::uint32_t>::max()) {
  if (!value.is_number_integer()) fail(where, path, "expected a nonnegative integer");
  if (value.is_number_unsigned()) {
    const auto v = value.get<std::uint64_t>();
    if (v > max) fail(where, path, "integer " + std::to_string(v) + " too large");
    return v;
  }
  const auto v = value.get<std::int64_t>();
  if (v < 0) fail(where, path, "expected a nonnegative integer, got " + std::to_string(v));
  if (static_cast<std::uint64_t>(v) > max) fail(where, path, "integer " + std::to_string(v) + " too large");
  return static_cast<std::uint64_t>(v);
}

const Json& field(const Json& obj, const char* key, const std::string& where, const std::string& path) {
  if (!obj.is_object()) fail(where, path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, path, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& obj, const char* key, const std::string& where,
                        const std::string& path) {
  const Json& value = field(obj, key, where, path);
  if (!value.is_array()) fail(where, path + "/" + key, "expected an array");
  return value;
}

std::pair<std::uint64_t, std::uint64_t> as_pair(const Json& value, const std::string& where,
                                                const std::string& path) {
  if (!value.is_array() || value.size() != 2) fail(where, path, "expected a pair [a, b]");
  return {as_index(value[0], where, path + "/0"), as_index(value[1], where, path + "/1")};
}

const Json& unwrap(const Json& doc, const char* key) {
  if (doc.is_object() && doc.contains(key) && doc[key].is_object()) return doc[key];
  return doc;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  std::stringstream text;
  text << in.rdbuf();
  try {
    return Json::parse(text.str());
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

Graph graph_from_json(const Json& doc, const std::string& where) {
  const Json& g = unwrap(doc, "graph");
  const auto n = as_index(field(g, "n", where, ""), where, "/n");
  const Json& list = array_field(g, "edges", where, "");
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const auto [u, v] = as_pair(list[e], where, "/edges/" + std::to_string(e));
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return build_graph(n, edges);
}

TreeSpec tree_from_json(const Json& doc, const std::string& where) {
  const Json& t = unwrap(doc, "tree");
  TreeSpec spec;
  spec.root = static_cast<NodeId>(as_index(field(t, "root", where, ""), where, "/root"));
  const Json& nodes = array_field(t, "nodes", where, "");
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const std::string at = "/nodes/" + std::to_string(k);
    NodeRecord rec;
    rec.id = static_cast<NodeId>(as_index(field(nodes[k], "id", where, at), where, at + "/id"));
    const Json& vs = array_field(nodes[k], "vertices", where, at);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      rec.vertices.push_back(static_cast<VertexId>(as_index(vs[i], where, at + "/vertices/" + std::to_string(i))));
    }
    const Json& cs = array_field(nodes[k], "children", where, at);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      rec.children.push_back(static_cast<NodeId>(as_index(cs[i], where, at + "/children/" + std::to_string(i))));
    }
    spec.nodes.push_back(std::move(rec));
  }
  return spec;
}

BipartiteGraph bipartite_from_json(const Json& doc, const std::string& where) {
  const Json& b = unwrap(doc, "bipartite");
  const auto nx = as_index(field(b, "nx", where, ""), where, "/nx");
  const auto ny = as_index(field(b, "ny", where, ""), where, "/ny");
  const Json& list = array_field(b, "edges", where, "");
  std::vector<BipartiteEdge> edges;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const auto [i, j] = as_pair(list[e], where, "/edges/" + std::to_string(e));
    edges.emplace_back(i, j);
  }
  return build_bipartite(nx, ny, edges);
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Json to_json(const TreeSpec& tree) {
  Json nodes = Json::array();
  for (const auto& rec : tree.nodes) {
    nodes.push_back(Json{{"id", rec.id}, {"vertices", rec.vertices}, {"children", rec.children}});
  }
  return Json{{"root", tree.root}, {"nodes", std::move(nodes)}};
}

Json to_json(const BipartiteGraph& b) {
  Json edges = Json::array();
  for (const auto& [i, j] : b.edges()) edges.push_back({i, j});
  return Json{{"nx", b.nx()}, {"ny", b.ny()}, {"edges", std::move(edges)}};
}

Json bundle_json(const Graph& g, const TreeSpec& tree) {
  return Json{{"graph", to_json(g)}, {"tree", to_json(tree)}};
}

Json reduction_json(const ReductionInstance& inst) {
  Json doc = bundle_json(inst.graph, inst.tree);
  for (auto& node : doc["tree"]["nodes"]) {
    node["label"] = inst.node_labels.at(node["id"].get<std::size_t>());
  }
  doc["r"] = inst.r;
  doc["labels"] = inst.vertex_labels;
  doc["q_vertices"] = inst.q_vertices;
  doc["x_vertices"] = inst.x_vertices;
  doc["y_vertices"] = inst.y_vertices;
  doc["q_node"] = inst.q_node;
  return doc;
}

}  // namespace domset::cli
