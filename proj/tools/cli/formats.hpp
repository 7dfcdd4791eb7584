#ifndef DOMSET_CLI_FORMATS_HPP
#define DOMSET_CLI_FORMATS_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "domset/clique_tree.hpp"
#include "domset/graph.hpp"
#include "domset/reduction.hpp"

namespace domset::cli {

using Json = nlohmann::json;

/// Unreadable file, malformed JSON, or a field of the wrong shape. The
/// message starts with the file name and a JSON path or line/column.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);

// Decoders accept either the bare document or a bundle holding it under
// "graph" / "tree". `where` prefixes diagnostics.
Graph graph_from_json(const Json& doc, const std::string& where);
TreeSpec tree_from_json(const Json& doc, const std::string& where);
BipartiteGraph bipartite_from_json(const Json& doc, const std::string& where);

Json to_json(const Graph& g);
Json to_json(const TreeSpec& tree);
Json to_json(const BipartiteGraph& b);
Json bundle_json(const Graph& g, const TreeSpec& tree);
Json reduction_json(const ReductionInstance& inst);

}  // namespace domset::cli

#endif  // DOMSET_CLI_FORMATS_HPP
