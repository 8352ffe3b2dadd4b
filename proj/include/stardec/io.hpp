#pragma once

// Text formats. Graphs: an edge list ("n" then one "u v" per line) or JSON
// {"n":..,"edges":[[u,v],..]}. Every JSON artifact has a reader that inverts
// its writer exactly.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "stardec/embedder.hpp"
#include "stardec/graph.hpp"
#include "stardec/oracle.hpp"
#include "stardec/star_solver.hpp"

namespace stardec {

using Json = nlohmann::ordered_json;

Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

Graph parse_graph_json(std::string_view text);
std::string format_graph_json(const Graph& g);

// JSON when the path ends in .json or the content starts with '{'.
Graph read_graph(const std::filesystem::path& path);
void write_graph(const std::filesystem::path& path, const Graph& g);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const StarDecomposition& d);
StarDecomposition decomposition_from_json(const Json& j);

Json to_json(const DeficiencyWitness& w);
DeficiencyWitness witness_from_json(const Json& j);

Json to_json(const SearchTranscript& t);
SearchTranscript transcript_from_json(const Json& j);

Json to_json(const Rejection& r);
Rejection rejection_from_json(const Json& j);

Json to_json(const EmbeddingCertificate& c);
EmbeddingCertificate certificate_from_json(const Json& j);

// Stars as coloured edge groups; edges outside every star are drawn grey.
std::string to_dot(const Graph& g, const StarDecomposition& d);

}  // namespace stardec
