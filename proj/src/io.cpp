#include "stardec/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "stardec/error.hpp"

namespace stardec {

namespace {

class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  bool next(long long& out) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == text_.size()) return false;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc() || (ptr != end && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw InvalidInput("edge list: expected an integer near offset " + std::to_string(pos_));
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return true;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int checked_vertex(long long v, long long n) {
  if (v < 0 || v >= n) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad field '") + key + "': " + e.what());
  }
}

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Edge edge_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidInput("edge must be a pair");
  return Edge(j[0].get<int>(), j[1].get<int>());
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Tokens tokens(text);
  long long n = 0;
  if (!tokens.next(n)) throw InvalidInput("edge list: missing vertex count");
  if (n < 0 || n > (1LL << 30)) throw InvalidInput("edge list: bad vertex count");
  std::vector<Edge> edges;
  long long u = 0;
  long long v = 0;
  while (tokens.next(u)) {
    if (!tokens.next(v)) throw InvalidInput("edge list: dangling endpoint");
    edges.emplace_back(checked_vertex(u, n), checked_vertex(v, n));
    if (edges.back().u == edges.back().v) throw InvalidInput("edge list: self-loop");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  if (n < 0) throw InvalidInput("graph: negative vertex count");
  std::vector<Edge> edges;
  for (const Json& e : field<Json>(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("graph: edge must be a pair");
    const int a = checked_vertex(e[0].get<long long>(), n);
    const int b = checked_vertex(e[1].get<long long>(), n);
    if (a == b) throw InvalidInput("graph: self-loop");
    edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

Graph parse_graph_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

std::string format_graph_json(const Graph& g) { return graph_to_json(g).dump() + "\n"; }

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Graph read_graph(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool json = path.extension() == ".json" || (first != std::string::npos && text[first] == '{');
  return json ? parse_graph_json(text) : parse_edge_list(text);
}

void write_graph(const std::filesystem::path& path, const Graph& g) {
  write_text(path, path.extension() == ".json" ? format_graph_json(g) : format_edge_list(g));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const StarDecomposition& d) {
  Json stars = Json::array();
  for (const Star& s : d.stars) stars.push_back(Json{{"center", s.center}, {"leaves", s.leaves}});
  return Json{{"k", d.k}, {"stars", std::move(stars)}};
}

StarDecomposition decomposition_from_json(const Json& j) {
  StarDecomposition d;
  d.k = field<int>(j, "k");
  for (const Json& s : field<Json>(j, "stars")) {
    d.stars.push_back({field<int>(s, "center"), field<std::vector<Vertex>>(s, "leaves")});
  }
  return d;
}

Json to_json(const DeficiencyWitness& w) {
  return Json{{"T", w.T}, {"delta_plus", w.delta_plus}, {"delta_minus", w.delta_minus}, {"delta", w.delta}};
}

DeficiencyWitness witness_from_json(const Json& j) {
  DeficiencyWitness w;
  w.T = field<std::vector<Vertex>>(j, "T");
  w.delta_plus = field<std::int64_t>(j, "delta_plus");
  w.delta_minus = field<std::int64_t>(j, "delta_minus");
  w.delta = field<std::int64_t>(j, "delta");
  if (w.delta != w.delta_plus - w.delta_minus) throw InvalidInput("witness: delta != delta_plus - delta_minus");
  return w;
}

Json to_json(const SearchTranscript& t) {
  Json j{{"nodes_explored", t.nodes_explored}, {"outcome", std::string(to_string(t.outcome))}};
  if (t.decomposition) j["decomposition"] = to_json(*t.decomposition);
  if (t.seed) j["seed"] = *t.seed;
  return j;
}

SearchTranscript transcript_from_json(const Json& j) {
  SearchTranscript t;
  t.nodes_explored = field<std::uint64_t>(j, "nodes_explored");
  t.outcome = search_outcome_from_string(field<std::string>(j, "outcome"));
  if (j.contains("decomposition")) t.decomposition = decomposition_from_json(j.at("decomposition"));
  if (j.contains("seed")) t.seed = field<std::uint64_t>(j, "seed");
  if ((t.outcome == SearchOutcome::kFound) != t.decomposition.has_value()) {
    throw InvalidInput("transcript: decomposition present iff found");
  }
  return t;
}

Json to_json(const Rejection& r) {
  Json j{{"s", r.s}, {"reason", std::string(to_string(r.reason))}};
  if (r.required) j["required"] = *r.required;
  if (r.alpha) j["alpha"] = *r.alpha;
  if (r.edge) j["edge"] = edge_json(*r.edge);
  if (r.nodes) j["nodes"] = *r.nodes;
  return j;
}

Rejection rejection_from_json(const Json& j) {
  Rejection r;
  r.s = field<int>(j, "s");
  r.reason = rejection_reason_from_string(field<std::string>(j, "reason"));
  if (j.contains("required")) r.required = field<std::int64_t>(j, "required");
  if (j.contains("alpha")) r.alpha = field<int>(j, "alpha");
  if (j.contains("edge")) r.edge = edge_from_json(j.at("edge"));
  if (j.contains("nodes")) r.nodes = field<std::uint64_t>(j, "nodes");
  return r;
}

Json to_json(const EmbeddingCertificate& c) {
  Json rejections = Json::array();
  for (const Rejection& r : c.rejections) rejections.push_back(to_json(r));
  return Json{{"k", c.k},
              {"n", c.n},
              {"s", c.s},
              {"method", std::string(to_string(c.method))},
              {"minimality", std::string(to_string(c.minimality))},
              {"greedy_stars", c.greedy_stars},
              {"rejections", std::move(rejections)},
              {"decomposition", to_json(c.decomposition)}};
}

EmbeddingCertificate certificate_from_json(const Json& j) {
  EmbeddingCertificate c;
  c.k = field<int>(j, "k");
  c.n = field<int>(j, "n");
  c.s = field<int>(j, "s");
  c.method = embed_method_from_string(field<std::string>(j, "method"));
  c.minimality = minimality_from_string(field<std::string>(j, "minimality"));
  c.greedy_stars = field<int>(j, "greedy_stars");
  for (const Json& r : field<Json>(j, "rejections")) c.rejections.push_back(rejection_from_json(r));
  c.decomposition = decomposition_from_json(field<Json>(j, "decomposition"));
  return c;
}

std::string to_dot(const Graph& g, const StarDecomposition& d) {
  static constexpr std::string_view kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                  "#9467bd", "#8c564b", "#e377c2", "#17becf",
                                                  "#bcbd22", "#7f7f7f"};
  constexpr std::size_t kColours = std::size(kPalette);
  std::vector<char> drawn(static_cast<std::size_t>(g.size()), 0);
  std::string out = "graph stars {\n  node [shape=circle];\n";
  for (Vertex x = 0; x < g.order(); ++x) out += "  " + std::to_string(x) + ";\n";
  for (std::size_t i = 0; i < d.stars.size(); ++i) {
    const Star& s = d.stars[i];
    const std::string colour(kPalette[i % kColours]);
    for (Vertex leaf : s.leaves) {
      const std::int64_t idx = g.edge_index(s.center, leaf);
      if (idx >= 0) drawn[idx] = 1;
      out += "  " + std::to_string(s.center) + " -- " + std::to_string(leaf) + " [color=\"" + colour +
             "\", penwidth=2, label=\"" + std::to_string(i) + "\"];\n";
    }
  }
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (drawn[i]) continue;
    out += "  " + std::to_string(edges[i].u) + " -- " + std::to_string(edges[i].v) +
           " [color=\"#cccccc\", style=dashed];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace stardec
