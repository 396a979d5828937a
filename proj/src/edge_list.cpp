#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "sgd/core.hpp"

namespace sgd {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <class T>
bool parse_number(std::string_view tok, T& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::optional<Sign> parse_sign(std::string_view tok) {
  if (tok == "+" || tok == "1") return Sign::positive;
  if (tok == "-" || tok == "-1") return Sign::negative;
  return std::nullopt;
}

}  // namespace

WeightedSignedGraph parse_edge_list(std::istream& in) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::vector<double> weights;
  std::map<std::pair<int, int>, std::size_t> first_seen;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto tokens = split_ws(raw);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!n) {
      int count = 0;
      if (tokens.size() != 1 || !parse_number(tokens[0], count))
        throw ParseError(lineno, "expected the vertex count on its own line");
      if (count < 1) throw ParseError(lineno, "vertex count must be positive");
      n = count;
      continue;
    }

    if (tokens.size() < 3 || tokens.size() > 4)
      throw ParseError(lineno, "malformed edge line, expected \"u v s [w]\"");
    int u = 0, v = 0;
    if (!parse_number(tokens[0], u) || !parse_number(tokens[1], v))
      throw ParseError(lineno, "vertex labels must be integers");
    if (u < 1 || u > *n || v < 1 || v > *n)
      throw ParseError(lineno, "vertex label outside 1.." + std::to_string(*n));
    if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
    const auto sign = parse_sign(tokens[2]);
    if (!sign)
      throw ParseError(lineno, "sign token \"" + std::string(tokens[2]) +
                                   "\" is not one of +, -, 1, -1");
    double w = 1.0;
    if (tokens.size() == 4) {
      if (!parse_number(tokens[3], w) || !std::isfinite(w))
        throw ParseError(lineno, "weight \"" + std::string(tokens[3]) + "\" is not a number");
      if (w <= 0.0) throw ParseError(lineno, "nonpositive weight");
    }
    const auto key = std::minmax(u, v);
    if (auto [it, fresh] = first_seen.emplace(key, lineno); !fresh)
      throw ParseError(lineno, "duplicate edge " + std::to_string(key.first) + "-" +
                                   std::to_string(key.second) + " (first on line " +
                                   std::to_string(it->second) + ")");
    edges.push_back({u - 1, v - 1, *sign});
    weights.push_back(w);
  }
  if (!n) throw ParseError(0, "missing vertex count");
  return WeightedSignedGraph(SignedGraph(*n, std::move(edges)), std::move(weights));
}

WeightedSignedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

WeightedSignedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_edge_list(in);
}

std::string serialize_edge_list(const WeightedSignedGraph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  char buf[64];
  for (int e = 0; e < g.size(); ++e) {
    const Edge& edge = g.base().edge(e);
    out += std::to_string(edge.u + 1);
    out += ' ';
    out += std::to_string(edge.v + 1);
    out += ' ';
    out += to_char(edge.sign);
    if (const double w = g.weight(e); w != 1.0) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
      out += ' ';
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sgd
