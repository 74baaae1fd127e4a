#include "mintrans/hg_format.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace mintrans {

namespace {

constexpr std::string_view kVerticesDirective = "vertices:";

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string token; in >> token;) line.tokens.push_back(std::move(token));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

class Universe {
 public:
  Universe() = default;
  explicit Universe(const std::vector<std::string>& labels) {
    for (const auto& label : labels) add(label);
  }

  std::optional<VertexId> find(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId add(const std::string& label) {
    const auto [it, inserted] = index_.emplace(label, labels_.size());
    if (inserted) labels_.push_back(label);
    return it->second;
  }

  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::string> labels_;
};

Hypergraph build(const std::vector<Line>& lines, Universe universe, bool fixed, bool has_directive) {
  std::vector<std::vector<VertexId>> edges;
  for (const auto& line : lines) {
    std::vector<VertexId> members;
    if (line.tokens.size() == 1 && line.tokens.front() == "-") {
      edges.push_back(std::move(members));
      continue;
    }
    for (const auto& token : line.tokens) {
      VertexId v;
      if (fixed) {
        const auto found = universe.find(token);
        if (!found) throw ParseError(line.number, "vertex '" + token + "' is not in the declared universe");
        v = *found;
      } else {
        v = universe.add(token);
      }
      if (std::find(members.begin(), members.end(), v) != members.end()) {
        throw ParseError(line.number, "vertex '" + token + "' repeated within an edge");
      }
      members.push_back(v);
    }
    edges.push_back(std::move(members));
  }
  if (edges.empty() && !has_directive && !fixed) throw ParseError(0, "no edges and no vertices: directive");

  const std::size_t n = universe.labels().size();
  Family family;
  family.reserve(edges.size());
  for (const auto& members : edges) family.emplace_back(n, std::span<const VertexId>(members));
  return Hypergraph(n, std::move(family), universe.labels());
}

bool is_directive(const Line& line) { return line.tokens.front().starts_with(kVerticesDirective); }

// Tokens of a `vertices:` line, allowing "vertices:a b" as well as "vertices: a b".
std::vector<std::string> directive_tokens(const Line& line) {
  std::vector<std::string> tokens(line.tokens.begin() + 1, line.tokens.end());
  const std::string& head = line.tokens.front();
  if (head.size() > kVerticesDirective.size()) tokens.insert(tokens.begin(), head.substr(kVerticesDirective.size()));
  return tokens;
}

void check_distinct(const Line& line, const std::vector<std::string>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (tokens[i] == tokens[j]) throw ParseError(line.number, "vertex '" + tokens[i] + "' declared twice");
    }
  }
}

}  // namespace

Hypergraph parse_hg(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "empty input: no edges and no vertices: directive");
  if (!is_directive(lines.front())) return build(lines, Universe{}, false, false);

  const auto declared = directive_tokens(lines.front());
  check_distinct(lines.front(), declared);
  lines.erase(lines.begin());
  for (const auto& line : lines) {
    if (is_directive(line)) throw ParseError(line.number, "vertices: must be the first directive");
  }
  return build(lines, Universe(declared), true, true);
}

Hypergraph parse_hg(std::string_view text, const Hypergraph& universe) {
  std::vector<std::string> labels;
  for (VertexId v = 0; v < universe.universe_size(); ++v) labels.push_back(universe.label(v));
  const Universe known(labels);

  std::vector<Line> lines = tokenize(text);
  if (!lines.empty() && is_directive(lines.front())) {
    for (const auto& token : directive_tokens(lines.front())) {
      if (!known.find(token)) {
        throw ParseError(lines.front().number, "vertex '" + token + "' is not in the reference universe");
      }
    }
    lines.erase(lines.begin());
  }
  return build(lines, known, true, true);
}

std::string format_set(const Hypergraph& h, const VertexSet& s) {
  if (s.empty()) return "-";
  std::string out;
  s.for_each([&](VertexId v) {
    if (!out.empty()) out += ' ';
    out += h.label(v);
  });
  return out;
}

std::string serialize_hg(const Hypergraph& h) {
  std::string out(kVerticesDirective);
  for (VertexId v = 0; v < h.universe_size(); ++v) out += ' ' + h.label(v);
  out += '\n';
  for (const auto& e : h.edges()) out += format_set(h, e) + '\n';
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace mintrans
