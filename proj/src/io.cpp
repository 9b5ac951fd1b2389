#include "zagreb/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace zagreb {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (end == text.size() && line.empty() && !lines.empty()) break;  // trailing newline
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_blank(std::string_view line) { return split_tokens(line).empty(); }

std::uint64_t parse_count(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

void append_order(std::string& out, std::uint64_t n) {
  auto six = [](std::uint64_t value, int shift) { return static_cast<char>(((value >> shift) & 63) + 63); };
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += six(n, shift);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += six(n, shift);
  }
}

}  // namespace

GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  throw std::invalid_argument("unknown graph format: " + name);
}

GraphFormat format_for_path(const std::string& path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with(".g6") || ends_with(".graph6") ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && is_blank(lines[i])) ++i;
  if (i == lines.size()) throw ParseError(1, "missing 'n m' header");

  auto header = split_tokens(lines[i]);
  if (header.size() != 2) throw ParseError(i + 1, "header must be 'n m'");
  std::uint64_t n = parse_count(header[0], i + 1);
  std::uint64_t m = parse_count(header[1], i + 1);
  if (n > UINT32_MAX) throw ParseError(i + 1, "too many vertices");

  GraphBuilder builder(n);
  std::uint64_t read = 0;
  for (++i; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    std::size_t line_no = i + 1;
    if (read == m) throw ParseError(line_no, "more edge lines than the header's m = " + std::to_string(m));
    auto tokens = split_tokens(lines[i]);
    if (tokens.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    std::uint64_t u = parse_count(tokens[0], line_no);
    std::uint64_t v = parse_count(tokens[1], line_no);
    if (u >= n || v >= n) throw ParseError(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
    try {
      builder.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    ++read;
  }
  if (read != m) {
    throw ParseError(lines.size(), "expected " + std::to_string(m) + " edges, found " + std::to_string(read));
  }
  return std::move(builder).build();
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string encode_graph6(const Graph& g) {
  std::string out;
  append_order(out, g.order());
  int filled = 0;
  unsigned acc = 0;
  for (Vertex v = 1; v < g.order(); ++v) {
    auto nbrs = g.neighbors(v);  // sorted
    std::size_t next = 0;
    for (Vertex u = 0; u < v; ++u) {
      bool edge = next < nbrs.size() && nbrs[next] == u;
      if (edge) ++next;
      acc = (acc << 1) | (edge ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph decode_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  for (char c : line) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
  }
  if (line.empty()) throw std::invalid_argument("graph6: empty line");

  std::size_t pos = 0;
  auto take = [&](int count) {
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= line.size()) throw std::invalid_argument("graph6: truncated vertex count");
      value = (value << 6) | static_cast<std::uint64_t>(line[pos++] - 63);
    }
    return value;
  };
  std::uint64_t n = 0;
  if (line[0] != '~') {
    n = take(1);
  } else if (line.size() > 1 && line[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > UINT32_MAX) throw std::invalid_argument("graph6: too many vertices");

  std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  std::uint64_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw std::invalid_argument("graph6: expected " + std::to_string(bytes) + " adjacency bytes, got " +
                                std::to_string(line.size() - pos));
  }
  GraphBuilder b(n);
  std::uint64_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      unsigned byte = static_cast<unsigned>(line[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1u) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::vector<Graph> parse_graph6_file(std::string_view text) {
  std::vector<Graph> out;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const std::invalid_argument& e) {
      throw ParseError(i + 1, e.what());
    }
  }
  return out;
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Graph6) return parse_graph6_file(text);
  std::vector<Graph> out;
  out.push_back(parse_edge_list(text));
  return out;
}

std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? encode_graph6(g) + "\n" : write_edge_list(g);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

const std::string& ReportSection::value(const std::string& key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  throw std::out_of_range("report section [" + name + "] has no key " + key);
}

std::vector<std::string> ReportSection::values(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : fields) {
    if (k == key) out.push_back(v);
  }
  return out;
}

ReportSection& Report::add_section(std::string name) {
  sections.push_back({std::move(name), {}});
  return sections.back();
}

std::string to_text(const Report& report) {
  std::string out;
  for (const auto& section : report.sections) {
    out += "[" + section.name + "]\n";
    for (const auto& [key, value] : section.fields) {
      out += key;
      if (!value.empty()) out += " " + value;
      out += "\n";
    }
  }
  return out;
}

Report parse_report(std::string_view text) {
  Report report;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (is_blank(line)) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) throw ParseError(i + 1, "malformed section header");
      report.add_section(std::string(line.substr(1, line.size() - 2)));
      continue;
    }
    if (report.sections.empty()) throw ParseError(i + 1, "field before any section header");
    std::size_t space = line.find(' ');
    std::string key(line.substr(0, space));
    std::string value = space == std::string_view::npos ? std::string() : std::string(line.substr(space + 1));
    report.sections.back().add(std::move(key), std::move(value));
  }
  return report;
}

ReportSection describe_graph(const Graph& g) {
  ZagrebReport z = compare(g);
  ReportSection s{"graph", {}};
  s.add("n", std::to_string(z.n));
  s.add("m", std::to_string(z.m));
  s.add("M1", to_string(z.m1));
  s.add("M2", to_string(z.m2));
  s.add("M1_over_n", to_string(z.first_ratio()));
  s.add("M2_over_m", to_string(z.second_ratio()));
  s.add("verdict", to_string(z.verdict));
  s.add("regularity", to_string(classify_regularity(g)));

  auto degrees = degree_set(g);
  std::string set_text;
  for (Degree d : degrees) set_text += (set_text.empty() ? "" : ",") + std::to_string(d);
  s.add("degree_set", set_text);

  EdgeClassCounts counts = edge_class_counts(g);
  for (const auto& [pair, count] : counts.entries) {
    s.add("edge_class", std::to_string(pair.first) + " " + std::to_string(pair.second) + " " +
                            std::to_string(count));
  }
  s.add("decomposition_sum", to_string(decomposition_sum(counts)));

  IntervalSpec span{degrees.front(), degrees.back() - degrees.front()};
  if (is_good_interval(span)) {
    s.add("good_interval", std::to_string(span.a) + " " + std::to_string(span.upper()));
    s.add("equality_structure", to_string(classify_equality_structure(g, span).verdict));
  } else {
    s.add("good_interval", "none");
    s.add("equality_structure", "none");
  }
  return s;
}

}  // namespace zagreb
