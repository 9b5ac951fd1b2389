#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/intervals.hpp"
#include "zagreb/invariants.hpp"

namespace zagreb {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class GraphFormat { EdgeList, Graph6 };

GraphFormat parse_format(const std::string& name);  // "edgelist" | "graph6"
/// ".g6" files are graph6, everything else an edge list.
GraphFormat format_for_path(const std::string& path);

/// "n m" header, then m lines "u v" with 0-based endpoints. Blank lines
/// are skipped.
Graph parse_edge_list(std::string_view text);
/// Canonical form: header, then edges with u < v in ascending order.
std::string write_edge_list(const Graph& g);

std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view line);
/// One graph per non-empty line; an optional ">>graph6<<" prefix is skipped.
std::vector<Graph> parse_graph6_file(std::string_view text);

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Ordered "key value" lines under a "[name]" header. Keys may repeat.
struct ReportSection {
  std::string name;
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  /// First value for `key`; throws std::out_of_range when absent.
  const std::string& value(const std::string& key) const;
  std::vector<std::string> values(const std::string& key) const;

  friend bool operator==(const ReportSection&, const ReportSection&) = default;
};

struct Report {
  std::vector<ReportSection> sections;

  ReportSection& add_section(std::string name);

  friend bool operator==(const Report&, const Report&) = default;
};

std::string to_text(const Report& report);
Report parse_report(std::string_view text);

/// Everything computed for one graph: n, m, M1, M2, both ratios as exact
/// fractions, verdict, regularity, degree set, the m_{i,j} table, the
/// decomposition sum and (when the degree span is a good interval) the
/// equality structure.
ReportSection describe_graph(const Graph& g);

}  // namespace zagreb
