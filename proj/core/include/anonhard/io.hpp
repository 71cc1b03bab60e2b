#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "anonhard/binary_reduction.hpp"
#include "anonhard/graphs.hpp"
#include "anonhard/table.hpp"
#include "anonhard/width8_reduction.hpp"

namespace anonhard::io {

/// One row per line, symbol tokens separated by commas.
void write_rows_csv(std::ostream& out, const std::vector<Row>& rows);
/// Blank lines are skipped; throws Parse on bad tokens and LengthMismatch on
/// ragged rows.
std::vector<Row> read_rows_csv(std::istream& in);

/// Compact JSON array of arrays of zero-based row indices, e.g. [[0,1],[2]].
std::string clustering_json(const Clustering& p);
Clustering parse_clustering(std::string_view text);

/// JSON array of 1-based vertex labels.
std::string cover_json(const VertexCover& cover);
VertexCover parse_cover(std::string_view text, std::size_t n);

std::string provenance_json(const binary::BinaryInstance& inst);
std::string provenance_json(const width8::Width8Instance& inst);

/// Reduction name, parameters and the source graph (1-based edges), enough
/// to rebuild the instance.
std::string layout_json(const binary::BinaryInstance& inst);
std::string layout_json(const width8::Width8Instance& inst);

struct Layout {
  std::string reduction;  // "3abp" or "4ap8"
  std::size_t n = 0;
  std::vector<Edge> edges;  // 0-based
};

Layout parse_layout(std::string_view text);
CubicGraph layout_graph(const Layout& layout);

std::string read_file(const std::string& path);
/// Truncates and writes.
void write_file(const std::string& path, std::string_view content);

}  // namespace anonhard::io
