#include "anonhard/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "anonhard/error.hpp"

namespace anonhard::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string(what) + ": " + e.what());
  }
}

ordered_json edge_list(const CubicGraph& g) {
  auto out = ordered_json::array();
  for (const auto& e : g.edges()) out.push_back({e.u + 1, e.v + 1});
  return out;
}

}  // namespace

void write_rows_csv(std::ostream& out, const std::vector<Row>& rows) {
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << row[c].token();
    }
    out << '\n';
  }
}

std::vector<Row> read_rows_csv(std::istream& in) {
  std::vector<Row> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Row row;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(Symbol::parse(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(ErrorKind::LengthMismatch, "line " + std::to_string(lineno) + " has " +
                                                 std::to_string(row.size()) + " columns, expected " +
                                                 std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string clustering_json(const Clustering& p) {
  return json(p.clusters).dump() + "\n";
}

Clustering parse_clustering(std::string_view text) {
  const auto j = parse_json(text, "clustering");
  if (!j.is_array()) throw Error(ErrorKind::Parse, "clustering: expected an array of arrays");
  Clustering p;
  for (const auto& cluster : j) {
    if (!cluster.is_array()) throw Error(ErrorKind::Parse, "clustering: expected an array of arrays");
    Cluster c;
    for (const auto& row : cluster) {
      if (!row.is_number_unsigned()) {
        throw Error(ErrorKind::Parse, "clustering: row indices must be non-negative integers");
      }
      c.push_back(row.get<std::size_t>());
    }
    p.clusters.push_back(std::move(c));
  }
  return p;
}

std::string cover_json(const VertexCover& cover) {
  std::vector<std::size_t> labels;
  for (auto v : cover.vertices) labels.push_back(v + 1);
  return json(labels).dump() + "\n";
}

VertexCover parse_cover(std::string_view text, std::size_t n) {
  const auto j = parse_json(text, "cover");
  std::vector<std::size_t> vertices;
  try {
    for (auto label : j.get<std::vector<long long>>()) {
      if (label < 1 || static_cast<std::size_t>(label) > n) {
        throw Error(ErrorKind::IndexOutOfRange, "cover vertex " + std::to_string(label));
      }
      vertices.push_back(static_cast<std::size_t>(label - 1));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("cover: ") + e.what());
  }
  return make_cover(std::move(vertices), n);
}

std::string provenance_json(const binary::BinaryInstance& inst) {
  auto rows = ordered_json::array();
  for (std::size_t r = 0; r < inst.provenance().size(); ++r) {
    ordered_json entry;
    entry["row"] = r;
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, binary::CoreEdgeRow>) {
            const auto& e = binary::kCoreEdgeTable[p.edge];
            entry["kind"] = "core";
            entry["gadget"] = p.gadget + 1;
            entry["edge"] = {e.a, e.b};
          } else if constexpr (std::is_same_v<T, binary::JollyRow>) {
            entry["kind"] = "jolly";
            entry["gadget"] = p.gadget + 1;
            entry["docking"] = p.docking;
            entry["copy"] = p.copy;
          } else {
            entry["kind"] = "edge_gadget";
            entry["source_edge"] = p.source_edge + 1;
            entry["ends"] = {{p.gadget_i + 1, p.docking_i}, {p.gadget_j + 1, p.docking_j}};
          }
        },
        inst.provenance(r));
    rows.push_back(std::move(entry));
  }
  return rows.dump(1) + "\n";
}

std::string provenance_json(const width8::Width8Instance& inst) {
  auto rows = ordered_json::array();
  for (std::size_t r = 0; r < inst.provenance().size(); ++r) {
    ordered_json entry;
    entry["row"] = r;
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, width8::VertexRow>) {
            entry["kind"] = "vertex";
            entry["vertex"] = p.vertex + 1;
            entry["h"] = p.h;
          } else if constexpr (std::is_same_v<T, width8::EdgeRow>) {
            entry["kind"] = "edge";
            entry["source_edge"] = p.source_edge + 1;
            entry["ends"] = {p.u + 1, p.v + 1};
          } else {
            entry["kind"] = "free";
            entry["index"] = p.index;
          }
        },
        inst.provenance(r));
    rows.push_back(std::move(entry));
  }
  return rows.dump(1) + "\n";
}

std::string layout_json(const binary::BinaryInstance& inst) {
  const auto& l = inst.layout();
  ordered_json j;
  j["reduction"] = "3abp";
  j["k"] = binary::kAnonymity;
  j["n"] = inst.graph().vertex_count();
  j["m"] = inst.graph().edge_count();
  j["rows"] = inst.instance().size();
  j["width"] = l.width();
  j["blocks"] = {{"vertex", {{"offset", 0}, {"width", l.jolly_block()}}},
                 {"jolly", {{"offset", l.jolly_block()}, {"width", l.edge_block() - l.jolly_block()}}},
                 {"edge", {{"offset", l.edge_block()}, {"width", l.width() - l.edge_block()}}}};
  j["edges"] = edge_list(inst.graph());
  return j.dump(1) + "\n";
}

std::string layout_json(const width8::Width8Instance& inst) {
  ordered_json j;
  j["reduction"] = "4ap8";
  j["k"] = width8::kAnonymity;
  j["n"] = inst.graph().vertex_count();
  j["m"] = inst.graph().edge_count();
  j["rows"] = inst.instance().size();
  j["width"] = width8::kWidth;
  j["block_of_vertex"] = inst.blocks().block;
  j["edges"] = edge_list(inst.graph());
  return j.dump(1) + "\n";
}

Layout parse_layout(std::string_view text) {
  const auto j = parse_json(text, "layout");
  Layout out;
  try {
    out.reduction = j.at("reduction").get<std::string>();
    out.n = j.at("n").get<std::size_t>();
    for (const auto& e : j.at("edges")) {
      const auto u = e.at(0).get<std::size_t>();
      const auto v = e.at(1).get<std::size_t>();
      if (u < 1 || v < 1 || u > out.n || v > out.n) {
        throw Error(ErrorKind::Parse, "layout edge out of range");
      }
      out.edges.push_back({u - 1, v - 1});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("layout: ") + e.what());
  }
  if (out.reduction != "3abp" && out.reduction != "4ap8") {
    throw Error(ErrorKind::Parse, "layout: unknown reduction '" + out.reduction + "'");
  }
  return out;
}

CubicGraph layout_graph(const Layout& layout) { return validate_cubic(layout.n, layout.edges); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << content;
}

}  // namespace anonhard::io
