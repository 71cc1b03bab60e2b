#include <algorithm>
#include <limits>
#include <sstream>
#include <thread>

#include "anonhard/binary_reduction.hpp"
#include "anonhard/error.hpp"

namespace anonhard::binary {

namespace {

void check_gadget(const BlockLayout& layout, std::size_t gadget) {
  if (gadget >= layout.n) {
    throw Error(ErrorKind::IndexOutOfRange, "gadget " + std::to_string(gadget) +
                                                " outside 0.." + std::to_string(layout.n - 1));
  }
}

void check_width(const BlockLayout& layout, const Row& row) {
  if (row.size() != layout.width()) {
    throw Error(ErrorKind::LengthMismatch, "row of length " + std::to_string(row.size()) +
                                               ", layout expects " +
                                               std::to_string(layout.width()));
  }
}

void set_ones(Row& row, std::size_t first, std::size_t count) {
  for (std::size_t c = first; c < first + count; ++c) row[c] = Symbol::bit(true);
}

}  // namespace

std::array<int, 2> docking_neighbors(int docking) {
  switch (docking) {
    case 1: return {4, 7};
    case 2: return {4, 5};
    case 3: return {5, 7};
    default:
      throw Error(ErrorKind::IndexOutOfRange, "docking vertex " + std::to_string(docking));
  }
}

std::vector<std::size_t> core_edges_at(int core_vertex) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < kCoreEdges; ++e) {
    if (kCoreEdgeTable[e].a == core_vertex || kCoreEdgeTable[e].b == core_vertex) out.push_back(e);
  }
  return out;
}

Row encode_vertex(const BlockLayout& layout, std::size_t gadget, int core_vertex, Row row) {
  check_gadget(layout, gadget);
  check_width(layout, row);
  if (core_vertex < 1 || core_vertex > static_cast<int>(kCoreVertices)) {
    throw Error(ErrorKind::IndexOutOfRange, "core vertex " + std::to_string(core_vertex));
  }
  set_ones(row, layout.vertex_block(gadget) + 3 * static_cast<std::size_t>(core_vertex - 1), 3);
  return row;
}

Row encode_gadget(const BlockLayout& layout, std::size_t gadget, Row row) {
  check_gadget(layout, gadget);
  check_width(layout, row);
  set_ones(row, layout.edge_block() + 3 * gadget, 3);
  return row;
}

Row encode_jolly(const BlockLayout& layout, std::size_t gadget, int docking, Row row) {
  check_gadget(layout, gadget);
  check_width(layout, row);
  if (docking < 1 || docking > static_cast<int>(kDockingVertices)) {
    throw Error(ErrorKind::IndexOutOfRange, "docking vertex " + std::to_string(docking));
  }
  set_ones(row, layout.jolly_block() + 6 * gadget + static_cast<std::size_t>(docking - 1), 2);
  return row;
}

std::string describe(const Provenance& p) {
  std::ostringstream out;
  std::visit(
      [&](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, CoreEdgeRow>) {
          const auto& e = kCoreEdgeTable[r.edge];
          out << "core(" << r.gadget + 1 << ",c" << e.a << ",c" << e.b << ")";
        } else if constexpr (std::is_same_v<T, JollyRow>) {
          out << "jolly(" << r.gadget + 1 << ",c" << r.docking << ",#" << r.copy << ")";
        } else {
          out << "edge-gadget(" << r.gadget_i + 1 << ".c" << r.docking_i << "," << r.gadget_j + 1
              << ".c" << r.docking_j << ")";
        }
      },
      p);
  return out.str();
}

BinaryInstance::BinaryInstance(const CubicGraph& graph)
    : graph_(graph),
      layout_{graph.vertex_count()},
      gadgets_{},
      provenance_{},
      instance_([this] {
        const std::size_t n = graph_.vertex_count();
        gadgets_.n = n;
        gadgets_.docking.resize(n);
        std::vector<std::array<int, 2>> dock_of_edge(graph_.edge_count());
        for (std::size_t v = 0; v < n; ++v) {
          auto incident = graph_.incident_edges(v);
          for (std::size_t slot = 0; slot < kDockingVertices; ++slot) {
            gadgets_.docking[v][slot] = incident[slot];
            const auto& e = graph_.edges()[incident[slot]];
            dock_of_edge[incident[slot]][e.u == v ? 0 : 1] = static_cast<int>(slot + 1);
          }
        }
        for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
          const auto& edge = graph_.edges()[e];
          gadgets_.edge_gadgets.push_back(
              EdgeGadgetRow{e, edge.u, dock_of_edge[e][0], edge.v, dock_of_edge[e][1]});
        }

        const Row zero(layout_.width(), Symbol::bit(false));
        std::vector<Row> rows;
        rows.reserve(kRowsPerGadget * n + graph_.edge_count());
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t ce = 0; ce < kCoreEdges; ++ce) {
            const auto& e = kCoreEdgeTable[ce];
            rows.push_back(encode_gadget(layout_, i,
                                         encode_vertex(layout_, i, e.b,
                                                       encode_vertex(layout_, i, e.a, zero))));
            provenance_.emplace_back(CoreEdgeRow{i, ce});
          }
          for (int x = 1; x <= static_cast<int>(kDockingVertices); ++x) {
            auto [y, z] = docking_neighbors(x);
            Row jolly = encode_jolly(
                layout_, i, x,
                encode_gadget(layout_, i,
                              encode_vertex(layout_, i, z,
                                            encode_vertex(layout_, i, y,
                                                          encode_vertex(layout_, i, x, zero)))));
            for (int copy = 1; copy <= static_cast<int>(kJollyCopies); ++copy) {
              rows.push_back(jolly);
              provenance_.emplace_back(JollyRow{i, x, copy});
            }
          }
        }
        for (const auto& eg : gadgets_.edge_gadgets) {
          rows.push_back(encode_gadget(
              layout_, eg.gadget_j,
              encode_gadget(layout_, eg.gadget_i,
                            encode_vertex(layout_, eg.gadget_j, eg.docking_j,
                                          encode_vertex(layout_, eg.gadget_i, eg.docking_i, zero)))));
          provenance_.emplace_back(eg);
        }
        return Instance(std::move(rows), kAnonymity);
      }()) {}

std::size_t BinaryInstance::core_row(std::size_t gadget, std::size_t core_edge) const {
  return kRowsPerGadget * gadget + core_edge;
}

std::size_t BinaryInstance::jolly_row(std::size_t gadget, int docking, int copy) const {
  return kRowsPerGadget * gadget + kCoreEdges +
         kJollyCopies * static_cast<std::size_t>(docking - 1) + static_cast<std::size_t>(copy - 1);
}

std::size_t BinaryInstance::edge_gadget_row(std::size_t source_edge) const {
  return kRowsPerGadget * layout_.n + source_edge;
}

bool BinaryInstance::is_jolly(std::size_t row) const {
  return std::holds_alternative<JollyRow>(provenance(row));
}

bool BinaryInstance::is_edge_gadget(std::size_t row) const {
  return std::holds_alternative<EdgeGadgetRow>(provenance(row));
}

std::size_t BinaryInstance::gadget_of(std::size_t row) const {
  const auto& p = provenance(row);
  if (const auto* c = std::get_if<CoreEdgeRow>(&p)) return c->gadget;
  if (const auto* j = std::get_if<JollyRow>(&p)) return j->gadget;
  throw Error(ErrorKind::MissingProvenance, "edge-gadget row has two gadgets");
}

BinaryInstance build_instance(const CubicGraph& graph) { return BinaryInstance(graph); }

// ---------------------------------------------------------------------------

bool DistanceReport::all_exercised() const {
  return cases.size() == 12 &&
         std::all_of(cases.begin(), cases.end(), [](const DistanceCase& c) { return c.pairs > 0; });
}

std::size_t DistanceReport::violations() const {
  std::size_t total = 0;
  for (const auto& c : cases) total += c.violations;
  return total;
}

namespace {

enum class Kind { Core, Jolly, EdgeGadget };

// Gadget-graph vertex: (gadget, label) with labels 1..7 for core vertices and
// 8..10 for the jolly vertices J_1..J_3.
struct Endpoint {
  std::size_t gadget;
  int label;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Shape {
  Kind kind;
  std::array<Endpoint, 2> ends;
  std::array<std::size_t, 2> gadgets;  // equal for core and jolly rows
};

Shape shape_of(const Provenance& p) {
  if (const auto* c = std::get_if<CoreEdgeRow>(&p)) {
    const auto& e = kCoreEdgeTable[c->edge];
    return {Kind::Core, {{{c->gadget, e.a}, {c->gadget, e.b}}}, {c->gadget, c->gadget}};
  }
  if (const auto* j = std::get_if<JollyRow>(&p)) {
    return {Kind::Jolly,
            {{{j->gadget, j->docking}, {j->gadget, 7 + j->docking}}},
            {j->gadget, j->gadget}};
  }
  const auto& eg = std::get<EdgeGadgetRow>(p);
  return {Kind::EdgeGadget,
          {{{eg.gadget_i, eg.docking_i}, {eg.gadget_j, eg.docking_j}}},
          {eg.gadget_i, eg.gadget_j}};
}

bool share_vertex(const Shape& a, const Shape& b) {
  for (const auto& x : a.ends) {
    for (const auto& y : b.ends) {
      if (x == y) return true;
    }
  }
  return false;
}

bool touches_gadget(const Shape& s, std::size_t gadget) {
  return s.gadgets[0] == gadget || s.gadgets[1] == gadget;
}

const std::array<DistanceCase, 12>& case_table() {
  static const std::array<DistanceCase, 12> table{{
      {1, "core edge vs edge of another vertex gadget", false, 18},
      {2, "edge gadget vs jolly edge", false, 14},
      {3, "core edges of one gadget sharing a vertex", true, 6},
      {4, "core edges of one gadget without a common vertex", true, 12},
      {5, "core edge vs jolly edge of its gadget sharing a vertex", true, 5},
      {6, "core edge vs jolly edge of its gadget without a common vertex", false, 11},
      {7, "core edge vs incident edge gadget sharing a vertex", true, 9},
      {8, "core edge vs incident edge gadget without a common vertex", false, 15},
      {9, "two edge gadgets", false, 18},
      {10, "two edge gadgets on four distinct vertex gadgets", true, 24},
      {11, "jolly edges from different jolly sets", false, 12},
      {12, "jolly edge vs any row without a common vertex", false, 11},
  }};
  return table;
}

}  // namespace

std::vector<int> applicable_cases(const Provenance& pa, const Provenance& pb) {
  Shape a = shape_of(pa);
  Shape b = shape_of(pb);
  if (a.kind > b.kind) std::swap(a, b);  // order: Core < Jolly < EdgeGadget
  const bool shared = share_vertex(a, b);
  std::vector<int> out;
  switch (a.kind) {
    case Kind::Core:
      if (b.kind == Kind::Core) {
        if (a.gadgets[0] == b.gadgets[0]) {
          out.push_back(shared ? 3 : 4);
        } else {
          out.push_back(1);
        }
      } else if (b.kind == Kind::Jolly) {
        if (a.gadgets[0] == b.gadgets[0]) {
          out.push_back(shared ? 5 : 6);
        } else {
          out.push_back(1);
        }
        if (!shared) out.push_back(12);
      } else if (touches_gadget(b, a.gadgets[0])) {
        out.push_back(shared ? 7 : 8);
      }
      break;
    case Kind::Jolly:
      if (b.kind == Kind::Jolly) {
        const bool same_set = a.ends[0] == b.ends[0];
        if (!same_set) out.push_back(11);
      } else {
        out.push_back(2);
      }
      if (!shared) out.push_back(12);
      break;
    case Kind::EdgeGadget: {
      out.push_back(9);
      std::array<std::size_t, 4> g{a.gadgets[0], a.gadgets[1], b.gadgets[0], b.gadgets[1]};
      std::sort(g.begin(), g.end());
      if (std::adjacent_find(g.begin(), g.end()) == g.end()) out.push_back(10);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DistanceReport verify_distance_catalog(const BinaryInstance& inst, unsigned jobs) {
  const auto& rows = inst.instance().rows();
  const std::size_t count = rows.size();
  if (inst.provenance().size() != count) {
    throw Error(ErrorKind::MissingProvenance, "provenance does not cover every row");
  }
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));

  auto fresh = [] {
    std::vector<DistanceCase> cases(case_table().begin(), case_table().end());
    for (auto& c : cases) c.min_seen = std::numeric_limits<std::size_t>::max();
    return cases;
  };
  std::vector<std::vector<DistanceCase>> partial(jobs, fresh());

  auto work = [&](unsigned worker) {
    auto& cases = partial[worker];
    for (std::size_t a = worker; a < count; a += jobs) {
      for (std::size_t b = a + 1; b < count; ++b) {
        auto applicable = applicable_cases(inst.provenance(a), inst.provenance(b));
        if (applicable.empty()) continue;
        const std::size_t d = hamming(rows[a], rows[b]);
        for (int number : applicable) {
          auto& c = cases[static_cast<std::size_t>(number - 1)];
          ++c.pairs;
          c.min_seen = std::min(c.min_seen, d);
          c.max_seen = std::max(c.max_seen, d);
          const bool ok = c.exact ? d == c.expected : d >= c.expected;
          if (!ok) ++c.violations;
        }
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(work, w);
  }

  DistanceReport report{fresh()};
  for (const auto& cases : partial) {
    for (std::size_t i = 0; i < cases.size(); ++i) {
      auto& out = report.cases[i];
      out.pairs += cases[i].pairs;
      out.violations += cases[i].violations;
      out.min_seen = std::min(out.min_seen, cases[i].min_seen);
      out.max_seen = std::max(out.max_seen, cases[i].max_seen);
    }
  }
  for (auto& c : report.cases) {
    if (c.pairs == 0) c.min_seen = 0;
  }
  return report;
}

}  // namespace anonhard::binary
