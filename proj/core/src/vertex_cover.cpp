#include <bit>
#include <cstdint>
#include <vector>

#include "anonhard/error.hpp"
#include "anonhard/graphs.hpp"

namespace anonhard {

namespace {

using Mask = std::uint64_t;

class CoverSearch {
 public:
  explicit CoverSearch(const CubicGraph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (const auto& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
    auto incumbent = greedy_vertex_cover(g);
    for (auto v : incumbent.vertices) best_mask_ |= Mask{1} << v;
    best_size_ = incumbent.size();
  }

  VertexCover run() {
    Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    search(all, 0, 0);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n_; ++v) {
      if (best_mask_ >> v & 1) out.push_back(v);
    }
    return VertexCover{std::move(out)};
  }

 private:
  int degree(std::size_t v, Mask alive) const { return std::popcount(adj_[v] & alive); }

  // Size of a greedy maximal matching among alive vertices; any cover of the
  // residual edges needs at least that many vertices.
  std::size_t matching_bound(Mask alive) const {
    Mask free = alive;
    std::size_t matched = 0;
    while (free) {
      auto v = static_cast<std::size_t>(std::countr_zero(free));
      free &= free - 1;
      Mask partners = adj_[v] & free;
      if (partners) {
        free &= ~(partners & -partners);
        ++matched;
      }
    }
    return matched;
  }

  void search(Mask alive, Mask chosen, std::size_t count) {
    if (count + matching_bound(alive) >= best_size_) return;

    // Uncovered edge with the largest combined residual degree.
    int best_score = -1;
    std::size_t pick = 0;
    for (Mask scan = alive; scan; scan &= scan - 1) {
      auto u = static_cast<std::size_t>(std::countr_zero(scan));
      for (Mask nb = adj_[u] & alive; nb; nb &= nb - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(nb));
        if (v < u) continue;
        int du = degree(u, alive);
        int dv = degree(v, alive);
        if (du + dv > best_score) {
          best_score = du + dv;
          pick = du >= dv ? u : v;
        }
      }
    }
    if (best_score < 0) {
      best_size_ = count;
      best_mask_ = chosen;
      return;
    }

    const Mask bit = Mask{1} << pick;
    search(alive & ~bit, chosen | bit, count + 1);

    const Mask nbrs = adj_[pick] & alive;
    search(alive & ~bit & ~nbrs, chosen | nbrs, count + static_cast<std::size_t>(std::popcount(nbrs)));
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  Mask best_mask_ = 0;
  std::size_t best_size_ = 0;
};

}  // namespace

VertexCover exact_vertex_cover(const CubicGraph& g) {
  if (g.vertex_count() > 64) {
    throw Error(ErrorKind::TooLarge, "exact vertex cover supports at most 64 vertices");
  }
  return CoverSearch(g).run();
}

}  // namespace anonhard
