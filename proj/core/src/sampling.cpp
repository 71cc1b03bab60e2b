#include "anonhard/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "anonhard/error.hpp"

namespace anonhard {

Clustering random_partition(std::size_t row_count, std::size_t k, std::size_t min_block,
                            std::size_t max_block, Rng& rng) {
  if (k == 0 || min_block < k || max_block < min_block || row_count < k) {
    throw Error(ErrorKind::Infeasible, "bad block bounds for random partition");
  }
  std::vector<std::size_t> order(row_count);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::uniform_int_distribution<std::size_t> block(min_block, max_block);
  Clustering p;
  std::size_t pos = 0;
  while (pos < row_count) {
    std::size_t take = std::min(block(rng), row_count - pos);
    if (take < k && !p.clusters.empty()) {
      p.clusters.back().insert(p.clusters.back().end(), order.begin() + pos, order.end());
    } else {
      p.clusters.emplace_back(order.begin() + pos, order.begin() + pos + take);
    }
    pos += take;
  }
  return p;
}

Clustering perturb(Clustering p, std::size_t k, std::size_t moves, Rng& rng) {
  auto pick = [&](std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
  };
  for (std::size_t step = 0; step < moves && p.clusters.size() >= 2; ++step) {
    std::size_t a = pick(p.clusters.size());
    std::size_t b = pick(p.clusters.size() - 1);
    if (b >= a) ++b;
    auto& ca = p.clusters[a];
    auto& cb = p.clusters[b];
    switch (pick(8)) {
      case 0:  // merge
        cb.insert(cb.end(), ca.begin(), ca.end());
        p.clusters.erase(p.clusters.begin() + static_cast<std::ptrdiff_t>(a));
        break;
      case 1:
      case 2:  // move one row
        if (ca.size() > k) {
          std::size_t i = pick(ca.size());
          cb.push_back(ca[i]);
          ca.erase(ca.begin() + static_cast<std::ptrdiff_t>(i));
        }
        break;
      default:  // swap
        std::swap(ca[pick(ca.size())], cb[pick(cb.size())]);
        break;
    }
  }
  return p;
}

VertexCover random_cover(const CubicGraph& g, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> in(g.vertex_count());
  for (std::size_t v = 0; v < in.size(); ++v) in[v] = coin(rng);
  for (const auto& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) in[coin(rng) ? e.u : e.v] = true;
  }
  std::vector<std::size_t> vertices;
  for (std::size_t v = 0; v < in.size(); ++v) {
    if (in[v]) vertices.push_back(v);
  }
  return make_cover(std::move(vertices), g.vertex_count());
}

}  // namespace anonhard
