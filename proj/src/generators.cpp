#include "cremona/generators.hpp"

#include <queue>
#include <random>

#include "cremona/error.hpp"

namespace cremona::graphs {

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i - 1, i);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph grid(std::size_t side) {
  Graph g(side * side);
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const std::size_t v = r * side + c;
      if (c + 1 < side) g.add_edge(v, v + 1);
      if (r + 1 < side) g.add_edge(v, v + side);
    }
  }
  return g;
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  return g;
}

SubgraphFamily geodesic_family(const Graph& tree) {
  const std::size_t n = tree.size();
  SubgraphFamily family(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> parent(n, n);
    std::queue<std::size_t> queue;
    parent[x] = x;
    queue.push(x);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : tree.neighbors(u)) {
        if (parent[v] == n) {
          parent[v] = u;
          queue.push(v);
        }
      }
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (parent[y] == n) {
        throw Error(ErrorCode::InvalidMetric, "graph is not connected");
      }
      std::vector<std::size_t> path{y};
      for (std::size_t v = y; v != x; v = parent[v]) path.push_back(parent[v]);
      family.set(x, y, std::move(path));
    }
  }
  return family;
}

SubgraphFamily edge_family(std::size_t n) {
  SubgraphFamily family(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) family.set(x, y, {x, y});
  }
  return family;
}

SubgraphFamily staircase_family(std::size_t side) {
  const std::size_t n = side * side;
  SubgraphFamily family(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      long r = long(x / side), c = long(x % side);
      const long tr = long(y / side), tc = long(y % side);
      std::vector<std::size_t> steps{x};
      while (r != tr || c != tc) {
        const long dr = tr - r, dc = tc - c;
        if (std::labs(dc) >= std::labs(dr)) {
          c += dc > 0 ? 1 : -1;
        } else {
          r += dr > 0 ? 1 : -1;
        }
        steps.push_back(std::size_t(r) * side + std::size_t(c));
      }
      family.set(x, y, std::move(steps));
    }
  }
  return family;
}

}  // namespace cremona::graphs
