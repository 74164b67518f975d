#include "cremona/hypgraph.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <queue>

#include <omp.h>

#include "cremona/error.hpp"
#include "cremona/halphen.hpp"
#include "cremona/length.hpp"

namespace cremona {

FiniteMetric::FiniteMetric(std::vector<std::vector<Rational>> distances)
    : d_(std::move(distances)) {
  const std::size_t n = d_.size();
  for (auto& row : d_) {
    if (row.size() != n) {
      throw Error(ErrorCode::InvalidMetric, "distance matrix must be square");
    }
    for (auto& v : row) v.canonicalize();
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (d_[x][x] != 0) {
      throw Error(ErrorCode::InvalidMetric, "nonzero diagonal entry");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (d_[x][y] < 0 || d_[x][y] != d_[y][x]) {
        throw Error(ErrorCode::InvalidMetric,
                    "distances must be nonnegative and symmetric");
      }
    }
  }

  for (const auto& row : d_) {
    for (const auto& v : row) mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(),
                                      v.get_den_mpz_t());
  }
  // Leave headroom so that sums of two entries cannot overflow.
  static const mpz_class kLimit = mpz_class(1) << 61;
  scaled_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const mpz_class s = d_[x][y].get_num() * (scale_ / d_[x][y].get_den());
      if (s >= kLimit) {
        throw Error(ErrorCode::InvalidMetric, "distances too large to scan");
      }
      scaled_[x * n + y] = std::int64_t(s.get_si());
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (scaled_[x * n + z] > scaled_[x * n + y] + scaled_[y * n + z]) {
          throw Error(ErrorCode::InvalidMetric,
                      "triangle inequality fails at (" + std::to_string(x) +
                          ", " + std::to_string(y) + ", " +
                          std::to_string(z) + ")");
        }
      }
    }
  }
}

FiniteMetric FiniteMetric::relabeled(const std::vector<std::size_t>& perm) const {
  const std::size_t n = size();
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out[perm[x]][perm[y]] = d_[x][y];
  }
  return FiniteMetric(std::move(out));
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v || has_edge(u, v)) return;
  adj_.at(u).push_back(v);
  adj_.at(v).push_back(u);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  const auto& nb = adj_.at(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<std::vector<int>> Graph::distances() const {
  const std::size_t n = size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = dist[s];
    std::queue<std::size_t> queue;
    row[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adj_[u]) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push(v);
        }
      }
    }
  }
  return dist;
}

bool Graph::connected() const {
  if (size() == 0) return true;
  const auto dist = distances();
  return std::none_of(dist[0].begin(), dist[0].end(),
                      [](int d) { return d < 0; });
}

FiniteMetric Graph::metric() const {
  const auto dist = distances();
  std::vector<std::vector<Rational>> out(size(), std::vector<Rational>(size()));
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) {
      if (dist[x][y] < 0) {
        throw Error(ErrorCode::InvalidMetric, "graph is not connected");
      }
      out[x][y] = dist[x][y];
    }
  }
  return FiniteMetric(std::move(out));
}

namespace {

inline std::int64_t defect(std::int64_t s1, std::int64_t s2, std::int64_t s3) {
  const std::int64_t hi = std::max({s1, s2, s3});
  const std::int64_t lo = std::min({s1, s2, s3});
  const std::int64_t mid = s1 + s2 + s3 - hi - lo;
  return hi - mid;
}

Rational scaled_to_delta(std::int64_t best, const mpz_class& scale) {
  Rational out(mpz_class(best), 2 * scale);
  out.canonicalize();
  return out;
}

}  // namespace

Rational four_point_defect(const FiniteMetric& metric, std::size_t x,
                           std::size_t y, std::size_t z, std::size_t w) {
  const auto& d = metric.scaled();
  const std::size_t n = metric.size();
  const std::int64_t s = defect(d[x * n + y] + d[z * n + w],
                                d[x * n + z] + d[y * n + w],
                                d[x * n + w] + d[y * n + z]);
  return scaled_to_delta(s, metric.scale());
}

Rational four_point_delta_serial(const FiniteMetric& metric) {
  const auto& d = metric.scaled();
  const std::size_t n = metric.size();
  std::int64_t best = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t w = 0; w < n; ++w) {
          best = std::max(best, defect(d[x * n + y] + d[z * n + w],
                                       d[x * n + z] + d[y * n + w],
                                       d[x * n + w] + d[y * n + z]));
        }
      }
    }
  }
  return scaled_to_delta(best, metric.scale());
}

Rational four_point_delta(const FiniteMetric& metric) {
  const std::int64_t* d = metric.scaled().data();
  const std::int64_t n = std::int64_t(metric.size());
  std::int64_t best = 0;
  // The three pair sums are invariant under permuting the quadruple, so
  // x < y < z < w covers every case.
#pragma omp parallel for schedule(dynamic, 1) reduction(max : best)
  for (std::int64_t x = 0; x < n; ++x) {
    const std::int64_t* dx = d + x * n;
    for (std::int64_t y = x + 1; y < n; ++y) {
      const std::int64_t* dy = d + y * n;
      for (std::int64_t z = y + 1; z < n; ++z) {
        const std::int64_t* dz = d + z * n;
        for (std::int64_t w = z + 1; w < n; ++w) {
          const std::int64_t s =
              defect(dx[y] + dz[w], dx[z] + dy[w], dx[w] + dy[z]);
          if (s > best) best = s;
        }
      }
    }
  }
  return scaled_to_delta(best, metric.scale());
}

void SubgraphFamily::set(std::size_t x, std::size_t y,
                         std::vector<std::size_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  sets_.at(x * n_ + y) = std::move(vertices);
}

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t(1) << (i % 64); }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1;
  }
  // First index set here but in neither a nor b.
  std::optional<std::size_t> first_outside(const Bits& a, const Bits& b) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::uint64_t rest = words_[w] & ~(a.words_[w] | b.words_[w]);
      if (rest) return w * 64 + std::size_t(__builtin_ctzll(rest));
    }
    return std::nullopt;
  }

 private:
  std::vector<std::uint64_t> words_;
};

bool induces_connected(const Graph& g, const std::vector<std::size_t>& s) {
  if (s.empty()) return false;
  Bits in(g.size()), seen(g.size());
  for (std::size_t v : s) in.set(v);
  std::vector<std::size_t> stack{s.front()};
  seen.set(s.front());
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : g.neighbors(u)) {
      if (in.test(v) && !seen.test(v)) {
        seen.set(v);
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == s.size();
}

}  // namespace

std::optional<BowditchViolation> bowditch_check(const Graph& graph,
                                                const SubgraphFamily& family,
                                                int h) {
  const std::size_t n = graph.size();
  if (family.size() != n) {
    throw Error(ErrorCode::MalformedFamily, "family size differs from graph");
  }
  const auto dist = graph.distances();
  for (const auto& row : dist) {
    if (std::any_of(row.begin(), row.end(), [](int d) { return d < 0; })) {
      throw Error(ErrorCode::InvalidMetric, "graph is not connected");
    }
  }

  std::vector<Bits> member(n * n, Bits(n)), near(n * n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& s = family.at(x, y);
      if (!std::binary_search(s.begin(), s.end(), x) ||
          !std::binary_search(s.begin(), s.end(), y)) {
        throw Error(ErrorCode::MalformedFamily,
                    "Gamma(" + std::to_string(x) + ", " + std::to_string(y) +
                        ") misses an endpoint");
      }
      if (!induces_connected(graph, s)) {
        throw Error(ErrorCode::MalformedFamily,
                    "Gamma(" + std::to_string(x) + ", " + std::to_string(y) +
                        ") is not connected");
      }
      for (std::size_t v : s) member[x * n + y].set(v);
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t u : s) {
          if (dist[u][v] <= h) {
            near[x * n + y].set(v);
            break;
          }
        }
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& s = family.at(x, y);
      if (dist[x][y] <= 1) {
        for (std::size_t u : s) {
          for (std::size_t v : s) {
            if (dist[u][v] > h) {
              return BowditchViolation{3, x, y, std::nullopt, u, dist[u][v]};
            }
          }
        }
      }
      for (std::size_t z = 0; z < n; ++z) {
        const auto far = member[x * n + y].first_outside(near[x * n + z],
                                                         near[y * n + z]);
        if (far) {
          int best = std::numeric_limits<int>::max();
          for (std::size_t u : family.at(x, z)) best = std::min(best, dist[*far][u]);
          for (std::size_t u : family.at(y, z)) best = std::min(best, dist[*far][u]);
          return BowditchViolation{2, x, y, z, *far, best};
        }
      }
    }
  }
  return std::nullopt;
}

int flat_threshold(int k) { return (3 * k + 4) / 5; }

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> ball(int k_max) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t m = -k_max; m <= k_max; ++m) {
    const std::int64_t rest = k_max - (m < 0 ? -m : m);
    for (std::int64_t n = -rest; n <= rest; ++n) out.emplace_back(m, n);
  }
  return out;
}

FlatRow flat_row(std::int64_t m, std::int64_t n) {
  if (m == 0 && n == 0) return {0, 0, 1, 0, 0};
  const Characteristic f = twist_characteristic(m, n);
  return {m, n, f.degree(), length_lower_deg(f), greedy_length(f).upper_greedy};
}

}  // namespace

FlatTable flat_growth_serial(int k_max) {
  FlatTable out;
  for (const auto& [m, n] : ball(k_max)) out.push_back(flat_row(m, n));
  return out;
}

FlatTable flat_growth(int k_max) {
  const auto cells = ball(k_max);
  FlatTable out(cells.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < cells.size(); ++i) {
    try {
      out[i] = flat_row(cells[i].first, cells[i].second);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::optional<int> flat_certificate(int k_max) {
  for (int k = 1; k <= k_max; ++k) {
    int lowest = std::numeric_limits<int>::max();
    for (std::int64_t m = -k; m <= k; ++m) {
      const std::int64_t rest = k - (m < 0 ? -m : m);
      for (std::int64_t n : {-rest, rest}) {
        lowest = std::min(lowest, length_lower_deg(twist_characteristic(m, n)));
        if (rest == 0) break;
      }
    }
    if (lowest < flat_threshold(k)) return k;
  }
  return std::nullopt;
}

}  // namespace cremona
