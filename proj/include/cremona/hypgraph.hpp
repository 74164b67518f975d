#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

/// Finite metric space on vertices 0 .. N-1 with rational distances.
/// Construction throws Error(InvalidMetric) unless the matrix is square,
/// symmetric, nonnegative, zero on the diagonal and satisfies the triangle
/// inequality.
class FiniteMetric {
 public:
  FiniteMetric() = default;
  explicit FiniteMetric(std::vector<std::vector<Rational>> distances);

  std::size_t size() const { return d_.size(); }
  const Rational& operator()(std::size_t x, std::size_t y) const {
    return d_[x][y];
  }

  /// Distances multiplied by the lcm of the denominators; the kernels work
  /// on these. Throws Error(InvalidMetric) if they do not fit in 64 bits.
  const std::vector<std::int64_t>& scaled() const { return scaled_; }
  const mpz_class& scale() const { return scale_; }

  FiniteMetric relabeled(const std::vector<std::size_t>& perm) const;

 private:
  std::vector<std::vector<Rational>> d_;
  std::vector<std::int64_t> scaled_;  // row-major N x N
  mpz_class scale_ = 1;
};

/// Undirected simple graph on vertices 0 .. N-1.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : adj_(n) {}

  void add_edge(std::size_t u, std::size_t v);
  std::size_t size() const { return adj_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adj_[v];
  }
  bool has_edge(std::size_t u, std::size_t v) const;

  /// BFS distance matrix; -1 for unreachable pairs.
  std::vector<std::vector<int>> distances() const;
  bool connected() const;

  /// Unit-edge path metric. Throws Error(InvalidMetric) if disconnected.
  FiniteMetric metric() const;

 private:
  std::vector<std::vector<std::size_t>> adj_;
};

/// max over quadruples of (S1 - S2) / 2 where S1 >= S2 >= S3 are the three
/// pair sums d(x,y)+d(z,w), d(x,z)+d(y,w), d(x,w)+d(y,z). OpenMP kernel over
/// unordered quadruples.
Rational four_point_delta(const FiniteMetric& metric);

/// Serial reference: plain scan over all ordered quadruples.
Rational four_point_delta_serial(const FiniteMetric& metric);

/// (S1 - S2) / 2 for one quadruple.
Rational four_point_defect(const FiniteMetric& metric, std::size_t x,
                           std::size_t y, std::size_t z, std::size_t w);

/// Vertex set Gamma(x, y) for every ordered pair.
class SubgraphFamily {
 public:
  explicit SubgraphFamily(std::size_t n) : n_(n), sets_(n * n) {}

  std::size_t size() const { return n_; }
  void set(std::size_t x, std::size_t y, std::vector<std::size_t> vertices);
  const std::vector<std::size_t>& at(std::size_t x, std::size_t y) const {
    return sets_[x * n_ + y];
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::size_t>> sets_;
};

struct BowditchViolation {
  int condition = 0;  // 2 or 3
  std::size_t x = 0, y = 0;
  std::optional<std::size_t> z;  // condition 2 only
  std::size_t witness = 0;       // vertex of Gamma(x, y) too far away
  int witness_distance = 0;
};

/// Checks the thin-subgraph criterion with constant h on a connected graph:
/// (2) Gamma(x,y) lies in the h-neighbourhood of Gamma(x,z) u Gamma(y,z) and
/// (3) diam Gamma(x,y) <= h when d(x,y) <= 1, distances measured in the
/// graph. Returns the first violation in (x, y, z) order, condition 3 before
/// condition 2 within an (x, y) pair. Throws Error(MalformedFamily) if some
/// Gamma(x,y) misses x or y or does not induce a connected subgraph, and
/// Error(InvalidMetric) if the graph is disconnected.
std::optional<BowditchViolation> bowditch_check(const Graph& graph,
                                                const SubgraphFamily& family,
                                                int h);

struct FlatRow {
  std::int64_t m = 0, n = 0;
  std::int64_t degree = 1;
  int lower = 0;
  int upper = 0;
};

/// Rows for every (m, n) with |m| + |n| <= k_max, sorted by (m, n): degree of
/// g_1^m o g_2^n, the lower bound from the degree, and the greedy upper bound.
using FlatTable = std::vector<FlatRow>;

/// OpenMP over rows.
FlatTable flat_growth(int k_max);
FlatTable flat_growth_serial(int k_max);

/// ceil(3k / 5).
int flat_threshold(int k);

/// Checks min over |m| + |n| = k of the degree lower bound against
/// flat_threshold(k) for every 1 <= k <= k_max. Returns the first failing k.
std::optional<int> flat_certificate(int k_max);

}  // namespace cremona
