#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "cremona/characteristic.hpp"
#include "cremona/error.hpp"

using cremona::BasePoint;
using cremona::Characteristic;
using cremona::Error;
using cremona::ErrorCode;
using cremona::PicardManinClass;
using cremona::PointId;
using cremona::Rational;
using cremona::Side;
using cremona::Violation;

namespace {

PointId P(std::int64_t v) { return PointId{v}; }
const PicardManinClass L = PicardManinClass::line();
PicardManinClass E(std::int64_t p) {
  return PicardManinClass::exceptional(P(p));
}
Rational Q(long num, long den = 1) { return cremona::make_rational(num, den); }

std::vector<BasePoint> mults(std::int64_t first,
                             std::initializer_list<std::int64_t> ms) {
  std::vector<BasePoint> out;
  for (std::int64_t m : ms) out.push_back({P(first++), m});
  return out;
}

Characteristic sigma() {
  return Characteristic::quadratic({P(0), P(1), P(2)}, {P(3), P(4), P(5)});
}

// Generic Jonquieres map of degree d with base labels from `first` and
// inverse labels from `first + 1000`.
Characteristic jonquieres(std::int64_t d, std::int64_t first) {
  std::vector<PointId> smalls, inv_smalls;
  for (std::int64_t i = 1; i <= 2 * d - 2; ++i) {
    smalls.push_back(P(first + i));
    inv_smalls.push_back(P(first + 1000 + i));
  }
  return Characteristic::jonquieres(d, P(first), smalls, P(first + 1000),
                                    inv_smalls);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cremona::Error thrown";
  return ErrorCode::ParseError;
}

std::vector<std::int64_t> sorted_mults(const std::vector<BasePoint>& pts) {
  std::vector<std::int64_t> out;
  for (const auto& bp : pts) out.push_back(bp.mult);
  std::sort(out.rbegin(), out.rend());
  return out;
}

// The action formula written out directly on a hand-entered resolution
// matrix.
PicardManinClass oracle_apply(std::int64_t d, const std::vector<BasePoint>& base,
                              const std::vector<BasePoint>& inv,
                              const std::vector<std::vector<long>>& a,
                              const PicardManinClass& c) {
  Rational degree = c.degree() * d;
  for (std::size_t j = 0; j < base.size(); ++j) {
    degree -= c.mult(base[j].point) * base[j].mult;
  }
  std::map<PointId, Rational> out;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    Rational v = c.degree() * inv[i].mult;
    for (std::size_t j = 0; j < base.size(); ++j) {
      v -= c.mult(base[j].point) * a[i][j];
    }
    out[inv[i].point] = v;
  }
  return {degree, out};
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(cremona::validate(sigma()).ok());
  EXPECT_TRUE(cremona::validate(
                  Characteristic(3, mults(0, {2, 1, 1, 1, 1}),
                                 mults(10, {2, 1, 1, 1, 1})))
                  .ok());
  const auto bad = cremona::validate(
      Characteristic(2, mults(0, {1, 1}), mults(10, {1, 1})));
  EXPECT_FALSE(bad.ok());
  EXPECT_TRUE(bad.has(Violation::Kind::LinearNoether, Side::Base));
  EXPECT_TRUE(bad.has(Violation::Kind::LinearNoether, Side::Inverse));
  EXPECT_TRUE(cremona::validate(Characteristic::identity()).ok());
}

TEST(Validate, ReportsSideAndKind) {
  // Base fine, inverse satisfies the linear identity but not the quadratic.
  const auto r = cremona::validate(
      Characteristic(3, mults(0, {2, 1, 1, 1, 1}), mults(10, {2, 2, 1, 1})));
  EXPECT_FALSE(r.has(Violation::Kind::LinearNoether, Side::Base));
  EXPECT_FALSE(r.has(Violation::Kind::QuadraticNoether, Side::Base));
  EXPECT_FALSE(r.has(Violation::Kind::LinearNoether, Side::Inverse));
  EXPECT_TRUE(r.has(Violation::Kind::QuadraticNoether, Side::Inverse));
}

TEST(Validate, MultiplicityBoundsAndDuplicates) {
  EXPECT_TRUE(cremona::validate(Characteristic(2, mults(0, {2, 1}),
                                               mults(10, {1, 1, 1})))
                  .has(Violation::Kind::MultiplicityBound, Side::Base));
  EXPECT_TRUE(cremona::validate(Characteristic(0, {}, {}))
                  .has(Violation::Kind::NonPositiveDegree, Side::Base));
  EXPECT_TRUE(cremona::validate(Characteristic(1, mults(0, {1}), {}))
                  .has(Violation::Kind::MultiplicityBound, Side::Base));
  const std::vector<BasePoint> dup{{P(0), 1}, {P(0), 1}, {P(1), 1}};
  EXPECT_TRUE(cremona::validate(Characteristic(2, dup, mults(10, {1, 1, 1})))
                  .has(Violation::Kind::DuplicatePoint, Side::Base));
}

TEST(Construct, MatrixShapeChecked) {
  EXPECT_EQ(code_of([] {
              Characteristic(2, mults(0, {1, 1, 1}), mults(3, {1, 1, 1}),
                             cremona::ResolutionMatrix(2));
            }),
            ErrorCode::InvalidCharacteristic);
}

TEST(Jonquieres, Pattern) {
  EXPECT_TRUE(cremona::is_jonquieres(
      Characteristic(3, mults(0, {2, 1, 1, 1, 1}), mults(10, {2, 1, 1, 1, 1}))));
  EXPECT_TRUE(cremona::is_jonquieres(sigma()));
  EXPECT_TRUE(cremona::is_jonquieres(Characteristic::identity()));
  EXPECT_FALSE(cremona::is_jonquieres(Characteristic(
      5, mults(0, {2, 2, 2, 2, 2, 2}), mults(10, {2, 2, 2, 2, 2, 2}))));
  EXPECT_FALSE(cremona::is_jonquieres(cremona::quadratic_tower(2)));
  for (std::int64_t d = 2; d <= 10; ++d) {
    EXPECT_TRUE(cremona::is_jonquieres(jonquieres(d, 0)));
  }
}

TEST(Jonquieres, RejectsInvalid) {
  EXPECT_EQ(code_of([] {
              cremona::is_jonquieres(
                  Characteristic(2, mults(0, {1, 1}), mults(10, {1, 1})));
            }),
            ErrorCode::InvalidCharacteristic);
}

TEST(Md, Examples) {
  EXPECT_EQ(cremona::md(Characteristic::identity()), 0);
  EXPECT_EQ(cremona::md(sigma()), 1);
  for (std::int64_t d = 3; d <= 9; ++d) EXPECT_EQ(cremona::md(jonquieres(d, 0)), 2);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(cremona::md(cremona::quadratic_tower(n)), n);
}

TEST(Apply, QuadraticOnLine) {
  EXPECT_EQ(cremona::apply(sigma(), L), Q(2) * L - E(3) - E(4) - E(5));
}

TEST(Apply, QuadraticAgainstBlowUpOracle) {
  // Blowing up p0, p1, p2 and contracting the three lines: the strict
  // transform of the line through p_k, p_l is the exceptional curve over
  // q_j, so e_{p_j} goes to l - e_{q_k} - e_{q_l}.
  const std::vector<std::vector<long>> a{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  const auto f = sigma();
  EXPECT_EQ(cremona::apply(f, Q(2) * L - E(0) - E(1) - E(2)), L);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<PointId, Rational> m;
    for (int p = 0; p < 3; ++p) {
      m[P(p)] = Q(static_cast<long>(rng() % 21) - 10,
                  static_cast<long>(rng() % 3) + 1);
    }
    const PicardManinClass c(Q(static_cast<long>(rng() % 21) - 10), m);
    EXPECT_EQ(cremona::apply(f, c),
              oracle_apply(2, f.base(), f.inverse_base(), a, c));
  }
}

TEST(Apply, InverseUndoes) {
  const std::vector<Characteristic> maps{sigma(), jonquieres(4, 0),
                                         cremona::quadratic_tower(3)};
  for (const auto& f : maps) {
    const auto g = cremona::inverse(f);
    EXPECT_EQ(cremona::apply(f, cremona::apply(g, L)), L);
    EXPECT_EQ(cremona::apply(g, cremona::apply(f, L)), L);
    for (const auto& bp : f.base()) {
      const auto e = PicardManinClass::exceptional(bp.point);
      EXPECT_EQ(cremona::apply(g, cremona::apply(f, e)), e);
    }
  }
}

TEST(Apply, TransportsNonBasePoints) {
  const auto c = L - E(42);
  EXPECT_EQ(cremona::apply(sigma(), c), Q(2) * L - E(3) - E(4) - E(5) - E(42));
  const cremona::PointMap moved{{P(42), P(77)}};
  EXPECT_EQ(cremona::apply(sigma(), c, moved),
            Q(2) * L - E(3) - E(4) - E(5) - E(77));
}

TEST(Apply, Errors) {
  const Characteristic bare(2, mults(0, {1, 1, 1}), mults(3, {1, 1, 1}));
  EXPECT_EQ(code_of([&] { cremona::apply(bare, L); }),
            ErrorCode::MissingResolutionData);
  // e_{q0} is not in the domain: its label would land on an inverse base
  // point.
  EXPECT_EQ(code_of([] { cremona::apply(sigma(), E(3)); }),
            ErrorCode::UnsupportedClassSupport);
  const cremona::PointMap partial{{P(42), P(4)}};
  EXPECT_EQ(code_of([&] { cremona::apply(sigma(), E(42), partial); }),
            ErrorCode::UnsupportedClassSupport);
}

namespace {

PicardManinClass random_class_on(std::mt19937_64& rng,
                                 const std::vector<PointId>& support) {
  std::map<PointId, Rational> m;
  for (PointId p : support) {
    if (rng() % 4 != 0) {
      m[p] = Q(static_cast<long>(rng() % 25) - 12,
               static_cast<long>(rng() % 4) + 1);
    }
  }
  return {Q(static_cast<long>(rng() % 25) - 12, static_cast<long>(rng() % 3) + 1),
          m};
}

}  // namespace

TEST(ApplyProperty, IsometryAndDegreeRecovery) {
  std::mt19937_64 rng(4);
  std::vector<Characteristic> maps{sigma()};
  for (int n = 1; n <= 6; ++n) maps.push_back(cremona::quadratic_tower(n));
  for (std::int64_t d = 2; d <= 9; ++d) maps.push_back(jonquieres(d, 0));
  for (const auto& f : maps) {
    ASSERT_TRUE(cremona::validate(f).ok());
    EXPECT_EQ(cremona::intersect(cremona::apply(f, L), L), f.degree());
    auto support = f.base_points();
    support.push_back(P(5000));
    support.push_back(P(5001));
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = random_class_on(rng, support);
      const auto b = random_class_on(rng, support);
      EXPECT_EQ(cremona::intersect(cremona::apply(f, a), cremona::apply(f, b)),
                cremona::intersect(a, b));
    }
  }
}

TEST(Compose, TwoDisjointQuadratics) {
  const auto q2 =
      Characteristic::quadratic({P(10), P(11), P(12)}, {P(13), P(14), P(15)});
  const auto h = cremona::compose_disjoint(sigma(), q2);
  EXPECT_EQ(h.degree(), 4);
  EXPECT_EQ(sorted_mults(h.base()),
            (std::vector<std::int64_t>{2, 2, 2, 1, 1, 1}));
  EXPECT_EQ(sorted_mults(h.inverse_base()),
            (std::vector<std::int64_t>{2, 2, 2, 1, 1, 1}));
  EXPECT_TRUE(cremona::validate(h).ok());
  // Action of the composite equals the composite of the actions.
  const auto c = Q(3) * L - E(0) - Q(2) * E(10) - E(12);
  EXPECT_EQ(cremona::apply(h, c), cremona::apply(sigma(), cremona::apply(q2, c)));
}

TEST(Compose, TowerOfThree) {
  const auto h = cremona::quadratic_tower(3);
  EXPECT_EQ(h.degree(), 8);
  EXPECT_EQ(sorted_mults(h.base()),
            (std::vector<std::int64_t>{4, 4, 4, 2, 2, 2, 1, 1, 1}));
  std::int64_t sum = 0, sq = 0;
  for (const auto& bp : h.base()) {
    sum += bp.mult;
    sq += bp.mult * bp.mult;
  }
  EXPECT_EQ(sum, 21);
  EXPECT_EQ(sq, 63);
}

TEST(Compose, WithIdentity) {
  const auto f = jonquieres(5, 0);
  EXPECT_EQ(cremona::compose_disjoint(Characteristic::identity(), f), f);
  EXPECT_EQ(cremona::compose_disjoint(f, Characteristic::identity()), f);
}

TEST(Compose, Collision) {
  // Bs(sigma) meets Bs(sigma^-1) of the second factor.
  const auto f =
      Characteristic::quadratic({P(10), P(11), P(12)}, {P(0), P(20), P(21)});
  EXPECT_EQ(code_of([&] { cremona::compose_disjoint(sigma(), f); }),
            ErrorCode::BasePointCollision);
}

TEST(ComposeProperty, TowersValidateUpToTwelve) {
  for (int n = 1; n <= 12; ++n) {
    const auto h = cremona::quadratic_tower(n);
    EXPECT_EQ(h.degree(), std::int64_t{1} << n);
    EXPECT_TRUE(cremona::validate(h).ok());
    std::vector<std::int64_t> expected;
    for (int i = n; i >= 1; --i) {
      for (int r = 0; r < 3; ++r) expected.push_back(std::int64_t{1} << (i - 1));
    }
    EXPECT_EQ(sorted_mults(h.base()), expected);
    EXPECT_EQ(sorted_mults(h.inverse_base()), expected);
  }
}

TEST(ComposeProperty, RandomChainsValidateAndActCompatibly) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    Characteristic h;
    std::vector<Characteristic> factors;
    const int length = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < length; ++i) {
      const std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 4);
      factors.push_back(jonquieres(d, 10000 * (i + 1) + 100 * trial));
      h = cremona::compose_disjoint(h, factors.back());
    }
    ASSERT_TRUE(cremona::validate(h).ok());
    // h = f_1 o ... o f_k acts as f_1(...(f_k(l))).
    const auto composite = cremona::apply(h, L);
    auto step = L;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      step = cremona::apply(*it, step);
    }
    EXPECT_EQ(composite, step);
    EXPECT_EQ(cremona::intersect(composite, L), h.degree());
  }
}

TEST(ComposeProperty, MultiplicityCountBound) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto g = cremona::quadratic_tower(n);
    const std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 9);
    const auto j = jonquieres(d, 100000);
    const auto gj = cremona::compose_disjoint(g, j);
    ASSERT_TRUE(cremona::validate(gj).ok());
    EXPECT_LE(cremona::md(gj), 2 * cremona::md(g) + 2);
  }
}
