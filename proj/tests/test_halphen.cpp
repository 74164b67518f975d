#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

#include "cremona/error.hpp"
#include "cremona/halphen.hpp"
#include "cremona/length.hpp"
#include "cremona/voronoi.hpp"

using cremona::Error;
using cremona::ErrorCode;
using cremona::HalphenVector;
using cremona::TwistParam;
using cremona::dot;
using cremona::translate;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no cremona::Error thrown";
  return ErrorCode::ParseError;
}

const HalphenVector K = HalphenVector::canonical();
const HalphenVector L = HalphenVector::line();
HalphenVector E(std::size_t i) { return HalphenVector::exceptional(i); }

HalphenVector random_vector(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<std::int64_t> u(lo, hi);
  std::array<std::int64_t, 9> m{};
  for (auto& x : m) x = u(rng);
  return {u(rng), m};
}

// Random element of K^perp: integral combination of e_i - e_j and
// l - e_0 - e_1 - e_2, which span K^perp.
HalphenVector random_kperp(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<std::int64_t> u(-range, range);
  HalphenVector a;
  for (std::size_t i = 1; i < 9; ++i) a += u(rng) * (E(i) - E(0));
  a += u(rng) * (L - E(0) - E(1) - E(2));
  return a;
}

// Independent model of the lattice in e-coefficient form: v = x0 l + sum x_i
// e_i with v.w = x0 y0 - sum x_i y_i. The translation is written as an
// integer 10 x 10 matrix and twists are matrix powers, so the oracle never
// uses additivity of the parameter.
using Vec = std::array<std::int64_t, 10>;
using Mat = std::array<Vec, 10>;

std::int64_t form(const Vec& x, const Vec& y) {
  std::int64_t s = x[0] * y[0];
  for (int i = 1; i < 10; ++i) s -= x[i] * y[i];
  return s;
}

Vec canonical_e() {
  Vec k{};
  k[0] = -3;
  for (int i = 1; i < 10; ++i) k[i] = 1;
  return k;
}

Mat translation_matrix(const Vec& a) {
  const Vec k = canonical_e();
  const std::int64_t aa = form(a, a);
  Mat t{};
  for (int col = 0; col < 10; ++col) {
    Vec d{};
    d[col] = 1;
    const std::int64_t kd = form(k, d);
    const std::int64_t coef = form(a, d) - kd * aa / 2;
    for (int row = 0; row < 10; ++row) {
      t[row][col] = d[row] - kd * a[row] + coef * k[row];
    }
  }
  return t;
}

Mat multiply(const Mat& x, const Mat& y) {
  Mat out{};
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      for (int k = 0; k < 10; ++k) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

Mat power(const Mat& m, const Mat& m_inverse, std::int64_t e) {
  Mat out{};
  for (int i = 0; i < 10; ++i) out[i][i] = 1;
  for (std::int64_t s = 0; s < std::abs(e); ++s) {
    out = multiply(out, e > 0 ? m : m_inverse);
  }
  return out;
}

std::int64_t oracle_twist_degree(std::int64_t n, std::int64_t m) {
  Vec a1{}, a2{};
  a1[1] = -1, a1[2] = 1;  // e1 - e0
  a2[1] = -1, a2[3] = 1;  // e2 - e0
  Vec minus_a1{}, minus_a2{};
  for (int i = 0; i < 10; ++i) minus_a1[i] = -a1[i], minus_a2[i] = -a2[i];
  const Mat t = multiply(
      power(translation_matrix(a1), translation_matrix(minus_a1), n),
      power(translation_matrix(a2), translation_matrix(minus_a2), m));
  return t[0][0];  // tau(l) . l
}

}  // namespace

TEST(Canonical, Values) {
  EXPECT_EQ(dot(K, K), 0);
  EXPECT_EQ(dot(K, L), -3);
  EXPECT_EQ(dot(E(1) - E(0), K), 0);
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(dot(K, E(i)), -1);
  // -K is the boundary class 3l - sum e.
  EXPECT_EQ(-K, HalphenVector(3, {1, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(TwistParamCheck, RejectsOutsideKPerp) {
  EXPECT_EQ(code_of([] { TwistParam(E(0)); }), ErrorCode::NotInKPerp);
  EXPECT_EQ(code_of([] { TwistParam{L}; }), ErrorCode::NotInKPerp);
  EXPECT_NO_THROW(TwistParam(E(3) - E(5)));
  EXPECT_NO_THROW(TwistParam{K});
}

TEST(Translate, Examples) {
  const TwistParam a(E(1) - E(0));
  EXPECT_EQ(translate(a, K), K);
  const HalphenVector image = translate(a, L);
  EXPECT_EQ(image, HalphenVector(10, {6, 0, 3, 3, 3, 3, 3, 3, 3}));
  EXPECT_EQ(dot(image, image), 1);
  EXPECT_EQ(image, L + 3 * (E(1) - E(0)) - 3 * K);
}

TEST(Translate, InverseParameterUndoes) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_kperp(rng, 4);
    const auto d = random_vector(rng, -6, 6);
    EXPECT_EQ(translate(TwistParam(a), translate(TwistParam(-a), d)), d);
  }
}

TEST(TranslateProperty, IsometryGroupLawAndFixedClass) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_kperp(rng, 5);
    const auto b = random_kperp(rng, 5);
    const auto d = random_vector(rng, -8, 8);
    const auto d2 = random_vector(rng, -8, 8);
    const TwistParam ta(a), tb(b), tab(a + b);
    EXPECT_EQ(dot(translate(ta, d), translate(ta, d2)), dot(d, d2));
    EXPECT_EQ(translate(ta, translate(tb, d)), translate(tab, d));
    EXPECT_EQ(translate(ta, translate(tb, d)), translate(tb, translate(ta, d)));
    EXPECT_EQ(translate(ta, -K), -K);
  }
}

TEST(TranslateProperty, WellDefinedModuloCanonical) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_kperp(rng, 5);
    const auto d = random_vector(rng, -8, 8);
    const std::int64_t s = static_cast<std::int64_t>(rng() % 7) - 3;
    EXPECT_EQ(translate(TwistParam(a + s * K), d), translate(TwistParam(a), d));
  }
}

TEST(TwistDegree, Examples) {
  EXPECT_EQ(cremona::twist_degree(0, 0), 1);
  EXPECT_EQ(cremona::twist_degree(1, 0), 10);
  EXPECT_EQ(cremona::twist_degree(2, 3), 172);
  EXPECT_EQ(oracle_twist_degree(2, 3), 172);
  EXPECT_EQ(cremona::twist_degree(-1, 0), 10);
  EXPECT_EQ(cremona::twist_degree(-1, 1), 10);
}

TEST(TwistDegree, MatchesMatrixOracleAndClosedForm) {
  for (std::int64_t n = -6; n <= 6; ++n) {
    for (std::int64_t m = -6; m <= 6; ++m) {
      EXPECT_EQ(cremona::twist_degree(n, m), oracle_twist_degree(n, m));
    }
  }
  for (std::int64_t n = -20; n <= 20; ++n) {
    for (std::int64_t m = -20; m <= 20; ++m) {
      EXPECT_EQ(cremona::twist_degree(n, m),
                cremona::twist_degree_closed_form(n, m));
      EXPECT_EQ(cremona::twist_degree_closed_form(n, m),
                9 * (n * n + m * m + n * m) + 1);
    }
  }
}

TEST(TwistDegree, DisplayedInequality) {
  for (std::int64_t m = 1; m <= 20; ++m) {
    for (std::int64_t n = -20; n <= 20; ++n) {
      EXPECT_LE(5 * (n + m) * (n + m), cremona::twist_degree(n, m));
    }
  }
}

TEST(TwistCharacteristic, UnitTwist) {
  const auto f = cremona::twist_characteristic(1, 0);
  EXPECT_EQ(f.degree(), 10);
  ASSERT_EQ(f.inverse_base().size(), 8u);
  std::int64_t sum = 0, sq = 0;
  std::vector<std::int64_t> inv;
  for (const auto& bp : f.inverse_base()) {
    inv.push_back(bp.mult);
    sum += bp.mult;
    sq += bp.mult * bp.mult;
  }
  std::sort(inv.rbegin(), inv.rend());
  EXPECT_EQ(inv, (std::vector<std::int64_t>{6, 3, 3, 3, 3, 3, 3, 3}));
  EXPECT_EQ(sum, 27);
  EXPECT_EQ(sq, 99);
  EXPECT_TRUE(cremona::validate(f).ok());
}

TEST(TwistCharacteristic, OtherExamples) {
  const auto f11 = cremona::twist_characteristic(1, 1);
  EXPECT_EQ(f11.degree(), 28);
  EXPECT_TRUE(cremona::validate(f11).ok());
  EXPECT_EQ(cremona::twist_characteristic(-1, 0).degree(), 10);
  EXPECT_EQ(code_of([] { cremona::twist_characteristic(0, 0); }),
            ErrorCode::IdentityTwist);
}

TEST(TwistCharacteristic, ValidWithAtMostNineBasePoints) {
  for (std::int64_t n = -8; n <= 8; ++n) {
    for (std::int64_t m = -8; m <= 8; ++m) {
      if (n == 0 && m == 0) continue;
      const auto f = cremona::twist_characteristic(n, m);
      EXPECT_TRUE(cremona::validate(f).ok()) << n << "," << m;
      EXPECT_LE(f.base().size(), 9u);
      EXPECT_LE(f.inverse_base().size(), 9u);
      EXPECT_EQ(f.degree(), cremona::twist_degree(n, m));
    }
  }
}

TEST(TwistCharacteristic, ActionAgreesWithLattice) {
  std::mt19937_64 rng(34);
  for (std::int64_t n = -3; n <= 3; ++n) {
    for (std::int64_t m = -3; m <= 3; ++m) {
      if (n == 0 && m == 0) continue;
      const auto f = cremona::twist_characteristic(n, m);
      const auto map = cremona::twist_image_map(n, m);
      const TwistParam a = cremona::twist_param(n, m);
      for (int trial = 0; trial < 10; ++trial) {
        const auto d = random_vector(rng, -5, 5);
        const auto d2 = random_vector(rng, -5, 5);
        const auto c = cremona::to_class(d);
        const auto c2 = cremona::to_class(d2);
        const auto image = cremona::apply(f, c, map);
        EXPECT_EQ(cremona::to_halphen(image), translate(a, d));
        EXPECT_EQ(cremona::intersect(image, cremona::apply(f, c2, map)),
                  cremona::intersect(c, c2));
      }
    }
  }
}

TEST(TwistProperty, SqrtDegreeSubadditive) {
  for (std::int64_t n = -10; n <= 10; ++n) {
    for (std::int64_t m = -10; m <= 10; ++m) {
      for (std::int64_t n2 = -10; n2 <= 10; n2 += 5) {
        for (std::int64_t m2 = -10; m2 <= 10; m2 += 5) {
          const double lhs =
              std::sqrt(static_cast<double>(cremona::twist_degree(n + n2, m + m2)));
          const double rhs =
              std::sqrt(static_cast<double>(cremona::twist_degree(n, m))) +
              std::sqrt(static_cast<double>(cremona::twist_degree(n2, m2)));
          EXPECT_LE(lhs, rhs + 1e-9);
        }
      }
    }
  }
}

TEST(TwistProperty, BoundaryClassFixed) {
  const auto points = cremona::HalphenFrame::standard().points;
  const std::vector<cremona::PointId> frame(points.begin(), points.end());
  const auto s = cremona::boundary_class(frame);
  EXPECT_EQ(cremona::to_halphen(s), -K);
  for (std::int64_t n = -4; n <= 4; ++n) {
    for (std::int64_t m = -4; m <= 4; ++m) {
      EXPECT_EQ(translate(cremona::twist_param(n, m), cremona::to_halphen(s)),
                -K);
    }
  }
}

TEST(HalphenConversion, RoundTripAndErrors) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = random_vector(rng, -9, 9);
    EXPECT_EQ(cremona::to_halphen(cremona::to_class(d)), d);
    EXPECT_EQ(cremona::intersect(cremona::to_class(d), cremona::to_class(d)),
              dot(d, d));
  }
  EXPECT_EQ(code_of([] {
              cremona::to_halphen(
                  cremona::PicardManinClass::exceptional(cremona::PointId{99}));
            }),
            ErrorCode::UnsupportedClassSupport);
  EXPECT_EQ(code_of([] {
              cremona::to_halphen(cremona::PicardManinClass(
                  cremona::make_rational(1, 2), {}));
            }),
            ErrorCode::UnsupportedClassSupport);
}
