#include <hyperoct/combinatorics.hpp>
#include <hyperoct/cyclotomic.hpp>
#include <hyperoct/rational.hpp>

#include <gtest/gtest.h>

#include <complex>
#include <numeric>
#include <random>

using namespace hyperoct;

namespace {

using Complex = std::complex<double>;

Complex numeric_root(int N, long j) {
  const double angle = 2.0 * std::acos(-1.0) * static_cast<double>(j) / N;
  return {std::cos(angle), std::sin(angle)};
}

// A random element of Q(w_N) with its floating-point value.
std::pair<Cyclotomic, Complex> random_element(std::mt19937& rng, int N) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4), power(0, N - 1);
  Cyclotomic x;
  Complex z = 0;
  for (int t = 0; t < 4; ++t) {
    const Rational q = make_rational(num(rng), den(rng));
    const long j = power(rng);
    x += Cyclotomic::root_of_unity(N, j) * q;
    z += q.get_d() * numeric_root(N, j);
  }
  return {x, z};
}

bool close(Complex a, Complex b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST(Rational, Canonical) {
  EXPECT_EQ(to_string(make_rational(2, 2)), "1");
  EXPECT_EQ(to_string(make_rational(-4, 6)), "-2/3");
  EXPECT_EQ(to_string(make_rational(3, -9)), "-1/3");
  EXPECT_EQ(make_rational(BigInt(10), BigInt(4)), make_rational(5, 2));
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(pow2(10), 1024);
}

TEST(Cyclotomic, RootsOfUnity) {
  EXPECT_EQ(Cyclotomic::root_of_unity(1, 1), Cyclotomic(1));
  EXPECT_EQ(Cyclotomic::root_of_unity(4, 2), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(6, 3), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(12, 4), Cyclotomic::root_of_unity(3, 1));
  EXPECT_EQ(Cyclotomic::root_of_unity(5, -1), Cyclotomic::root_of_unity(5, 4));
  for (int N = 1; N <= 24; ++N) {
    Cyclotomic s;
    for (int j = 0; j < N; ++j) {
      const auto w = Cyclotomic::root_of_unity(N, j);
      ASSERT_TRUE(close(w.approximate(), numeric_root(N, j))) << N << " " << j;
      s += w;
    }
    EXPECT_EQ(s, Cyclotomic(N == 1 ? 1 : 0)) << N;
  }
}

TEST(Cyclotomic, PrimitiveRootSumIsMobius) {
  for (int m = 1; m <= 36; ++m) EXPECT_EQ(primitive_root_sum(m), Cyclotomic(mobius(m))) << m;
}

TEST(Cyclotomic, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPolynomial{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (IntPolynomial{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (IntPolynomial{1, 0, -1, 0, 1}));
  // every primitive N-th root is a zero, and the degree is phi(N)
  for (int N = 1; N <= 30; ++N) {
    const auto phi = cyclotomic_polynomial(N);
    long primitive = 0;
    for (int j = 1; j <= N; ++j) {
      if (std::gcd(N, j) != 1) continue;
      ++primitive;
      Complex v = 0;
      for (std::size_t k = phi.size(); k-- > 0;) v = v * numeric_root(N, j) + phi[k].get_d();
      EXPECT_LT(std::abs(v), 1e-6) << N << " " << j;
    }
    EXPECT_EQ(static_cast<long>(phi.size()) - 1, primitive);
  }
}

TEST(Cyclotomic, FieldOperationsAgreeWithComplexNumbers) {
  std::mt19937 rng(3);
  const std::vector<std::pair<int, int>> conductors = {{4, 4}, {12, 12}, {15, 15}, {4, 6}, {8, 3}, {5, 7}};
  for (const auto& [N1, N2] : conductors) {
    for (int t = 0; t < 40; ++t) {
      const auto [x, zx] = random_element(rng, N1);
      const auto [y, zy] = random_element(rng, N2);
      const auto [u, zu] = random_element(rng, N2);
      ASSERT_TRUE(close((x + y).approximate(), zx + zy));
      ASSERT_TRUE(close((x - y).approximate(), zx - zy));
      ASSERT_TRUE(close((x * y).approximate(), zx * zy));
      ASSERT_TRUE(close(x.conjugate().approximate(), std::conj(zx)));
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x * (y + u), x * y + x * u);
      EXPECT_EQ((x * y) * u, x * (y * u));
      EXPECT_TRUE((x - x).is_zero());
      EXPECT_EQ((x * y).conjugate(), x.conjugate() * y.conjugate());
    }
  }
}

TEST(Cyclotomic, CanonicalFormAndPrinting) {
  const Cyclotomic w4 = Cyclotomic::root_of_unity(4, 1);
  const Cyclotomic half = Cyclotomic(make_rational(1, 2));
  EXPECT_EQ((half + half * w4).to_string(), "1/2 + 1/2·w4");
  EXPECT_EQ(Cyclotomic().to_string(), "0");
  EXPECT_EQ((w4 * w4).to_string(), "-1");
  EXPECT_TRUE((w4 * w4).is_rational());
  EXPECT_EQ((w4 * w4).conductor(), 1);
  EXPECT_EQ((w4 * w4).to_rational(), -1);
  EXPECT_THROW(w4.to_rational(), InvalidArgument);
  // w3 + w3^2 = -1 collapses to a rational
  const Cyclotomic s = Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
  EXPECT_TRUE(s.is_rational());
  EXPECT_EQ(s, Cyclotomic(-1));
  // the same value reached through different conductors compares equal
  EXPECT_EQ(Cyclotomic::root_of_unity(12, 3), w4);
  EXPECT_EQ(w4.lifted_to(12), w4);
  EXPECT_EQ(Cyclotomic::from_power_coefficients(4, {Rational(0), Rational(1)}), w4);
}
