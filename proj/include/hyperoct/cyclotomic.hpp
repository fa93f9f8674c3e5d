#pragma once

// Exact arithmetic in the cyclotomic fields Q(w_N), w_N = exp(2 pi i / N).
//
// An element is stored as a polynomial in w_N with rational coefficients of
// degree < phi(N), i.e. its remainder modulo the N-th cyclotomic polynomial.
// Elements with different conductors are lifted to the lcm before any binary
// operation. Values that turn out to be rational are always demoted to
// conductor 1, so rational results print and serialize the same way no matter
// which field they were computed in.

#include <hyperoct/errors.hpp>
#include <hyperoct/rational.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

/// Integer polynomial, lowest degree first.
using IntPolynomial = std::vector<BigInt>;

namespace detail {

inline void trim(IntPolynomial& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor; throws if there is a remainder.
inline IntPolynomial divide_exact(IntPolynomial num, const IntPolynomial& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw AssertionFailure("polynomial division: degree too small");
  IntPolynomial quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const BigInt c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const auto& r : num) {
    if (r != 0) throw AssertionFailure("polynomial division left a remainder");
  }
  trim(quot);
  return quot;
}

}  // namespace detail

/// Phi_N, computed by dividing x^N - 1 by Phi_d for every proper divisor d of N.
inline IntPolynomial cyclotomic_polynomial(int N) {
  if (N < 1) throw InvalidArgument("cyclotomic_polynomial: N must be positive");
  IntPolynomial p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(N)] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d == 0) p = detail::divide_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

inline long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

struct CyclotomicField {
  int conductor = 1;
  int degree = 1;
  // reduced_powers[k] holds w_N^k mod Phi_N for k in [0, N).
  std::vector<std::vector<long>> reduced_powers;
};

inline std::unique_ptr<CyclotomicField> build_field(int N) {
  auto field = std::make_unique<CyclotomicField>();
  field->conductor = N;
  const IntPolynomial phi = cyclotomic_polynomial(N);
  const int d = static_cast<int>(phi.size()) - 1;
  field->degree = d;
  std::vector<long> current(static_cast<std::size_t>(d), 0);
  current[0] = 1;
  for (int k = 0; k < N; ++k) {
    field->reduced_powers.push_back(current);
    // multiply by w: shift up, then fold the w^d term back using Phi_N.
    const long top = current[static_cast<std::size_t>(d - 1)];
    for (int i = d - 1; i > 0; --i) current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)];
    current[0] = 0;
    for (int i = 0; i < d; ++i) {
      current[static_cast<std::size_t>(i)] -= top * phi[static_cast<std::size_t>(i)].get_si();
    }
  }
  return field;
}

/// Interned field data; references stay valid for the life of the program.
inline const CyclotomicField& cyclotomic_field(int N) {
  if (N < 1) throw InvalidArgument("conductor must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = fields.find(N);
  if (it == fields.end()) it = fields.emplace(N, build_field(N)).first;
  return *it->second;
}

}  // namespace detail

class Cyclotomic {
 public:
  Cyclotomic() : field_(&detail::cyclotomic_field(1)), coeffs_(1) {}
  Cyclotomic(long value) : field_(&detail::cyclotomic_field(1)), coeffs_{Rational(value)} {}  // NOLINT
  Cyclotomic(const Rational& value) : field_(&detail::cyclotomic_field(1)), coeffs_{value} {}  // NOLINT

  /// w_N^j in canonical form; j may be negative.
  static Cyclotomic root_of_unity(int N, long j) {
    Cyclotomic r;
    r.field_ = &detail::cyclotomic_field(N);
    const long k = ((j % N) + N) % N;
    const auto& row = r.field_->reduced_powers[static_cast<std::size_t>(k)];
    r.coeffs_.assign(row.size(), Rational(0));
    for (std::size_t i = 0; i < row.size(); ++i) r.coeffs_[i] = row[i];
    r.normalize();
    return r;
  }

  /// sum_k coeffs[k] w_N^k for an arbitrary-length coefficient list.
  static Cyclotomic from_power_coefficients(int N, const std::vector<Rational>& coeffs) {
    Cyclotomic r;
    r.field_ = &detail::cyclotomic_field(N);
    r.coeffs_.assign(static_cast<std::size_t>(r.field_->degree), Rational(0));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (hyperoct::is_zero(coeffs[k])) continue;
      const auto& row = r.field_->reduced_powers[k % static_cast<std::size_t>(N)];
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] != 0) r.coeffs_[i] += coeffs[k] * row[i];
      }
    }
    r.normalize();
    return r;
  }

  int conductor() const { return field_->conductor; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!hyperoct::is_zero(c)) return false;
    }
    return true;
  }
  bool is_rational() const { return field_->conductor == 1; }

  Rational to_rational() const {
    if (!is_rational()) throw InvalidArgument("cyclotomic value is not rational: " + to_string());
    return coeffs_[0];
  }

  /// The same value expressed over Q(w_M); requires conductor() | M.
  Cyclotomic lifted_to(int M) const {
    const int N = conductor();
    if (M % N != 0) throw InvalidArgument("cannot lift conductor " + std::to_string(N) + " to " + std::to_string(M));
    if (M == N) return *this;
    Cyclotomic r;
    r.field_ = &detail::cyclotomic_field(M);
    r.coeffs_.assign(static_cast<std::size_t>(r.field_->degree), Rational(0));
    const std::size_t step = static_cast<std::size_t>(M / N);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (hyperoct::is_zero(coeffs_[k])) continue;
      const auto& row = r.field_->reduced_powers[k * step];
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] != 0) r.coeffs_[i] += coeffs_[k] * row[i];
      }
    }
    return r;  // not normalized: the caller asked for this conductor
  }

  /// Complex conjugation, the field automorphism w_N -> w_N^{-1}.
  Cyclotomic conjugate() const {
    const int N = conductor();
    std::vector<Rational> powers(static_cast<std::size_t>(N), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      powers[(static_cast<std::size_t>(N) - k) % static_cast<std::size_t>(N)] = coeffs_[k];
    }
    return from_power_coefficients(N, powers);
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& other) {
    if (other.conductor() == conductor()) {
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    } else {
      const int L = std::lcm(conductor(), other.conductor());
      *this = lifted_to(L);
      const Cyclotomic o = other.lifted_to(L);
      for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    }
    normalize();
    return *this;
  }

  Cyclotomic& operator-=(const Cyclotomic& other) { return *this += -other; }

  Cyclotomic& operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    normalize();
    return *this;
  }

  Cyclotomic& operator*=(const Cyclotomic& other) {
    *this = product(*this, other);
    return *this;
  }

  /// *this += a * b
  void add_product(const Cyclotomic& a, const Cyclotomic& b) { *this += product(a, b); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) { return product(a, b); }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
    const int L = std::lcm(a.conductor(), b.conductor());
    return a.lifted_to(L).coeffs_ == b.lifted_to(L).coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Power-basis rendering such as "1/2 + 1/2·w4" or "-w8^3".
  std::string to_string() const {
    const int N = conductor();
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (hyperoct::is_zero(c)) continue;
      const bool negative = sgn(c) < 0;
      const Rational mag = negative ? Rational(-c) : c;
      std::string term;
      if (k == 0) {
        term = hyperoct::to_string(mag);
      } else {
        std::string power = "w" + std::to_string(N);
        if (k > 1) power += "^" + std::to_string(k);
        term = (mag == 1) ? power : hyperoct::to_string(mag) + "·" + power;
      }
      if (out.empty()) {
        out = negative ? "-" + term : term;
      } else {
        out += negative ? " - " : " + ";
        out += term;
      }
    }
    return out.empty() ? "0" : out;
  }

  /// Floating-point value, for debugging output only (double precision).
  std::complex<double> approximate() const {
    const double two_pi = 2.0 * std::acos(-1.0);
    std::complex<double> z = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const double angle = two_pi * static_cast<double>(k) / conductor();
      z += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
  }

 private:
  static Cyclotomic product(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational()) return b * Rational(a.coeffs_[0]);
    if (b.is_rational()) return a * Rational(b.coeffs_[0]);
    if (a.conductor() != b.conductor()) {
      const int L = std::lcm(a.conductor(), b.conductor());
      return product(a.lifted_to(L), b.lifted_to(L));
    }
    const std::size_t d = a.coeffs_.size();
    std::vector<Rational> raw(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (hyperoct::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (hyperoct::is_zero(b.coeffs_[j])) continue;
        raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return from_power_coefficients(a.conductor(), raw);
  }

  void normalize() {
    if (field_->conductor == 1) return;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (!hyperoct::is_zero(coeffs_[i])) return;
    }
    Rational c = coeffs_[0];
    field_ = &detail::cyclotomic_field(1);
    coeffs_.assign(1, c);
  }

  const detail::CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline Cyclotomic conjugate(const Cyclotomic& c) { return c.conjugate(); }
inline Rational conjugate(const Rational& q) { return q; }
inline std::string to_string(const Cyclotomic& c) { return c.to_string(); }

/// Sum of the primitive N-th roots of unity w_N^j, gcd(N, j) = 1.
inline Cyclotomic primitive_root_sum(int N) {
  Cyclotomic s;
  for (int j = 1; j <= N; ++j) {
    if (std::gcd(N, j) == 1) s += Cyclotomic::root_of_unity(N, j);
  }
  return s;
}

}  // namespace hyperoct
