#pragma once

// Elements of the group algebra of W_n: sparse coefficient lists keyed by
// the lexicographic index of a group element.

#include <hyperoct/cyclotomic.hpp>
#include <hyperoct/errors.hpp>
#include <hyperoct/group.hpp>
#include <hyperoct/rational.hpp>
#include <hyperoct/signed_permutation.hpp>

#include <gmp.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace hyperoct {

template <class Coeff>
class AlgebraElement;

namespace detail {

using Index = HyperoctahedralGroup::Index;

template <class Coeff>
using TermList = std::vector<std::pair<Index, Coeff>>;

inline BigInt common_denominator(const TermList<Rational>& terms) {
  BigInt L = 1;
  for (const auto& [idx, c] : terms) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  return L;
}

// Integer numerators over a common denominator, so the inner loop is a
// single mpz_addmul per pair of terms.
inline TermList<Rational> convolve(const HyperoctahedralGroup& G, const TermList<Rational>& u, const TermList<Rational>& v) {
  const BigInt Lu = common_denominator(u);
  const BigInt Lv = common_denominator(v);
  std::vector<BigInt> nu;
  std::vector<BigInt> nv;
  nu.reserve(u.size());
  nv.reserve(v.size());
  for (const auto& [idx, c] : u) nu.emplace_back(c.get_num() * (Lu / c.get_den()));
  for (const auto& [idx, c] : v) nv.emplace_back(c.get_num() * (Lv / c.get_den()));

  std::vector<BigInt> acc(G.order());
  std::vector<char> touched(G.order(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Index a = u[i].first;
    for (std::size_t j = 0; j < v.size(); ++j) {
      const Index k = G.multiply(a, v[j].first);
      mpz_addmul(acc[k].get_mpz_t(), nu[i].get_mpz_t(), nv[j].get_mpz_t());
      touched[k] = 1;
    }
  }
  const BigInt L = Lu * Lv;
  TermList<Rational> out;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (!touched[k] || sgn(acc[k]) == 0) continue;
    Rational q(acc[k], L);
    q.canonicalize();
    out.emplace_back(static_cast<Index>(k), std::move(q));
  }
  return out;
}

// Everything is lifted to one conductor M; products are accumulated in the
// power basis with exponents folded mod M and reduced once per output term.
inline TermList<Cyclotomic> convolve(const HyperoctahedralGroup& G, const TermList<Cyclotomic>& u, const TermList<Cyclotomic>& v) {
  int M = 1;
  for (const auto& [idx, c] : u) M = std::lcm(M, c.conductor());
  for (const auto& [idx, c] : v) M = std::lcm(M, c.conductor());
  auto lift = [M](const TermList<Cyclotomic>& t) {
    std::vector<std::vector<std::pair<int, Rational>>> out;
    out.reserve(t.size());
    for (const auto& [idx, c] : t) {
      const Cyclotomic l = c.lifted_to(M);
      std::vector<std::pair<int, Rational>> sparse;
      for (std::size_t e = 0; e < l.coefficients().size(); ++e) {
        if (!is_zero(l.coefficients()[e])) sparse.emplace_back(static_cast<int>(e), l.coefficients()[e]);
      }
      out.push_back(std::move(sparse));
    }
    return out;
  };
  const auto lu = lift(u);
  const auto lv = lift(v);

  std::vector<std::vector<Rational>> acc(G.order());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      const Index k = G.multiply(u[i].first, v[j].first);
      auto& slot = acc[k];
      if (slot.empty()) slot.assign(static_cast<std::size_t>(M), Rational(0));
      for (const auto& [ea, ca] : lu[i]) {
        for (const auto& [eb, cb] : lv[j]) slot[static_cast<std::size_t>((ea + eb) % M)] += ca * cb;
      }
    }
  }
  TermList<Cyclotomic> out;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k].empty()) continue;
    Cyclotomic c = Cyclotomic::from_power_coefficients(M, acc[k]);
    if (!c.is_zero()) out.emplace_back(static_cast<Index>(k), std::move(c));
  }
  return out;
}

}  // namespace detail

/// A finitely supported map W_n -> Coeff with the convolution product.
/// Coeff is Rational or Cyclotomic.
template <class Coeff>
class AlgebraElement {
 public:
  using Index = HyperoctahedralGroup::Index;
  using Term = std::pair<Index, Coeff>;

  explicit AlgebraElement(const HyperoctahedralGroup& G) : G_(&G) {}
  explicit AlgebraElement(int n) : G_(&hyperoctahedral_group(n)) {}

  /// Terms may be unsorted and repeated; they are merged and zeros dropped.
  AlgebraElement(const HyperoctahedralGroup& G, std::vector<Term> terms) : G_(&G), terms_(std::move(terms)) { canonicalize(); }

  static AlgebraElement zero(int n) { return AlgebraElement(n); }

  static AlgebraElement identity(int n) { return basis(SignedPermutation::identity(n)); }

  static AlgebraElement basis(const SignedPermutation& w, Coeff c = Coeff(1)) {
    const auto& G = hyperoctahedral_group(w.n());
    AlgebraElement e(G);
    if (!hyperoct::is_zero(c)) e.terms_.emplace_back(G.index_of(w), std::move(c));
    return e;
  }

  /// Sum of the given elements, each with coefficient 1.
  static AlgebraElement sum_of(int n, const std::vector<SignedPermutation>& elems) {
    const auto& G = hyperoctahedral_group(n);
    std::vector<Term> terms;
    terms.reserve(elems.size());
    for (const auto& w : elems) terms.emplace_back(G.index_of(w), Coeff(1));
    return AlgebraElement(G, std::move(terms));
  }

  int n() const { return G_->n(); }
  const HyperoctahedralGroup& group() const { return *G_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(Index idx) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx, [](const Term& t, Index i) { return t.first < i; });
    if (it == terms_.end() || it->first != idx) return Coeff(0);
    return it->second;
  }
  Coeff coefficient(const SignedPermutation& w) const { return coefficient(G_->index_of(w)); }

  /// Dense coefficient vector indexed by group element.
  std::vector<Coeff> dense() const {
    std::vector<Coeff> out(G_->order(), Coeff(0));
    for (const auto& [idx, c] : terms_) out[idx] = c;
    return out;
  }

  AlgebraElement& operator+=(const AlgebraElement& other) { return merge(other, false); }
  AlgebraElement& operator-=(const AlgebraElement& other) { return merge(other, true); }

  AlgebraElement& operator*=(const Coeff& c) {
    if (hyperoct::is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second = t.second * c;
    drop_zeros();
    return *this;
  }

  AlgebraElement operator-() const {
    AlgebraElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Coeff& c) { return a *= c; }
  friend AlgebraElement operator*(const Coeff& c, AlgebraElement a) { return a *= c; }

  friend AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) {
    u.require_same_group(v);
    AlgebraElement r(*u.G_);
    if (u.is_zero() || v.is_zero()) return r;
    r.terms_ = detail::convolve(*u.G_, u.terms_, v.terms_);
    return r;
  }

  /// this * g for a single group element.
  AlgebraElement right_multiply(const SignedPermutation& g) const { return right_multiply(G_->index_of(g)); }
  AlgebraElement right_multiply(Index g) const {
    AlgebraElement r(*G_);
    r.terms_.reserve(terms_.size());
    for (const auto& [idx, c] : terms_) r.terms_.emplace_back(G_->multiply(idx, g), c);
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    return r;
  }

  /// g * this for a single group element.
  AlgebraElement left_multiply(const SignedPermutation& g) const { return left_multiply(G_->index_of(g)); }
  AlgebraElement left_multiply(Index g) const {
    AlgebraElement r(*G_);
    r.terms_.reserve(terms_.size());
    for (const auto& [idx, c] : terms_) r.terms_.emplace_back(G_->multiply(g, idx), c);
    std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.G_ == b.G_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

 private:
  void require_same_group(const AlgebraElement& other) const {
    if (G_ != other.G_) {
      throw InvalidArgument("group algebra elements of W_" + std::to_string(n()) + " and W_" + std::to_string(other.n()));
    }
  }

  AlgebraElement& merge(const AlgebraElement& other, bool subtract) {
    require_same_group(other);
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
      if (j == other.terms_.size() || (i < terms_.size() && terms_[i].first < other.terms_[j].first)) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || other.terms_[j].first < terms_[i].first) {
        out.emplace_back(other.terms_[j].first, subtract ? Coeff(-other.terms_[j].second) : other.terms_[j].second);
        ++j;
      } else {
        Coeff c = subtract ? Coeff(terms_[i].second - other.terms_[j].second) : Coeff(terms_[i].second + other.terms_[j].second);
        if (!hyperoct::is_zero(c)) out.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second = out.back().second + t.second;
      } else {
        out.push_back(std::move(t));
      }
    }
    terms_ = std::move(out);
    drop_zeros();
  }

  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return hyperoct::is_zero(t.second); }),
                 terms_.end());
  }

  const HyperoctahedralGroup* G_;
  std::vector<Term> terms_;
};

using RationalElement = AlgebraElement<Rational>;
using CyclotomicElement = AlgebraElement<Cyclotomic>;

inline CyclotomicElement to_cyclotomic(const RationalElement& u) {
  std::vector<CyclotomicElement::Term> terms;
  terms.reserve(u.size());
  for (const auto& [idx, c] : u.terms()) terms.emplace_back(idx, Cyclotomic(c));
  return CyclotomicElement(u.group(), std::move(terms));
}

/// Throws NotAvailable if some coefficient is irrational.
inline RationalElement to_rational(const CyclotomicElement& u) {
  std::vector<RationalElement::Term> terms;
  terms.reserve(u.size());
  for (const auto& [idx, c] : u.terms()) {
    if (!c.is_rational()) throw NotAvailable("element has an irrational coefficient " + c.to_string());
    terms.emplace_back(idx, c.to_rational());
  }
  return RationalElement(u.group(), std::move(terms));
}

/// Coefficient of the identity.
template <class Coeff>
Coeff identity_coefficient(const AlgebraElement<Coeff>& u) {
  return u.coefficient(u.group().identity_index());
}

template <class Coeff>
bool is_idempotent(const AlgebraElement<Coeff>& u) {
  return u * u == u;
}

}  // namespace hyperoct
