#pragma once

// Class functions on W_n, stored as one value per signed partition of n.

#include <hyperoct/centralizer.hpp>
#include <hyperoct/combinatorics.hpp>
#include <hyperoct/cyclotomic.hpp>
#include <hyperoct/errors.hpp>
#include <hyperoct/signed_permutation.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace hyperoct {

namespace detail {

struct ClassTable {
  std::vector<SignedPartition> labels;
  std::map<std::vector<int>, std::size_t> position;
  std::vector<BigInt> centralizer_orders;
};

inline const ClassTable& class_table(int n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<ClassTable>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = tables.find(n);
  if (it == tables.end()) {
    auto t = std::make_unique<ClassTable>();
    t->labels = enumerate_signed_partitions(n);
    for (std::size_t i = 0; i < t->labels.size(); ++i) {
      t->position.emplace(t->labels[i].parts(), i);
      t->centralizer_orders.push_back(centralizer_order(t->labels[i]));
    }
    it = tables.emplace(n, std::move(t)).first;
  }
  return *it->second;
}

}  // namespace detail

/// Signed partitions of n in the order used to index class function values.
inline const std::vector<SignedPartition>& class_labels(int n) { return detail::class_table(n).labels; }

inline std::size_t class_position(const SignedPartition& lambda) {
  const auto& t = detail::class_table(lambda.n());
  return t.position.at(lambda.parts());
}

class ClassFunction {
 public:
  explicit ClassFunction(int n) : n_(n), values_(class_labels(n).size()) {}
  ClassFunction(int n, std::vector<Cyclotomic> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != class_labels(n).size()) throw InvalidArgument("class function has the wrong number of values");
  }

  int n() const { return n_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const std::vector<SignedPartition>& labels() const { return class_labels(n_); }

  const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }
  Cyclotomic& operator[](std::size_t c) { return values_[c]; }
  const Cyclotomic& at(const SignedPartition& lambda) const { return values_[position(lambda)]; }
  Cyclotomic& at(const SignedPartition& lambda) { return values_[position(lambda)]; }

  /// Value at an arbitrary group element, through its signed cycle type.
  const Cyclotomic& operator()(const SignedPermutation& w) const { return at(signed_cycle_type(w)); }

  ClassFunction& operator+=(const ClassFunction& o) {
    require_same(o);
    for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += o.values_[c];
    return *this;
  }
  ClassFunction& operator-=(const ClassFunction& o) {
    require_same(o);
    for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= o.values_[c];
    return *this;
  }
  ClassFunction& operator*=(const Cyclotomic& s) {
    for (auto& v : values_) v *= s;
    return *this;
  }

  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& s) { return a *= s; }

  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    a.require_same(b);
    ClassFunction r(a.n_);
    for (std::size_t c = 0; c < a.values_.size(); ++c) r.values_[c] = a.values_[c] * b.values_[c];
    return r;
  }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.n_ == b.n_ && a.values_ == b.values_; }
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

  /// Labels of the classes where the value is nonzero.
  std::vector<SignedPartition> support() const {
    std::vector<SignedPartition> out;
    for (std::size_t c = 0; c < values_.size(); ++c) {
      if (!values_[c].is_zero()) out.push_back(labels()[c]);
    }
    return out;
  }

 private:
  std::size_t position(const SignedPartition& lambda) const {
    if (lambda.n() != n_) throw InvalidArgument("class label " + lambda.label() + " is not a signed partition of " + std::to_string(n_));
    return class_position(lambda);
  }
  void require_same(const ClassFunction& o) const {
    if (o.n_ != n_) throw InvalidArgument("class functions on different groups");
  }

  int n_;
  std::vector<Cyclotomic> values_;
};

/// u_λ: 1 on the class λ, 0 elsewhere.
inline ClassFunction u_fn(const SignedPartition& lambda) {
  ClassFunction u(lambda.n());
  u.at(lambda) = 1;
  return u;
}

inline ClassFunction trivial_character(int n) {
  ClassFunction f(n);
  for (std::size_t c = 0; c < f.values().size(); ++c) f[c] = 1;
  return f;
}

/// (-1)^{Coxeter length}, evaluated on w_λ for each class.
inline ClassFunction sign_character(int n) {
  ClassFunction f(n);
  const auto& labels = class_labels(n);
  for (std::size_t c = 0; c < labels.size(); ++c) f[c] = sign_of(make_cycles(labels[c]).w);
  return f;
}

/// ρ_n: |W_n| at the identity, 0 elsewhere.
inline ClassFunction regular_character(int n) {
  ClassFunction f(n);
  f.at(SignedPartition(std::vector<int>(static_cast<std::size_t>(n), 1))) = Cyclotomic(Rational(pow2(n) * factorial(n)));
  return f;
}

/// <χ, ψ> = (1/|W_n|) sum_w χ(w) conj(ψ(w)) = sum_λ χ(λ) conj(ψ(λ)) / |Z(w_λ)|.
inline Cyclotomic inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.n() != psi.n()) throw InvalidArgument("inner_product: class functions on different groups");
  const auto& t = detail::class_table(chi.n());
  Cyclotomic s;
  for (std::size_t c = 0; c < t.labels.size(); ++c) {
    if (chi[c].is_zero() || psi[c].is_zero()) continue;
    s += chi[c] * psi[c].conjugate() * make_rational(BigInt(1), t.centralizer_orders[c]);
  }
  return s;
}

}  // namespace hyperoct
