#pragma once

// Characters of right ideals, characters of subgroups given by a scalar
// right action, induction to W_n, the linear characters φ_λ, and θ_n.

#include <hyperoct/algebra_element.hpp>
#include <hyperoct/centralizer.hpp>
#include <hyperoct/class_function.hpp>
#include <hyperoct/cyclotomic.hpp>
#include <hyperoct/errors.hpp>
#include <hyperoct/group.hpp>
#include <hyperoct/idempotents.hpp>
#include <hyperoct/mantaci_reutenauer.hpp>

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hyperoct {

/// Littlewood: χ_e(g) = |Z(g)| sum_{g1 in ccl(g)} γ_{g1} for an idempotent
/// e = sum γ_g g. Classes of W_n are closed under inversion, so ccl(g) and
/// ccl(g^{-1}) give the same sum.
template <class Coeff>
ClassFunction chi_of_idempotent(const AlgebraElement<Coeff>& e, bool check_idempotent = true) {
  if (check_idempotent && !is_idempotent(e)) throw NotIdempotent("chi_of_idempotent: element is not idempotent");
  const auto& G = e.group();
  const auto& labels = class_labels(G.n());
  std::vector<Cyclotomic> sums(labels.size());
  for (const auto& [idx, c] : e.terms()) sums[G.class_of(idx)] += Cyclotomic(c);
  ClassFunction chi(G.n());
  for (std::size_t c = 0; c < labels.size(); ++c) chi[c] = sums[c] * Rational(centralizer_order(labels[c]));
  return chi;
}

/// A function on a subgroup H of W_n: parallel lists of element indices
/// (sorted) and values.
struct SubgroupFunction {
  const HyperoctahedralGroup* group = nullptr;
  std::vector<HyperoctahedralGroup::Index> elements;
  std::vector<Cyclotomic> values;

  std::size_t order() const { return elements.size(); }

  const Cyclotomic& value(HyperoctahedralGroup::Index idx) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), idx);
    if (it == elements.end() || *it != idx) throw InvalidArgument("element is not in the subgroup");
    return values[static_cast<std::size_t>(it - elements.begin())];
  }
};

/// The constant function 1 on a list of elements of W_n.
inline SubgroupFunction trivial_on(int n, const std::vector<SignedPermutation>& H) {
  SubgroupFunction f;
  f.group = &hyperoctahedral_group(n);
  for (const auto& h : H) f.elements.push_back(f.group->index_of(h));
  std::sort(f.elements.begin(), f.elements.end());
  f.values.assign(f.elements.size(), Cyclotomic(1));
  return f;
}

/// Ind_H^{W_n}(φ)(g) = (1/|H|) sum_{x in W_n, x^{-1} g x in H} φ(x^{-1} g x).
/// Throws InvalidArgument if H is not closed under multiplication.
inline ClassFunction induce(const SubgroupFunction& phi) {
  const auto& G = *phi.group;
  std::vector<long> where(G.order(), -1);
  for (std::size_t i = 0; i < phi.elements.size(); ++i) where[phi.elements[i]] = static_cast<long>(i);
  for (auto a : phi.elements) {
    for (auto b : phi.elements) {
      if (where[G.multiply(a, b)] < 0) throw InvalidArgument("induce: subgroup is not closed under multiplication");
    }
  }
  ClassFunction out(G.n());
  const auto& labels = class_labels(G.n());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const auto g = G.class_members(G.class_index(labels[c])).front();
    std::vector<long> hits(phi.elements.size(), 0);
    for (HyperoctahedralGroup::Index x = 0; x < G.order(); ++x) {
      const auto conj = G.multiply(G.inverse(x), G.multiply(g, x));
      if (where[conj] >= 0) ++hits[static_cast<std::size_t>(where[conj])];
    }
    Cyclotomic s;
    for (std::size_t i = 0; i < hits.size(); ++i) {
      if (hits[i]) s += phi.values[i] * Rational(hits[i]);
    }
    out[c] = s * make_rational(1, static_cast<long>(phi.order()));
  }
  return out;
}

/// The scalar by which g acts on e from the right, if e g is a multiple of
/// e; the candidates are the |g|-th roots of unity.
template <class Coeff>
std::optional<Cyclotomic> right_scalar(const AlgebraElement<Coeff>& e, const SignedPermutation& g) {
  const CyclotomicElement ce = [&] {
    if constexpr (std::is_same_v<Coeff, Rational>) {
      return to_cyclotomic(e);
    } else {
      return e;
    }
  }();
  const CyclotomicElement eg = ce.right_multiply(g);
  const long m = g.order();
  for (long k = 0; k < m; ++k) {
    const Cyclotomic s = Cyclotomic::root_of_unity(static_cast<int>(m), k);
    if (ce * s == eg) return s;
  }
  return std::nullopt;
}

/// The character of the one-dimensional module spanned by e for the
/// subgroup generated by gens, read off from the right action. Scalars of
/// the generators are found directly; every other element gets the product
/// along a breadth-first path, and then e z = s(z) e is checked for every z.
inline SubgroupFunction scalar_character(const CyclotomicElement& e, const std::vector<SignedPermutation>& gens) {
  if (e.is_zero()) throw ScalarActionFailure("scalar_character: zero element");
  const auto& G = e.group();
  std::vector<Cyclotomic> gen_scalar;
  for (const auto& g : gens) {
    auto s = right_scalar(e, g);
    if (!s) throw ScalarActionFailure(g.one_row() + " does not act on the element as a scalar");
    gen_scalar.push_back(*s);
  }
  std::map<HyperoctahedralGroup::Index, Cyclotomic> found;
  std::deque<HyperoctahedralGroup::Index> queue;
  found.emplace(G.identity_index(), Cyclotomic(1));
  queue.push_back(G.identity_index());
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto y = G.multiply(x, G.index_of(gens[i]));
      if (found.count(y)) continue;
      found.emplace(y, found.at(x) * gen_scalar[i]);
      queue.push_back(y);
    }
  }
  SubgroupFunction f;
  f.group = &G;
  for (auto& [idx, s] : found) {
    if (e.right_multiply(idx) != e * s) {
      throw ScalarActionFailure(G.element(idx).one_row() + " does not act on the element by " + s.to_string());
    }
    f.elements.push_back(idx);
    f.values.push_back(s);
  }
  return f;
}

/// One row of the φ_λ table: a centralizer generator, its order, the value
/// computed from the action on ẽ_λ and the value expected for that generator.
struct PhiGeneratorValue {
  CentralizerGenerator generator;
  long order;
  Cyclotomic computed;
  Cyclotomic expected;
};

struct PhiData {
  SignedPartition lambda;
  std::vector<PhiGeneratorValue> generators;
  SubgroupFunction character;  // φ_λ on all of Z(w_λ)
};

/// c_i -> w_{|c_i|}, d_i -> w_{|d_i|}, w_{0,Λ_i} and y_i -> 1.
inline Cyclotomic phi_expected(const CentralizerGenerator& g) {
  switch (g.kind) {
    case GeneratorKind::Cycle:
    case GeneratorKind::NegativeCycle: {
      const long m = g.element.order();
      return Cyclotomic::root_of_unity(static_cast<int>(m), 1);
    }
    case GeneratorKind::BlockLongest:
    case GeneratorKind::BlockSwap: return Cyclotomic(1);
  }
  return Cyclotomic(1);
}

/// φ_λ computed from the right action of Z(w_λ) on ẽ_λ. Throws
/// ScalarActionFailure if some element does not act as a scalar and
/// AssertionFailure if the generated subgroup has the wrong order.
inline PhiData phi_fn(const SignedPartition& lambda) {
  const auto gens = centralizer_generators(lambda);
  std::vector<SignedPermutation> elems;
  for (const auto& g : gens) elems.push_back(g.element);
  const CyclotomicElement et = e_tilde_elem(lambda);
  PhiData out{lambda, {}, scalar_character(et, elems)};
  if (BigInt(static_cast<unsigned long>(out.character.order())) != centralizer_order(lambda)) {
    throw AssertionFailure("centralizer generators of (" + lambda.label() + ") generate a group of order " +
                           std::to_string(out.character.order()) + ", expected " + centralizer_order(lambda).get_str());
  }
  const auto& G = et.group();
  for (const auto& g : gens) {
    out.generators.push_back({g, g.element.order(), out.character.value(G.index_of(g.element)), phi_expected(g)});
  }
  return out;
}

/// Ind_{Z(w_λ)}^{W_n}(φ_λ).
inline ClassFunction induced_phi(const SignedPartition& lambda) { return induce(phi_fn(lambda).character); }

/// Ind_{W_p}^{W_n}(1), counting x with x^{-1} g x in W_p.
inline ClassFunction permutation_character(const SignedComposition& p) {
  const auto& G = hyperoctahedral_group(p.n());
  const auto& labels = class_labels(p.n());
  const BigInt order = young_subgroup_order(p);
  ClassFunction out(p.n());
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const auto g = G.class_members(G.class_index(labels[c])).front();
    long hits = 0;
    for (HyperoctahedralGroup::Index x = 0; x < G.order(); ++x) {
      const auto conj = G.multiply(G.inverse(x), G.multiply(g, x));
      if (in_young_subgroup(p, G.element(conj))) ++hits;
    }
    out[c] = Cyclotomic(make_rational(BigInt(hits), order));
  }
  return out;
}

namespace detail {

inline const std::vector<ClassFunction>& permutation_characters(int n) {
  const auto& B = mr_basis(n);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<ClassFunction>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto v = std::make_unique<std::vector<ClassFunction>>();
    for (const auto& p : B.compositions()) v->push_back(permutation_character(p));
    it = cache.emplace(n, std::move(v)).first;
  }
  return *it->second;
}

}  // namespace detail

/// θ_n(u) = sum_p a_p Ind_{W_p}^{W_n}(1) where u = sum_p a_p x_p.
/// Throws NotInSubalgebra when u is not in the span of the x_p.
inline ClassFunction theta(const RationalElement& u) {
  const auto& B = mr_basis(u.n());
  const auto a = B.coordinates(u);
  const auto& chars = detail::permutation_characters(u.n());
  ClassFunction out(u.n());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!is_zero(a[j])) out += chars[j] * Cyclotomic(a[j]);
  }
  return out;
}

}  // namespace hyperoct
