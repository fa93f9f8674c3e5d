#pragma once

// The idempotents r_P, ε_P^±, ζ_g, ζ̃_g and the elements e_p, E_λ, ẽ_λ built
// from them, plus the concatenation-product construction I_p used as an
// independent check on e_p.

#include <hyperoct/algebra_element.hpp>
#include <hyperoct/centralizer.hpp>
#include <hyperoct/combinatorics.hpp>
#include <hyperoct/cyclotomic.hpp>
#include <hyperoct/errors.hpp>
#include <hyperoct/mantaci_reutenauer.hpp>
#include <hyperoct/signed_permutation.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace hyperoct {

/// Largest n accepted by vazirani_oracle.
inline constexpr int kOracleLimit = 5;

/// Moves an element of the group algebra of W_m onto the block P of [n]:
/// w becomes the signed permutation acting as w on P (relabelled in
/// increasing order) and fixing everything else.
inline RationalElement transport(const RationalElement& u, int n, const Block& P) {
  if (u.n() != P.size() || P.first < 1 || P.last > n) throw InvalidArgument("transport: block does not fit");
  const auto& G = hyperoctahedral_group(n);
  std::vector<RationalElement::Term> terms;
  terms.reserve(u.size());
  const int shift = P.first - 1;
  for (const auto& [idx, c] : u.terms()) {
    const SignedPermutation& w = u.group().element(idx);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    for (int t = 1; t <= P.size(); ++t) {
      const int v = w(t);
      img[static_cast<std::size_t>(shift + t - 1)] = v > 0 ? v + shift : v - shift;
    }
    terms.emplace_back(G.index_of(SignedPermutation(std::move(img))), c);
  }
  return RationalElement(G, std::move(terms));
}

/// D_{⊆A} = sum of w in S_m with D(w) ⊆ A, as an element of the group algebra of W_m.
inline RationalElement descent_class_sum(int m, const std::set<int>& A) {
  const auto& G = hyperoctahedral_group(m);
  const Block whole{1, m};
  std::vector<SignedPermutation> elems;
  for (const auto& w : G.elements()) {
    if (!w.in_symmetric_group()) continue;
    const auto D = classical_descent_set(w, whole);
    if (std::includes(A.begin(), A.end(), D.begin(), D.end())) elems.push_back(w);
  }
  return RationalElement::sum_of(m, elems);
}

/// r_m = sum_{A ⊆ [m-1]} (-1)^{|A|}/(|A|+1) D_{⊆A}.
inline RationalElement reutenauer_idem(int m) {
  RationalElement r(m);
  const int subsets = 1 << (m - 1);
  for (int mask = 0; mask < subsets; ++mask) {
    std::set<int> A;
    for (int i = 0; i < m - 1; ++i) {
      if ((mask >> i) & 1) A.insert(i + 1);
    }
    const long size = static_cast<long>(A.size());
    r += descent_class_sum(m, A) * make_rational(size % 2 == 0 ? 1 : -1, size + 1);
  }
  return r;
}

/// r_m = sum_{p in C(m)} (-1)^{k(p)-1}/k(p) x_p^v, computed from descent shapes.
inline RationalElement reutenauer_idem_via_compositions(int m) {
  RationalElement r(m);
  for (const auto& p : enumerate_compositions(m)) {
    const long k = p.length();
    r += x_v_elem(p) * make_rational(k % 2 == 1 ? 1 : -1, k);
  }
  return r;
}

/// r_P on the block P of [n].
inline RationalElement reutenauer_idem(int n, const Block& P) { return transport(reutenauer_idem(P.size()), n, P); }

/// ε_P^± = (id ± w_{0,P}) / 2; sign is +1 or -1.
inline RationalElement eps_elem(int n, const Block& P, int sign) {
  if (sign != 1 && sign != -1) throw InvalidArgument("eps_elem: sign must be +1 or -1");
  RationalElement e = RationalElement::identity(n) * make_rational(1, 2);
  e += RationalElement::basis(longest_element(n, P), make_rational(sign, 2));
  return e;
}

namespace detail {

// (1/m) sum_{j=1}^m w_N^{-s j} g^j with m = |g|.
inline CyclotomicElement root_projector(const SignedPermutation& g, int N, long s) {
  const long m = g.order();
  const auto& G = hyperoctahedral_group(g.n());
  std::vector<CyclotomicElement::Term> terms;
  SignedPermutation power = g;
  for (long j = 1; j <= m; ++j) {
    terms.emplace_back(G.index_of(power), Cyclotomic::root_of_unity(N, -s * j) * make_rational(1, m));
    power = power * g;
  }
  return CyclotomicElement(G, std::move(terms));
}

}  // namespace detail

/// ζ_g = (1/m) sum_j w_m^{-j} g^j, m = |g|.
inline CyclotomicElement zeta(const SignedPermutation& g) {
  const long m = g.order();
  return detail::root_projector(g, static_cast<int>(m), 1);
}

/// ζ̃_g = (1/m) sum_j (w_m^{(m+1)/2})^{-j} g^j; needs |g| odd.
inline CyclotomicElement zeta_tilde(const SignedPermutation& g) {
  const long m = g.order();
  if (m % 2 == 0) {
    throw NotAvailable("zeta_tilde needs an element of odd order; " + g.one_row() + " has order " + std::to_string(m));
  }
  return detail::root_projector(g, static_cast<int>(m), (m + 1) / 2);
}

/// e_p = x_{|p|} ε_{P_1}^{ξ_1} r_{P_1} ... ε_{P_k}^{ξ_k} r_{P_k}.
inline RationalElement e_elem(const SignedComposition& p) {
  const int n = p.n();
  RationalElement e = x_elem(abs_composition(p));
  for (int i = 0; i < p.length(); ++i) {
    const Block B = p.block(i);
    e = e * eps_elem(n, B, p.part(i) > 0 ? 1 : -1);
    e = e * reutenauer_idem(n, B);
  }
  return e;
}

/// Distinct signed compositions p with ←p = λ, in lexicographic order of parts.
inline std::vector<SignedComposition> rearrangements(const SignedPartition& lambda) {
  std::vector<int> parts = lambda.parts();
  std::sort(parts.begin(), parts.end());
  std::vector<SignedComposition> out;
  do {
    out.emplace_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

/// E_λ = (1/(a+b)!) sum_{←p = λ} e_p.
inline RationalElement E_elem(const SignedPartition& lambda) {
  RationalElement E(lambda.n());
  for (const auto& p : rearrangements(lambda)) E += e_elem(p);
  E *= make_rational(BigInt(1), factorial(lambda.length()));
  return E;
}

/// f_i for the (0-based) part i of λ.
inline CyclotomicElement f_elem(const SignedPartition& lambda, int i) {
  const int n = lambda.n();
  const Block B = lambda.block(i);
  const auto cyc = make_cycles(lambda);
  const auto k = static_cast<std::size_t>(i);
  if (lambda.part(i) > 0) return to_cyclotomic(eps_elem(n, B, 1)) * zeta(cyc.c[k]);
  if (B.size() % 2 == 1) return to_cyclotomic(eps_elem(n, B, -1)) * zeta_tilde(cyc.c[k]);
  return zeta(cyc.d[k]);
}

/// ẽ_λ = x_{|λ|} f_1 ... f_{a+b}.
inline CyclotomicElement e_tilde_elem(const SignedPartition& lambda) {
  CyclotomicElement e = to_cyclotomic(x_elem(abs_composition(lambda)));
  for (int i = 0; i < lambda.length(); ++i) e = e * f_elem(lambda, i);
  return e;
}

/// I_p as a sum over ordered set partitions (J_1, ..., J_k) of [n] with
/// |J_i| = |p_i| of concatenation products of w_{J_i} ε^{ξ_i} r_{|p_i|}.
/// Nothing here uses X_p or multiplication in the group algebra of W_n.
inline RationalElement vazirani_oracle(const SignedComposition& p) {
  const int n = p.n();
  if (n > kOracleLimit) {
    throw LimitExceeded("vazirani_oracle is limited to n <= " + std::to_string(kOracleLimit));
  }
  const auto& G = hyperoctahedral_group(n);
  std::vector<int> sizes;
  std::vector<RationalElement> local;
  for (int x : p.parts()) {
    const int m = std::abs(x);
    sizes.push_back(m);
    local.push_back(eps_elem(m, Block{1, m}, x > 0 ? 1 : -1) * reutenauer_idem(m));
  }
  const auto blocks = p.blocks();
  std::vector<RationalElement::Term> terms;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (const auto& J : ordered_set_partitions(sizes)) {
    // recursive choice of one term from each factor
    auto rec = [&](auto&& self, std::size_t i, const Rational& coeff) -> void {
      if (i == local.size()) {
        terms.emplace_back(G.index_of(SignedPermutation(img)), coeff);
        return;
      }
      const auto& factor = local[i];
      for (const auto& [idx, c] : factor.terms()) {
        const SignedPermutation& x = factor.group().element(idx);
        for (int t = 1; t <= sizes[i]; ++t) {
          const int v = x(t);
          const int target = J[i][static_cast<std::size_t>(std::abs(v) - 1)];
          img[static_cast<std::size_t>(blocks[i].first - 1 + t - 1)] = v > 0 ? target : -target;
        }
        self(self, i + 1, Rational(coeff * c));
      }
    };
    rec(rec, 0, Rational(1));
  }
  return RationalElement(G, std::move(terms));
}

/// {w_{(J_1, ..., J_k)}}: the permutations sending P_i increasingly onto J_i.
inline std::vector<SignedPermutation> concatenation_reps(const SignedComposition& p) {
  std::vector<int> sizes;
  for (int x : p.parts()) sizes.push_back(std::abs(x));
  const auto blocks = p.blocks();
  std::vector<SignedPermutation> out;
  for (const auto& J : ordered_set_partitions(sizes)) {
    std::vector<int> img(static_cast<std::size_t>(p.n()));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (int t = 0; t < blocks[i].size(); ++t) img[static_cast<std::size_t>(blocks[i].first - 1 + t)] = J[i][static_cast<std::size_t>(t)];
    }
    out.emplace_back(std::move(img));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperoct
