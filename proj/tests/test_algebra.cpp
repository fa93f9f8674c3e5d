#include <hyperoct/algebra_element.hpp>
#include <hyperoct/idempotents.hpp>
#include <hyperoct/linear_algebra.hpp>
#include <hyperoct/mantaci_reutenauer.hpp>

#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <random>

using namespace hyperoct;

namespace {

template <class Coeff>
using Dict = std::map<SignedPermutation, Coeff>;

template <class Coeff>
Dict<Coeff> as_dict(const AlgebraElement<Coeff>& u) {
  Dict<Coeff> d;
  for (const auto& [idx, c] : u.terms()) d.emplace(u.group().element(idx), c);
  return d;
}

// Convolution straight from the definition, on permutations.
template <class Coeff>
Dict<Coeff> naive_product(const Dict<Coeff>& a, const Dict<Coeff>& b) {
  Dict<Coeff> out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      auto [it, fresh] = out.emplace(x * y, cx * cy);
      if (!fresh) it->second = it->second + cx * cy;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == Coeff(0) ? out.erase(it) : std::next(it);
  }
  return out;
}

RationalElement random_rational_element(std::mt19937& rng, int n, int terms) {
  const auto& G = hyperoctahedral_group(n);
  std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  RationalElement u(n);
  for (int t = 0; t < terms; ++t) u += RationalElement::basis(G.element(pick(rng)), make_rational(num(rng), den(rng)));
  return u;
}

CyclotomicElement random_cyclotomic_element(std::mt19937& rng, int n, int terms) {
  const auto& G = hyperoctahedral_group(n);
  std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
  std::uniform_int_distribution<long> num(-3, 3), power(0, 11);
  CyclotomicElement u(n);
  for (int t = 0; t < terms; ++t) {
    const Cyclotomic c = Cyclotomic::root_of_unity(12, power(rng)) * Rational(num(rng));
    u += CyclotomicElement::basis(G.element(pick(rng)), c);
  }
  return u;
}

// Minimal-length coset representatives of W_p, found by brute force:
// lengths from breadth-first search, cosets from the explicit subgroup.
std::set<SignedPermutation> brute_min_reps(const SignedComposition& p) {
  const int n = p.n();
  std::map<SignedPermutation, int> dist;
  std::deque<SignedPermutation> queue{SignedPermutation::identity(n)};
  dist[queue.front()] = 0;
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop_front();
    for (const auto& s : coxeter_generators(n)) {
      if (dist.emplace(w * s, dist[w] + 1).second) queue.push_back(w * s);
    }
  }
  const auto H = young_subgroup(p);
  std::set<SignedPermutation> seen, reps;
  for (const auto& [w, d] : dist) {
    if (seen.count(w)) continue;
    SignedPermutation best = w;
    for (const auto& h : H) {
      const auto v = w * h;
      seen.insert(v);
      if (dist[v] < dist[best]) best = v;
    }
    reps.insert(best);
  }
  return reps;
}

}  // namespace

TEST(AlgebraElement, ProductMatchesNaiveConvolution) {
  std::mt19937 rng(5);
  for (int n : {1, 2, 3, 4}) {
    for (int t = 0; t < 10; ++t) {
      const auto a = random_rational_element(rng, n, 12);
      const auto b = random_rational_element(rng, n, 12);
      EXPECT_EQ(as_dict(a * b), naive_product(as_dict(a), as_dict(b)));
      const auto x = random_cyclotomic_element(rng, n, 8);
      const auto y = random_cyclotomic_element(rng, n, 8);
      EXPECT_EQ(as_dict(x * y), naive_product(as_dict(x), as_dict(y)));
    }
  }
}

TEST(AlgebraElement, RingAxioms) {
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_rational_element(rng, 3, 10);
    const auto b = random_rational_element(rng, 3, 10);
    const auto c = random_rational_element(rng, 3, 10);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * RationalElement::identity(3), a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(to_rational(to_cyclotomic(a)), a);
  }
}

TEST(AlgebraElement, SparseStorage) {
  const auto s1 = simple_transposition(2, 1);
  auto u = RationalElement::basis(s1, Rational(0));
  EXPECT_TRUE(u.is_zero());
  u = RationalElement::basis(s1) - RationalElement::basis(s1);
  EXPECT_EQ(u.size(), 0u);
  const auto v = RationalElement::identity(2) + RationalElement::basis(s1, make_rational(-1, 2));
  EXPECT_EQ(v.size(), 2u);
  EXPECT_EQ(v.coefficient(s1), make_rational(-1, 2));
  EXPECT_EQ(v.coefficient(sign_change(2, 1)), 0);
  for (std::size_t i = 1; i < v.terms().size(); ++i) EXPECT_LT(v.terms()[i - 1].first, v.terms()[i].first);
  const auto w4 = CyclotomicElement::basis(s1, Cyclotomic::root_of_unity(4, 1));
  EXPECT_THROW(to_rational(w4), NotAvailable);
}

TEST(MantaciReutenauer, YoungSubgroups) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(young_subgroup(SignedComposition({n})).size(), hyperoctahedral_group(n).order());
    const auto S = young_subgroup(SignedComposition({-n}));
    EXPECT_EQ(BigInt(static_cast<unsigned long>(S.size())), factorial(n));
    for (const auto& w : S) EXPECT_TRUE(w.in_symmetric_group());
    for (const auto& p : enumerate_signed_compositions(n)) {
      EXPECT_EQ(BigInt(static_cast<unsigned long>(young_subgroup(p).size())), young_subgroup_order(p));
    }
  }
}

TEST(MantaciReutenauer, MinimalCosetRepresentatives) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_signed_compositions(n)) {
      const auto reps = min_coset_reps(p);
      EXPECT_EQ(std::set<SignedPermutation>(reps.begin(), reps.end()), brute_min_reps(p)) << p.label();
      EXPECT_EQ(BigInt(static_cast<unsigned long>(reps.size())) * young_subgroup_order(p), hyperoctahedral_order(n));
    }
  }
  EXPECT_EQ(min_coset_reps(SignedComposition({3})), std::vector<SignedPermutation>{SignedPermutation::identity(3)});
  const auto x11 = x_elem(parse_composition("1,1"));
  EXPECT_EQ(x11, RationalElement::identity(2) + RationalElement::basis(simple_transposition(2, 1)));
}

TEST(MantaciReutenauer, PositiveXvIsDescentClassSum) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_compositions(n)) {
      const auto A = psi(p);
      std::vector<SignedPermutation> elems;
      for (const auto& w : enumerate_group(n)) {
        if (!w.in_symmetric_group()) continue;
        bool inside = true;
        for (int i = 1; i < n; ++i) {
          if (w(i) > w(i + 1) && !A.count(i)) inside = false;
        }
        if (inside) elems.push_back(w);
      }
      EXPECT_EQ(x_v_elem(p), RationalElement::sum_of(n, elems)) << p.label();
    }
  }
}

TEST(MantaciReutenauer, ExpressInBasis) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& q : enumerate_signed_compositions(n)) {
      const auto a = express_in_mr_basis(x_elem(q));
      ASSERT_EQ(a.size(), 1u);
      EXPECT_EQ(a.begin()->first, q);
      EXPECT_EQ(a.begin()->second, 1);
    }
    for (const auto& l : enumerate_signed_partitions(n)) {
      const auto E = E_elem(l);
      RationalElement back(n);
      for (const auto& [q, c] : express_in_mr_basis(E)) back += x_elem(q) * c;
      EXPECT_EQ(back, E);
    }
  }
  // δ_w lies in the span exactly when appending it to the x_p keeps the rank
  const auto& G = hyperoctahedral_group(2);
  const auto comps = enumerate_signed_compositions(2);
  int outside = 0;
  for (const auto& w : G.elements()) {
    RationalMatrix M(comps.size() + 1, G.order());
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const auto x = x_elem(comps[j]);
      for (const auto& [idx, c] : x.terms()) M.at(j, idx) = c;
    }
    M.at(comps.size(), G.index_of(w)) = 1;
    if (rank(M) > comps.size()) {
      ++outside;
      EXPECT_THROW(express_in_mr_basis(RationalElement::basis(w)), NotInSubalgebra) << w.one_row();
    } else {
      EXPECT_NO_THROW(express_in_mr_basis(RationalElement::basis(w))) << w.one_row();
    }
  }
  EXPECT_EQ(outside, 4);
  EXPECT_THROW(express_in_mr_basis(RationalElement::basis(sign_change(2, 1))), NotInSubalgebra);
  EXPECT_TRUE(mr_basis(4).independent());
}

TEST(Idempotents, Reutenauer) {
  EXPECT_EQ(reutenauer_idem(1), RationalElement::identity(1));
  const auto r2 = RationalElement::identity(2) * make_rational(1, 2) +
                  RationalElement::basis(simple_transposition(2, 1), make_rational(-1, 2));
  EXPECT_EQ(reutenauer_idem(2), r2);
  for (int m = 1; m <= 5; ++m) {
    const auto r = reutenauer_idem(m);
    EXPECT_EQ(r, reutenauer_idem_via_compositions(m)) << m;
    if (m <= 4) {
      EXPECT_TRUE(is_idempotent(r)) << m;
    }
  }
  // transport onto a block of a larger group is still idempotent
  const auto rb = reutenauer_idem(4, Block{2, 4});
  EXPECT_TRUE(is_idempotent(rb));
}

TEST(Idempotents, EpsilonAndZeta) {
  for (int n = 1; n <= 3; ++n) {
    const Block all{1, n};
    const auto plus = eps_elem(n, all, 1);
    const auto minus = eps_elem(n, all, -1);
    EXPECT_TRUE(is_idempotent(plus));
    EXPECT_TRUE(is_idempotent(minus));
    EXPECT_TRUE((plus * minus).is_zero());
    EXPECT_EQ(plus + minus, RationalElement::identity(n));
  }
  EXPECT_THROW(eps_elem(2, Block{1, 2}, 0), InvalidArgument);
  EXPECT_EQ(zeta(SignedPermutation::identity(3)), CyclotomicElement::identity(3));
  for (const auto& g : enumerate_group(3)) {
    EXPECT_TRUE(is_idempotent(zeta(g))) << g.one_row();
    // g acts on zeta_g by w_|g| from the right
    EXPECT_EQ(zeta(g).right_multiply(g), zeta(g) * Cyclotomic::root_of_unity(static_cast<int>(g.order()), 1));
    if (g.order() % 2 == 1) {
      EXPECT_TRUE(is_idempotent(zeta_tilde(g)));
    } else {
      EXPECT_THROW(zeta_tilde(g), NotAvailable);
    }
  }
}

TEST(Idempotents, ElementExamples) {
  const auto E1 = E_elem(parse_partition("1"));
  const auto want = RationalElement::identity(1) * make_rational(1, 2) + RationalElement::basis(sign_change(1, 1), make_rational(1, 2));
  EXPECT_EQ(E1, want);
  EXPECT_EQ(rearrangements(parse_partition("2,1,-1")).size(), 6u);
  EXPECT_EQ(rearrangements(parse_partition("1,1,-1")).size(), 3u);
}

TEST(Idempotents, QuasiIdempotentsAndOracle) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : enumerate_signed_compositions(n)) {
      const auto e = e_elem(p);
      EXPECT_EQ(e * e, e * Rational(stab_order(p))) << p.label();
      EXPECT_EQ(vazirani_oracle(p), e) << p.label();
      if (p.all_positive()) {
        EXPECT_EQ(min_coset_reps(p), concatenation_reps(p)) << p.label();
      }
    }
  }
  EXPECT_THROW(vazirani_oracle(SignedComposition({6})), LimitExceeded);
}

TEST(Idempotents, ETildeIsNonzeroAndIdempotentUpToScale) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& l : enumerate_signed_partitions(n)) {
      const auto et = e_tilde_elem(l);
      EXPECT_FALSE(et.is_zero()) << l.label();
    }
  }
}

TEST(LinearAlgebra, RankAndInverse) {
  RationalMatrix A(3, 3);
  const long vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) A.at(i, j) = vals[i][j];
  }
  EXPECT_EQ(rank(A), 3u);
  const auto inv = invert(A);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += A.at(i, k) * inv.at(k, j);
      EXPECT_EQ(s, i == j ? 1 : 0);
    }
  }
  RationalMatrix B(3, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    B.at(0, j) = static_cast<long>(j) + 1;
    B.at(1, j) = 2 * (static_cast<long>(j) + 1);
    B.at(2, j) = make_rational(1, 2);
  }
  EXPECT_EQ(rank(B), 2u);
  EXPECT_EQ(pivot_columns(B), (std::vector<std::size_t>{0, 1}));
}
