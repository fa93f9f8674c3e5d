#pragma once

// Signed Young subgroups W_p, minimal left coset representatives X_p, the
// bases {x_p} and {x_p^v} of the Mantaci-Reutenauer algebra, and exact
// coordinates with respect to {x_p}.

#include <hyperoct/algebra_element.hpp>
#include <hyperoct/combinatorics.hpp>
#include <hyperoct/errors.hpp>
#include <hyperoct/group.hpp>
#include <hyperoct/linear_algebra.hpp>
#include <hyperoct/signed_permutation.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace hyperoct {

/// w in W_p: w(P_i) ⊆ ±P_i for every block, and w(P_i) ⊆ P_i when p_i < 0.
inline bool in_young_subgroup(const SignedComposition& p, const SignedPermutation& w) {
  if (w.n() != p.n()) throw InvalidArgument("in_young_subgroup: size mismatch");
  for (int i = 0; i < p.length(); ++i) {
    const Block B = p.block(i);
    for (int l = B.first; l <= B.last; ++l) {
      const int v = w(l);
      if (!B.contains(std::abs(v))) return false;
      if (p.part(i) < 0 && v < 0) return false;
    }
  }
  return true;
}

/// |W_p| = prod_{p_i > 0} 2^{p_i} p_i! * prod_{p_i < 0} |p_i|!
inline BigInt young_subgroup_order(const SignedComposition& p) {
  BigInt order = 1;
  for (int x : p.parts()) order *= x > 0 ? pow2(x) * factorial(x) : factorial(-x);
  return order;
}

namespace detail {

// All of W_p, built block by block as products of signed or unsigned
// permutations of each block.
inline void young_rec(const SignedComposition& p, int i, std::vector<int>& img, std::vector<SignedPermutation>& out) {
  if (i == p.length()) {
    out.emplace_back(img);
    return;
  }
  const Block B = p.block(i);
  std::vector<int> perm(static_cast<std::size_t>(B.size()));
  std::iota(perm.begin(), perm.end(), B.first);
  const bool signed_block = p.part(i) > 0;
  do {
    const unsigned masks = signed_block ? (1u << B.size()) : 1u;
    for (unsigned mask = 0; mask < masks; ++mask) {
      for (int t = 0; t < B.size(); ++t) {
        const int v = perm[static_cast<std::size_t>(t)];
        img[static_cast<std::size_t>(B.first - 1 + t)] = (mask >> t) & 1u ? -v : v;
      }
      young_rec(p, i + 1, img, out);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

/// Elements of W_p in lexicographic order.
inline std::vector<SignedPermutation> young_subgroup(const SignedComposition& p) {
  std::vector<SignedPermutation> out;
  std::vector<int> img(static_cast<std::size_t>(p.n()), 0);
  detail::young_rec(p, 0, img, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// X_p by brute force: split W_n into left cosets w W_p and keep the unique
/// element of minimal length in each. Two minimal elements in one coset
/// raise AssertionFailure.
inline std::vector<SignedPermutation> min_coset_reps_by_enumeration(const SignedComposition& p) {
  const auto& G = hyperoctahedral_group(p.n());
  std::vector<HyperoctahedralGroup::Index> H;
  for (const auto& h : young_subgroup(p)) H.push_back(G.index_of(h));
  std::vector<char> seen(G.order(), 0);
  std::vector<SignedPermutation> reps;
  for (HyperoctahedralGroup::Index g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    int best = -1;
    HyperoctahedralGroup::Index best_idx = 0;
    int best_count = 0;
    for (auto h : H) {
      const auto x = G.multiply(g, h);
      seen[x] = 1;
      const int len = G.length(x);
      if (best < 0 || len < best) {
        best = len;
        best_idx = x;
        best_count = 1;
      } else if (len == best) {
        ++best_count;
      }
    }
    if (best_count != 1) {
      throw AssertionFailure("coset of W_(" + p.label() + ") containing " + G.element(g).one_row() + " has " +
                             std::to_string(best_count) + " elements of minimal length " + std::to_string(best));
    }
    reps.push_back(G.element(best_idx));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

/// For p with positive parts: w in X_p iff every w(j) > 0 and w is
/// increasing on each block.
inline bool in_min_coset_reps_positive(const SignedComposition& p, const SignedPermutation& w) {
  for (int j = 1; j <= w.n(); ++j) {
    if (w(j) < 0) return false;
  }
  for (const Block& B : p.blocks()) {
    for (int l = B.first; l < B.last; ++l) {
      if (w(l) > w(l + 1)) return false;
    }
  }
  return true;
}

/// Minimal-length left coset representatives of W_p, in lexicographic order.
/// The criterion for positive p is cross-checked against enumeration for n <= 3.
inline std::vector<SignedPermutation> min_coset_reps(const SignedComposition& p) {
  if (!p.all_positive()) return min_coset_reps_by_enumeration(p);
  const auto& G = hyperoctahedral_group(p.n());
  std::vector<SignedPermutation> reps;
  for (const auto& w : G.elements()) {
    if (in_min_coset_reps_positive(p, w)) reps.push_back(w);
  }
  if (p.n() <= 3 && reps != min_coset_reps_by_enumeration(p)) {
    throw AssertionFailure("minimal coset criterion disagrees with enumeration for (" + p.label() + ")");
  }
  return reps;
}

/// x_p = sum of X_p.
inline RationalElement x_elem(const SignedComposition& p) {
  return RationalElement::sum_of(p.n(), min_coset_reps(p));
}

/// x_p^v = sum of w with ds(w) >= p.
inline RationalElement x_v_elem(const SignedComposition& p) {
  const auto& G = hyperoctahedral_group(p.n());
  std::vector<SignedPermutation> elems;
  for (const auto& w : G.elements()) {
    if (refines(p, descent_shape(w))) elems.push_back(w);
  }
  return RationalElement::sum_of(p.n(), elems);
}

/// The basis {x_p : p in SC(n)} with a precomputed solver for coordinates.
class MRBasis {
 public:
  explicit MRBasis(int n) : n_(n), compositions_(enumerate_signed_compositions(n)) {
    const auto& G = hyperoctahedral_group(n);
    RationalMatrix columns(G.order(), compositions_.size());
    for (std::size_t j = 0; j < compositions_.size(); ++j) {
      elements_.push_back(x_elem(compositions_[j]));
      for (const auto& [idx, c] : elements_.back().terms()) columns.at(idx, j) = c;
    }
    // x_p has 0/1 coefficients; choose rows of the |W_n| x |SC(n)| matrix
    // that form an invertible square block.
    const auto pivots = pivot_columns(columns.transposed());
    rank_ = pivots.size();
    pivot_rows_ = pivots;
    if (rank_ == compositions_.size()) {
      RationalMatrix square(rank_, rank_);
      for (std::size_t r = 0; r < rank_; ++r) {
        for (std::size_t j = 0; j < rank_; ++j) square.at(r, j) = columns.at(pivot_rows_[r], j);
      }
      inverse_ = invert(square);
    }
  }

  int n() const { return n_; }
  const std::vector<SignedComposition>& compositions() const { return compositions_; }
  const std::vector<RationalElement>& elements() const { return elements_; }
  std::size_t rank() const { return rank_; }
  bool independent() const { return rank_ == compositions_.size(); }

  /// Coefficients a_p with u = sum a_p x_p, in enumeration order.
  std::vector<Rational> coordinates(const RationalElement& u) const {
    if (u.n() != n_) throw InvalidArgument("express_in_mr_basis: element of the wrong W_n");
    if (!independent()) throw AssertionFailure("the elements x_p are linearly dependent for n = " + std::to_string(n_));
    std::vector<Rational> rhs(rank_);
    for (std::size_t r = 0; r < rank_; ++r) rhs[r] = u.coefficient(static_cast<HyperoctahedralGroup::Index>(pivot_rows_[r]));
    std::vector<Rational> a = inverse_.apply(rhs);
    RationalElement check(u.group());
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!is_zero(a[j])) check += elements_[j] * a[j];
    }
    if (check != u) throw NotInSubalgebra("element is not in the Mantaci-Reutenauer algebra of W_" + std::to_string(n_));
    return a;
  }

 private:
  int n_;
  std::vector<SignedComposition> compositions_;
  std::vector<RationalElement> elements_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> pivot_rows_;
  RationalMatrix inverse_;
};

/// Shared MRBasis for W_n.
inline const MRBasis& mr_basis(int n) {
  hyperoctahedral_group(n);  // enforce the enumeration bound before locking
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<MRBasis>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<MRBasis>(n)).first;
  return *it->second;
}

/// u = sum_p a_p x_p; throws NotInSubalgebra when u is outside the span.
inline std::map<SignedComposition, Rational> express_in_mr_basis(const RationalElement& u) {
  const auto& B = mr_basis(u.n());
  const auto a = B.coordinates(u);
  std::map<SignedComposition, Rational> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!is_zero(a[j])) out.emplace(B.compositions()[j], a[j]);
  }
  return out;
}

}  // namespace hyperoct
