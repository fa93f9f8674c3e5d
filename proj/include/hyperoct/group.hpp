#pragma once

// Enumerated W_n: elements in lexicographic order, conjugacy classes,
// multiplication by index. Used by every algorithm that sums over the group.

#include <hyperoct/combinatorics.hpp>
#include <hyperoct/errors.hpp>
#include <hyperoct/signed_permutation.hpp>

#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace hyperoct {

/// Largest n enumerated without an explicit override (|W_6| = 46080).
inline constexpr int kDefaultEnumerationLimit = 6;

/// |W_n| = 2^n n!
inline BigInt hyperoctahedral_order(int n) { return pow2(n) * factorial(n); }

class HyperoctahedralGroup {
 public:
  using Index = std::uint32_t;

  explicit HyperoctahedralGroup(int n) : n_(n) {
    if (n < 1) throw InvalidArgument("n must be at least 1");
    if (n > 10) throw LimitExceeded("refusing to enumerate W_" + std::to_string(n));
    block_weight_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int rest = n - 1 - i;
      block_weight_[static_cast<std::size_t>(i)] = (std::size_t{1} << rest) * static_cast<std::size_t>(factorial(rest).get_ui());
    }
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    enumerate(prefix, used);

    identity_ = index_of(SignedPermutation::identity(n));
    classes_ = enumerate_signed_partitions(n);
    std::map<std::vector<int>, std::size_t> class_lookup;
    for (std::size_t c = 0; c < classes_.size(); ++c) class_lookup.emplace(classes_[c].parts(), c);
    class_members_.resize(classes_.size());
    class_of_.resize(elements_.size());
    lengths_.resize(elements_.size());
    inverse_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      const auto c = class_lookup.at(signed_cycle_type(elements_[i]).parts());
      class_of_[i] = static_cast<Index>(c);
      class_members_[c].push_back(static_cast<Index>(i));
      lengths_[i] = coxeter_length(elements_[i]);
      inverse_[i] = index_of(elements_[i].inverse());
    }
  }

  HyperoctahedralGroup(const HyperoctahedralGroup&) = delete;
  HyperoctahedralGroup& operator=(const HyperoctahedralGroup&) = delete;

  int n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<SignedPermutation>& elements() const { return elements_; }
  const SignedPermutation& element(Index i) const { return elements_[i]; }

  /// Lexicographic rank, computed directly from the image tuple.
  Index index_of(const SignedPermutation& w) const {
    if (w.n() != n_) throw InvalidArgument("element of the wrong W_n");
    return rank(w.image().data());
  }

  Index identity_index() const { return identity_; }

  Index multiply(Index a, Index b) const {
    if (table_enabled()) {
      std::call_once(table_once_, [this] { build_table(); });
      return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    }
    return compose_rank(a, b);
  }

  Index inverse(Index a) const { return inverse_[a]; }
  int length(Index a) const { return lengths_[a]; }

  const std::vector<SignedPartition>& classes() const { return classes_; }
  std::size_t class_of(Index a) const { return class_of_[a]; }
  std::size_t class_index(const SignedPartition& lambda) const {
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (classes_[c] == lambda) return c;
    }
    throw InvalidArgument("not a signed partition of " + std::to_string(n_) + ": " + lambda.label());
  }
  const std::vector<Index>& class_members(std::size_t c) const { return class_members_[c]; }

 private:
  void enumerate(std::vector<int>& prefix, std::vector<bool>& used) {
    if (static_cast<int>(prefix.size()) == n_) {
      elements_.emplace_back(prefix);
      return;
    }
    // values in increasing order: -n, ..., -1, 1, ..., n
    for (int v = -n_; v <= n_; ++v) {
      if (v == 0 || used[static_cast<std::size_t>(std::abs(v))]) continue;
      used[static_cast<std::size_t>(std::abs(v))] = true;
      prefix.push_back(v);
      enumerate(prefix, used);
      prefix.pop_back();
      used[static_cast<std::size_t>(std::abs(v))] = false;
    }
  }

  Index rank(const int* img) const {
    std::array<bool, 17> used{};
    std::size_t r = 0;
    for (int i = 0; i < n_; ++i) {
      const int v = img[i];
      const int a = std::abs(v);
      std::size_t smaller = 0;
      for (int b = 1; b <= n_; ++b) {
        if (used[static_cast<std::size_t>(b)]) continue;
        if (v < 0) {
          if (b > a) ++smaller;
        } else {
          ++smaller;                // every available negative value
          if (b < a) ++smaller;
        }
      }
      used[static_cast<std::size_t>(a)] = true;
      r += smaller * block_weight_[static_cast<std::size_t>(i)];
    }
    return static_cast<Index>(r);
  }

  Index compose_rank(Index a, Index b) const {
    std::array<int, 16> img{};
    const auto& u = elements_[a];
    const auto& v = elements_[b].image();
    for (int i = 0; i < n_; ++i) img[static_cast<std::size_t>(i)] = u(v[static_cast<std::size_t>(i)]);
    return rank(img.data());
  }

  bool table_enabled() const { return n_ <= 5; }

  void build_table() const {
    const std::size_t N = elements_.size();
    table_.resize(N * N);
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        table_[a * N + b] = static_cast<std::uint16_t>(compose_rank(static_cast<Index>(a), static_cast<Index>(b)));
      }
    }
  }

  int n_;
  Index identity_ = 0;
  std::vector<std::size_t> block_weight_;
  std::vector<SignedPermutation> elements_;
  std::vector<SignedPartition> classes_;
  std::vector<std::vector<Index>> class_members_;
  std::vector<Index> class_of_;
  std::vector<int> lengths_;
  std::vector<Index> inverse_;
  mutable std::once_flag table_once_;
  mutable std::vector<std::uint16_t> table_;
};

namespace detail {
inline std::atomic<int>& enumeration_limit_storage() {
  static std::atomic<int> limit{kDefaultEnumerationLimit};
  return limit;
}
}  // namespace detail

/// Process-wide bound on n for anything that enumerates W_n.
inline int enumeration_limit() { return detail::enumeration_limit_storage().load(); }
inline void set_enumeration_limit(int limit) { detail::enumeration_limit_storage().store(limit); }

/// Shared, lazily built W_n. Throws LimitExceeded when n > limit
/// (a negative limit means the process-wide setting).
inline const HyperoctahedralGroup& hyperoctahedral_group(int n, int limit = -1) {
  if (limit < 0) limit = enumeration_limit();
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (n > limit) {
    throw LimitExceeded("W_" + std::to_string(n) + " has " + hyperoctahedral_order(n).get_str() +
                        " elements; enumeration is limited to n <= " + std::to_string(limit));
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<HyperoctahedralGroup>> groups;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = groups.find(n);
  if (it == groups.end()) it = groups.emplace(n, std::make_unique<HyperoctahedralGroup>(n)).first;
  return *it->second;
}

inline std::vector<SignedPermutation> enumerate_group(int n, int limit = -1) {
  return hyperoctahedral_group(n, limit).elements();
}

/// {w : signed_cycle_type(w) = lambda}, in lexicographic order.
inline std::vector<SignedPermutation> conjugacy_class(const SignedPartition& lambda, int limit = -1) {
  const auto& G = hyperoctahedral_group(lambda.n(), limit);
  std::vector<SignedPermutation> out;
  for (auto idx : G.class_members(G.class_index(lambda))) out.push_back(G.element(idx));
  return out;
}

}  // namespace hyperoct
