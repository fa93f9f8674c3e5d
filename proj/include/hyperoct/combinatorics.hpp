#pragma once

// Compositions, signed compositions and signed partitions of n.

#include <hyperoct/errors.hpp>
#include <hyperoct/rational.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hyperoct {

/// A block P_i = {first, ..., last} of [n], 1-based and inclusive.
struct Block {
  int first = 1;
  int last = 0;

  int size() const { return last - first + 1; }
  bool contains(int a) const { return first <= a && a <= last; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// A tuple of nonzero integers (p_1, ..., p_k); n = sum |p_i|.
class SignedComposition {
 public:
  explicit SignedComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidArgument("a signed composition needs at least one part");
    n_ = 0;
    for (int p : parts_) {
      if (p == 0) throw InvalidArgument("signed composition parts must be nonzero");
      n_ += std::abs(p);
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

  /// p̂_i = |p_1| + ... + |p_i|, for 0 <= i <= k.
  int prefix(int i) const {
    int s = 0;
    for (int j = 0; j < i; ++j) s += std::abs(parts_.at(static_cast<std::size_t>(j)));
    return s;
  }

  /// The block P_{i+1} (0-based index i).
  Block block(int i) const {
    const int start = prefix(i);
    return Block{start + 1, start + std::abs(part(i))};
  }

  std::vector<Block> blocks() const {
    std::vector<Block> out;
    int start = 0;
    for (int p : parts_) {
      out.push_back(Block{start + 1, start + std::abs(p)});
      start += std::abs(p);
    }
    return out;
  }

  bool all_positive() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p > 0; });
  }

  /// Positive parts first in nonincreasing order, then negative parts by
  /// nonincreasing absolute value.
  bool is_partition() const {
    for (std::size_t j = 1; j < parts_.size(); ++j) {
      const int prev = parts_[j - 1];
      const int cur = parts_[j];
      if (prev < 0 && cur > 0) return false;
      if (prev > 0 && cur > 0 && cur > prev) return false;
      if (prev < 0 && cur < 0 && cur < prev) return false;
    }
    return true;
  }

  /// "3,3,1,-2,-1,-1"
  std::string label() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const SignedComposition& a, const SignedComposition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const SignedComposition& a, const SignedComposition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// A signed composition in sorted form; labels conjugacy classes of W_n.
class SignedPartition : public SignedComposition {
 public:
  explicit SignedPartition(std::vector<int> parts) : SignedComposition(std::move(parts)) {
    if (!is_partition()) throw InvalidArgument("not a signed partition: " + label());
  }

  /// a: number of positive parts.
  int positive_count() const {
    return static_cast<int>(std::count_if(parts().begin(), parts().end(), [](int p) { return p > 0; }));
  }
  /// b: number of negative parts.
  int negative_count() const { return length() - positive_count(); }
};

/// Parses "-1,3,-2" (spaces tolerated).
inline std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw InvalidArgument("empty part in composition string '" + std::string(text) + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed part '" + token + "'");
    }
    if (used != token.size()) throw InvalidArgument("malformed part '" + token + "'");
    parts.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == ',') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return parts;
}

inline SignedComposition parse_composition(std::string_view text) { return SignedComposition(parse_parts(text)); }
inline SignedPartition parse_partition(std::string_view text) { return SignedPartition(parse_parts(text)); }

namespace detail {

inline void require_positive_n(int n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
}

inline void enumerate_signed_rec(int remaining, std::vector<int>& prefix, std::vector<SignedComposition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int m = 1; m <= remaining; ++m) {
    for (int sign : {1, -1}) {
      prefix.push_back(sign * m);
      enumerate_signed_rec(remaining - m, prefix, out);
      prefix.pop_back();
    }
  }
}

inline void enumerate_rec(int remaining, std::vector<int>& prefix, std::vector<SignedComposition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int m = 1; m <= remaining; ++m) {
    prefix.push_back(m);
    enumerate_rec(remaining - m, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All signed compositions of n. The first part runs through 1, -1, 2, -2, ...
/// and the rest is enumerated recursively in the same order.
inline std::vector<SignedComposition> enumerate_signed_compositions(int n) {
  detail::require_positive_n(n);
  std::vector<SignedComposition> out;
  std::vector<int> prefix;
  detail::enumerate_signed_rec(n, prefix, out);
  return out;
}

/// Unsigned compositions of n, in the same recursive order.
inline std::vector<SignedComposition> enumerate_compositions(int n) {
  detail::require_positive_n(n);
  std::vector<SignedComposition> out;
  std::vector<int> prefix;
  detail::enumerate_rec(n, prefix, out);
  return out;
}

/// The signed compositions of n that are already sorted, in enumeration order.
inline std::vector<SignedPartition> enumerate_signed_partitions(int n) {
  std::vector<SignedPartition> out;
  for (const auto& p : enumerate_signed_compositions(n)) {
    if (p.is_partition()) out.emplace_back(p.parts());
  }
  return out;
}

/// ←p: the parts of p sorted into a signed partition.
inline SignedPartition rearrange(const SignedComposition& p) {
  std::vector<int> pos;
  std::vector<int> neg;
  for (int x : p.parts()) (x > 0 ? pos : neg).push_back(x);
  std::sort(pos.begin(), pos.end(), std::greater<>());
  std::sort(neg.begin(), neg.end());
  pos.insert(pos.end(), neg.begin(), neg.end());
  return SignedPartition(std::move(pos));
}

/// |Stab(p)|: order of the stabilizer of p in S_k acting on positions,
/// the product of factorials of the multiplicities of each signed value.
inline BigInt stab_order(const SignedComposition& p) {
  std::map<int, long> counts;
  for (int x : p.parts()) ++counts[x];
  BigInt order = 1;
  for (const auto& [value, count] : counts) order *= factorial(count);
  return order;
}

/// p <= q: q is obtained from p by merging runs of consecutive parts of equal sign.
inline bool refines(const SignedComposition& p, const SignedComposition& q) {
  if (p.n() != q.n()) throw InvalidArgument("refines: compositions of different n");
  std::size_t i = 0;
  const auto& pp = p.parts();
  for (int target : q.parts()) {
    int acc = 0;
    while (acc < std::abs(target)) {
      if (i >= pp.size()) return false;
      if ((pp[i] > 0) != (target > 0)) return false;
      acc += std::abs(pp[i]);
      ++i;
    }
    if (acc != std::abs(target)) return false;
  }
  return i == pp.size();
}

/// ψ(p) = {p̂_1, ..., p̂_{k-1}} for an unsigned composition.
inline std::set<int> psi(const SignedComposition& p) {
  if (!p.all_positive()) throw InvalidArgument("psi is defined for compositions with positive parts only");
  std::set<int> out;
  int s = 0;
  for (int i = 0; i + 1 < p.length(); ++i) {
    s += p.part(i);
    out.insert(s);
  }
  return out;
}

inline SignedComposition psi_inverse(const std::set<int>& subset, int n) {
  detail::require_positive_n(n);
  std::vector<int> parts;
  int last = 0;
  for (int a : subset) {
    if (a <= last || a >= n) throw InvalidArgument("psi_inverse: subset must lie in [n-1]");
    parts.push_back(a - last);
    last = a;
  }
  parts.push_back(n - last);
  return SignedComposition(std::move(parts));
}

/// p': the sign of every even part flipped.
inline SignedComposition prime(const SignedComposition& p) {
  std::vector<int> parts = p.parts();
  for (int& x : parts) {
    if (x % 2 == 0) x = -x;
  }
  return SignedComposition(std::move(parts));
}

/// |p| = (|p_1|, ..., |p_k|).
inline SignedComposition abs_composition(const SignedComposition& p) {
  std::vector<int> parts = p.parts();
  for (int& x : parts) x = std::abs(x);
  return SignedComposition(std::move(parts));
}

inline int mobius(long a) {
  if (a < 1) throw InvalidArgument("mobius: argument must be positive");
  int result = 1;
  for (long p = 2; p * p <= a; ++p) {
    if (a % p == 0) {
      a /= p;
      if (a % p == 0) return 0;
      result = -result;
    }
  }
  if (a > 1) result = -result;
  return result;
}

/// Ordered set partitions (J_1, ..., J_k) of [n] with |J_i| = sizes[i];
/// each J_i is listed in increasing order.
inline std::vector<std::vector<std::vector<int>>> ordered_set_partitions(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw InvalidArgument("ordered_set_partitions: sizes must be positive");
    n += s;
  }
  // Assign each point a block label; enumerate label words with the given content.
  std::vector<int> labels;
  for (std::size_t i = 0; i < sizes.size(); ++i) labels.insert(labels.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  std::vector<std::vector<std::vector<int>>> out;
  do {
    std::vector<std::vector<int>> blocks(sizes.size());
    for (int a = 0; a < n; ++a) blocks[static_cast<std::size_t>(labels[static_cast<std::size_t>(a)])].push_back(a + 1);
    out.push_back(std::move(blocks));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

}  // namespace hyperoct
