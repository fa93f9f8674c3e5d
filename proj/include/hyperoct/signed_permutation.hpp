#pragma once

// Elements of the hyperoctahedral group W_n.

#include <hyperoct/combinatorics.hpp>
#include <hyperoct/errors.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hyperoct {

/// A signed permutation w of [n], stored in one-row notation
/// (w(1), ..., w(n)); w(-a) = -w(a) is implied.
///
/// Products are composition of functions: (u * v)(a) = u(v(a)).
/// The total order is lexicographic on the image tuple.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    if (n < 1) throw InvalidArgument("a signed permutation needs n >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : image_) {
      const int a = std::abs(v);
      if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
        throw InvalidArgument("not a signed permutation: " + one_row());
      }
      seen[static_cast<std::size_t>(a)] = true;
    }
  }

  static SignedPermutation identity(int n) {
    if (n < 1) throw InvalidArgument("n must be at least 1");
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return SignedPermutation(std::move(image));
  }

  int n() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }

  /// w(a) for a in ±[n].
  int operator()(int a) const {
    const int v = image_.at(static_cast<std::size_t>(std::abs(a) - 1));
    return a > 0 ? v : -v;
  }

  bool is_identity() const {
    for (int i = 0; i < n(); ++i) {
      if (image_[static_cast<std::size_t>(i)] != i + 1) return false;
    }
    return true;
  }

  /// True if w([n]) = [n], i.e. w lies in S_n.
  bool in_symmetric_group() const {
    return std::all_of(image_.begin(), image_.end(), [](int v) { return v > 0; });
  }

  SignedPermutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int a = 1; a <= n(); ++a) {
      const int v = image_[static_cast<std::size_t>(a - 1)];
      inv[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? a : -a;
    }
    return SignedPermutation(std::move(inv));
  }

  /// w^k for any integer k.
  SignedPermutation pow(long k) const {
    SignedPermutation base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    SignedPermutation result = identity(n());
    while (e) {
      if (e & 1UL) result = result * base;
      base = base * base;
      e >>= 1U;
    }
    return result;
  }

  /// The order of w in W_n.
  long order() const {
    long ord = 1;
    std::vector<bool> visited(image_.size(), false);
    for (int a = 1; a <= n(); ++a) {
      if (visited[static_cast<std::size_t>(a - 1)]) continue;
      long steps = 0;
      int x = a;
      do {
        visited[static_cast<std::size_t>(std::abs(x) - 1)] = true;
        x = (*this)(x);
        ++steps;
      } while (std::abs(x) != a);
      // reaching -a means a negative cycle, whose order is twice its length
      const long cyc = (x == a) ? steps : 2 * steps;
      ord = std::lcm(ord, cyc);
    }
    return ord;
  }

  /// "2 3 -1 4 -6 -5"
  std::string one_row() const {
    std::string s;
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(image_[i]);
    }
    return s;
  }

  friend SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) {
    if (u.n() != v.n()) throw InvalidArgument("cannot compose signed permutations of different n");
    std::vector<int> image(v.image_.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = u(v.image_[i]);
    return SignedPermutation(std::move(image), Unchecked{});
  }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) { return a.image_ == b.image_; }
  friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) { return !(a == b); }
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) { return a.image_ < b.image_; }

 private:
  struct Unchecked {};
  SignedPermutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  std::vector<int> image_;
};

inline SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) { return u * v; }

/// Parses one-row notation, "2 3 -1 4 -6 -5" (commas also accepted).
inline SignedPermutation parse_one_row(std::string_view text) {
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> image;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed one-row entry '" + token + "'");
    }
    if (used != token.size()) throw InvalidArgument("malformed one-row entry '" + token + "'");
    image.push_back(v);
  }
  return SignedPermutation(std::move(image));
}

// --- distinguished elements ---------------------------------------------

/// s_i = (i i+1).
inline SignedPermutation simple_transposition(int n, int i) {
  if (i < 1 || i >= n) throw InvalidArgument("s_i needs 1 <= i < n");
  auto img = SignedPermutation::identity(n).image();
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
  return SignedPermutation(std::move(img));
}

/// t_i = (i)^-, sending i to -i.
inline SignedPermutation sign_change(int n, int i) {
  if (i < 1 || i > n) throw InvalidArgument("t_i needs 1 <= i <= n");
  auto img = SignedPermutation::identity(n).image();
  img[static_cast<std::size_t>(i - 1)] = -i;
  return SignedPermutation(std::move(img));
}

/// The Coxeter generators t_1, s_1, ..., s_{n-1}.
inline std::vector<SignedPermutation> coxeter_generators(int n) {
  std::vector<SignedPermutation> gens{sign_change(n, 1)};
  for (int i = 1; i < n; ++i) gens.push_back(simple_transposition(n, i));
  return gens;
}

/// w_{0,P}: negates every point of P.
inline SignedPermutation longest_element(int n, const Block& P) {
  auto img = SignedPermutation::identity(n).image();
  for (int a = P.first; a <= P.last; ++a) img[static_cast<std::size_t>(a - 1)] = -a;
  return SignedPermutation(std::move(img));
}

inline SignedPermutation longest_element(int n) { return longest_element(n, Block{1, n}); }

/// The increasing positive cycle (first first+1 ... last).
inline SignedPermutation positive_cycle(int n, const Block& P) {
  auto img = SignedPermutation::identity(n).image();
  for (int a = P.first; a < P.last; ++a) img[static_cast<std::size_t>(a - 1)] = a + 1;
  img[static_cast<std::size_t>(P.last - 1)] = P.first;
  return SignedPermutation(std::move(img));
}

/// The negative cycle (first first+1 ... last)^-: last goes to -first.
inline SignedPermutation negative_cycle(int n, const Block& P) {
  auto img = SignedPermutation::identity(n).image();
  for (int a = P.first; a < P.last; ++a) img[static_cast<std::size_t>(a - 1)] = a + 1;
  img[static_cast<std::size_t>(P.last - 1)] = -P.first;
  return SignedPermutation(std::move(img));
}

// --- cycle structure -------------------------------------------------------

/// One cycle of a signed permutation. The entries are signed and listed in
/// the order visited, starting from the entry of smallest absolute value
/// (which is then positive); for a negative cycle the last entry maps to
/// minus the first.
struct SignedCycle {
  std::vector<int> support;
  bool negative = false;

  int length() const { return static_cast<int>(support.size()); }

  /// "(1 2 3)-", "(5 -6)"
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(support[i]);
    }
    s += ')';
    if (negative) s += '-';
    return s;
  }

  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

inline std::vector<SignedCycle> cycle_decomposition(const SignedPermutation& w) {
  std::vector<SignedCycle> cycles;
  std::vector<bool> visited(static_cast<std::size_t>(w.n()) + 1, false);
  for (int a = 1; a <= w.n(); ++a) {
    if (visited[static_cast<std::size_t>(a)]) continue;
    SignedCycle cyc;
    int x = a;
    do {
      cyc.support.push_back(x);
      visited[static_cast<std::size_t>(std::abs(x))] = true;
      x = w(x);
    } while (std::abs(x) != a);
    cyc.negative = (x == -a);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

/// Lengths of positive cycles, then lengths of negative cycles, as a signed partition.
inline SignedPartition signed_cycle_type(const SignedPermutation& w) {
  std::vector<int> parts;
  for (const auto& c : cycle_decomposition(w)) parts.push_back(c.negative ? -c.length() : c.length());
  return rearrange(SignedComposition(std::move(parts)));
}

// --- descents and length ---------------------------------------------------

/// i in [n-1] is a descent when w(i), w(i+1) have the same sign and
/// |w(i)| > |w(i+1)|, or opposite signs.
inline std::set<int> mr_descent_set(const SignedPermutation& w) {
  std::set<int> out;
  for (int i = 1; i < w.n(); ++i) {
    const int x = w(i);
    const int y = w(i + 1);
    const bool same_sign = (x > 0) == (y > 0);
    if (!same_sign || std::abs(x) > std::abs(y)) out.insert(i);
  }
  return out;
}

/// ds(w): cut [n] at the descents of w; each block carries the sign of w at its last point.
inline SignedComposition descent_shape(const SignedPermutation& w) {
  std::vector<int> parts;
  int start = 1;
  for (int i = 1; i <= w.n(); ++i) {
    const bool cut = (i == w.n());
    bool descent = false;
    if (!cut) {
      const int x = w(i);
      const int y = w(i + 1);
      descent = ((x > 0) != (y > 0)) || std::abs(x) > std::abs(y);
    }
    if (cut || descent) {
      const int size = i - start + 1;
      parts.push_back(w(i) > 0 ? size : -size);
      start = i + 1;
    }
  }
  return SignedComposition(std::move(parts));
}

/// Ordinary descents of an element of S_P, read along the ordered block P.
/// The element must fix [n] \ P pointwise and map P onto P.
inline std::set<int> classical_descent_set(const SignedPermutation& w, const Block& P) {
  for (int a = 1; a <= w.n(); ++a) {
    const int v = w(a);
    if (P.contains(a)) {
      if (v < 0 || !P.contains(v)) throw InvalidArgument("element does not permute the block positively: " + w.one_row());
    } else if (v != a) {
      throw InvalidArgument("element moves a point outside the block: " + w.one_row());
    }
  }
  std::set<int> out;
  for (int i = P.first; i < P.last; ++i) {
    if (w(i) > w(i + 1)) out.insert(i);
  }
  return out;
}

/// Coxeter length with respect to {t_1, s_1, ..., s_{n-1}}:
/// inv(w) + #{i<j : w(i)+w(j) < 0} + #{i : w(i) < 0}.
inline int coxeter_length(const SignedPermutation& w) {
  int len = 0;
  const auto& img = w.image();
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (img[i] < 0) ++len;
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      if (img[i] > img[j]) ++len;
      if (img[i] + img[j] < 0) ++len;
    }
  }
  return len;
}

/// (-1)^length.
inline int sign_of(const SignedPermutation& w) { return coxeter_length(w) % 2 == 0 ? 1 : -1; }

}  // namespace hyperoct
