#pragma once

// The elements c_i, d_i, y_i and w_lambda attached to a signed partition,
// the centralizer of w_lambda, and cycle types of powers of m-cycles.

#include <hyperoct/combinatorics.hpp>
#include <hyperoct/errors.hpp>
#include <hyperoct/group.hpp>
#include <hyperoct/signed_permutation.hpp>

#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace hyperoct {

struct CycleElements {
  std::vector<SignedPermutation> c;  // c_i: positive cycle on block i
  std::vector<SignedPermutation> d;  // d_i: negative |lambda_i|-cycle on block i
  SignedPermutation w;               // w_lambda = c_1 ... c_a d_{a+1} ... d_{a+b}
};

inline CycleElements make_cycles(const SignedPartition& lambda) {
  const int n = lambda.n();
  std::vector<SignedPermutation> c;
  std::vector<SignedPermutation> d;
  SignedPermutation w = SignedPermutation::identity(n);
  const auto blocks = lambda.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& B = blocks[i];
    c.push_back(positive_cycle(n, B));
    if (B.size() % 2 == 1) {
      d.push_back(c.back() * longest_element(n, B));
    } else {
      d.push_back(negative_cycle(n, B));
    }
    w = w * (lambda.part(static_cast<int>(i)) > 0 ? c.back() : d.back());
  }
  return CycleElements{std::move(c), std::move(d), std::move(w)};
}

/// y_i: swaps block i with block i+1 (equal sizes) preserving order.
inline SignedPermutation block_swap(int n, const Block& left, const Block& right) {
  if (left.size() != right.size() || left.last + 1 != right.first) {
    throw InvalidArgument("block_swap needs two adjacent blocks of the same size");
  }
  auto img = SignedPermutation::identity(n).image();
  const int shift = left.size();
  for (int l = left.first; l <= left.last; ++l) img[static_cast<std::size_t>(l - 1)] = l + shift;
  for (int l = right.first; l <= right.last; ++l) img[static_cast<std::size_t>(l - 1)] = l - shift;
  return SignedPermutation(std::move(img));
}

enum class GeneratorKind { Cycle, BlockLongest, NegativeCycle, BlockSwap };

struct CentralizerGenerator {
  GeneratorKind kind;
  int index;  // 1-based block index i
  SignedPermutation element;

  /// "c1", "w0,2", "d4", "y5"
  std::string name() const {
    switch (kind) {
      case GeneratorKind::Cycle: return "c" + std::to_string(index);
      case GeneratorKind::BlockLongest: return "w0," + std::to_string(index);
      case GeneratorKind::NegativeCycle: return "d" + std::to_string(index);
      case GeneratorKind::BlockSwap: return "y" + std::to_string(index);
    }
    return {};
  }
};

/// {c_i, w_{0,Λ_i} : i <= a} ∪ {d_i : i > a} ∪ {y_i : λ_i = λ_{i+1}}.
inline std::vector<CentralizerGenerator> centralizer_generators(const SignedPartition& lambda) {
  const int n = lambda.n();
  const auto cyc = make_cycles(lambda);
  const auto blocks = lambda.blocks();
  std::vector<CentralizerGenerator> gens;
  for (int i = 0; i < lambda.length(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (lambda.part(i) > 0) {
      gens.push_back({GeneratorKind::Cycle, i + 1, cyc.c[k]});
      gens.push_back({GeneratorKind::BlockLongest, i + 1, longest_element(n, blocks[k])});
    } else {
      gens.push_back({GeneratorKind::NegativeCycle, i + 1, cyc.d[k]});
    }
  }
  for (int i = 0; i + 1 < lambda.length(); ++i) {
    if (lambda.part(i) == lambda.part(i + 1)) {
      const auto k = static_cast<std::size_t>(i);
      gens.push_back({GeneratorKind::BlockSwap, i + 1, block_swap(n, blocks[k], blocks[k + 1])});
    }
  }
  return gens;
}

/// |Z(w_lambda)| = |Stab(lambda)| 2^{a+b} |lambda_1 ... lambda_{a+b}|.
inline BigInt centralizer_order(const SignedPartition& lambda) {
  BigInt order = stab_order(lambda) * pow2(lambda.length());
  for (int p : lambda.parts()) order *= std::abs(p);
  return order;
}

/// Closure of a generating set under multiplication, in lexicographic order.
inline std::vector<SignedPermutation> generate_subgroup(int n, const std::vector<SignedPermutation>& gens) {
  std::set<SignedPermutation> seen{SignedPermutation::identity(n)};
  std::deque<SignedPermutation> queue{SignedPermutation::identity(n)};
  while (!queue.empty()) {
    const SignedPermutation x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      SignedPermutation y = x * g;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<SignedPermutation> centralizer_elements(const SignedPartition& lambda) {
  std::vector<SignedPermutation> gens;
  for (const auto& g : centralizer_generators(lambda)) gens.push_back(g.element);
  return generate_subgroup(lambda.n(), gens);
}

/// Which family of elements of W_m a power is taken of: the positive m-cycle c,
/// w_{0,m} c, or the negative m-cycle d.
enum class PowerKind { C, W0C, D };

/// Signed cycle type of c^j, w_0 c^j (1 <= j <= m) or d^j (1 <= j <= 2m),
/// from the gcd rule rather than by multiplying out.
inline SignedPartition power_cycle_type(PowerKind kind, int m, int j) {
  if (m < 1) throw InvalidArgument("power_cycle_type: m must be positive");
  const int upper = kind == PowerKind::D ? 2 * m : m;
  if (j < 1 || j > upper) throw InvalidArgument("power_cycle_type: exponent out of range");
  bool second_half = false;
  if (kind == PowerKind::D && j > m) {
    second_half = true;
    j -= m;
  }
  const int ell = std::gcd(m, j);
  const int a = m / ell;
  const int b = j / ell;
  bool negative = false;
  switch (kind) {
    case PowerKind::C: negative = false; break;
    case PowerKind::W0C: negative = (a % 2 == 1); break;
    case PowerKind::D:
      if (!second_half) {
        negative = (b % 2 == 1);
      } else {
        negative = (a % 2 == 0) || (b % 2 == 0);
      }
      break;
  }
  return SignedPartition(std::vector<int>(static_cast<std::size_t>(ell), negative ? -a : a));
}

}  // namespace hyperoct
