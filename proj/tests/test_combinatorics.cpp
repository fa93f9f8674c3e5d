#include <hyperoct/combinatorics.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace hyperoct;

namespace {

// Compositions of n from subsets of [n-1], then every sign pattern.
std::set<std::vector<int>> brute_signed_compositions(int n) {
  std::set<std::vector<int>> out;
  for (int cut = 0; cut < (1 << (n - 1)); ++cut) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 1; i < n; ++i) {
      if ((cut >> (i - 1)) & 1) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    const int k = static_cast<int>(parts.size());
    for (int signs = 0; signs < (1 << k); ++signs) {
      auto q = parts;
      for (int i = 0; i < k; ++i) {
        if ((signs >> i) & 1) q[static_cast<std::size_t>(i)] = -q[static_cast<std::size_t>(i)];
      }
      out.insert(q);
    }
  }
  return out;
}

// positives weakly decreasing, then negatives with weakly decreasing |.|
bool sorted_signed(const std::vector<int>& q) {
  std::vector<int> pos, neg;
  std::size_t i = 0;
  while (i < q.size() && q[i] > 0) pos.push_back(q[i++]);
  while (i < q.size() && q[i] < 0) neg.push_back(-q[i++]);
  if (i != q.size()) return false;
  return std::is_sorted(pos.rbegin(), pos.rend()) && std::is_sorted(neg.rbegin(), neg.rend());
}

long binomial(long a, long b) {
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST(Combinatorics, SignedCompositionsMatchBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    const auto list = enumerate_signed_compositions(n);
    std::set<std::vector<int>> got;
    for (const auto& p : list) got.insert(p.parts());
    EXPECT_EQ(got.size(), list.size()) << "duplicates at n=" << n;
    EXPECT_EQ(got, brute_signed_compositions(n));
    long expected = 2;
    for (int i = 1; i < n; ++i) expected *= 3;
    EXPECT_EQ(static_cast<long>(list.size()), expected);
  }
  EXPECT_EQ(enumerate_signed_compositions(5).size(), 162u);
}

TEST(Combinatorics, SmallListsAsSets) {
  const auto one = enumerate_signed_compositions(1);
  ASSERT_EQ(one.size(), 2u);
  std::set<std::vector<int>> got;
  for (const auto& p : enumerate_signed_compositions(2)) got.insert(p.parts());
  EXPECT_EQ(got, (std::set<std::vector<int>>{{2}, {-2}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
}

TEST(Combinatorics, SignedPartitionsAreTheSortedCompositions) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> expected;
    for (const auto& q : brute_signed_compositions(n)) {
      if (sorted_signed(q)) expected.insert(q);
    }
    std::set<std::vector<int>> got;
    for (const auto& l : enumerate_signed_partitions(n)) got.insert(l.parts());
    EXPECT_EQ(got, expected) << "n=" << n;
  }
  EXPECT_EQ(enumerate_signed_partitions(1).size(), 2u);
  EXPECT_EQ(enumerate_signed_partitions(2).size(), 5u);
  EXPECT_EQ(enumerate_signed_partitions(3).size(), 10u);
}

TEST(Combinatorics, BlocksOfTheElevenExample) {
  const auto p = parse_composition("-1,3,-2,1,3,-1");
  EXPECT_EQ(p.n(), 11);
  EXPECT_EQ(p.length(), 6);
  const std::vector<Block> want = {{1, 1}, {2, 4}, {5, 6}, {7, 7}, {8, 10}, {11, 11}};
  EXPECT_EQ(p.blocks(), want);
  EXPECT_EQ(parse_composition("5").blocks(), (std::vector<Block>{{1, 5}}));
  EXPECT_EQ(parse_composition("2,-2").blocks(), (std::vector<Block>{{1, 2}, {3, 4}}));
}

TEST(Combinatorics, Rearrange) {
  EXPECT_EQ(rearrange(parse_composition("-1,3,-2,1,3,-1")).parts(), (std::vector<int>{3, 3, 1, -2, -1, -1}));
  EXPECT_EQ(rearrange(parse_composition("1,-1")).parts(), (std::vector<int>{1, -1}));
  for (const auto& l : enumerate_signed_partitions(5)) EXPECT_EQ(rearrange(l), l);
}

TEST(Combinatorics, StabilizerOrder) {
  EXPECT_EQ(stab_order(parse_composition("-1,3,-2,1,3,-1")), 4);
  EXPECT_EQ(stab_order(parse_composition("1,-1,2,-3")), 1);
  EXPECT_EQ(stab_order(parse_composition("1,1,1")), 6);
  // |Stab(p)| times the number of distinct rearrangements is k!
  for (const auto& p : enumerate_signed_compositions(5)) {
    std::vector<int> parts = p.parts();
    std::sort(parts.begin(), parts.end());
    long distinct = 0;
    do {
      ++distinct;
    } while (std::next_permutation(parts.begin(), parts.end()));
    EXPECT_EQ(stab_order(p) * distinct, factorial(p.length()));
  }
}

TEST(Combinatorics, Refines) {
  const auto p = parse_composition("1,1,-2,-1,2,3,2");
  const auto q = parse_composition("2,-3,2,3,2");
  const auto r = parse_composition("2,-3,7");
  EXPECT_TRUE(refines(p, q));
  EXPECT_TRUE(refines(q, r));
  EXPECT_TRUE(refines(p, r));
  EXPECT_FALSE(refines(r, q));
  EXPECT_FALSE(refines(parse_composition("1,-1"), parse_composition("2")));
  for (const auto& s : enumerate_signed_compositions(4)) EXPECT_TRUE(refines(s, s));
}

TEST(Combinatorics, PsiRoundTrip) {
  EXPECT_TRUE(psi(parse_composition("6")).empty());
  EXPECT_EQ(psi(parse_composition("1,1,1,1")), (std::set<int>{1, 2, 3}));
  EXPECT_EQ(psi(parse_composition("2,3,1")), (std::set<int>{2, 5}));
  for (int n = 1; n <= 6; ++n) {
    const auto comps = enumerate_compositions(n);
    EXPECT_EQ(comps.size(), std::size_t{1} << (n - 1));
    for (const auto& c : comps) EXPECT_EQ(psi_inverse(psi(c), n), c);
  }
  EXPECT_THROW(psi(parse_composition("1,-1")), InvalidArgument);
}

TEST(Combinatorics, Prime) {
  const auto l = parse_partition("4,3,2,2,1,-6,-5,-4,-3,-3,-2");
  EXPECT_EQ(prime(l).parts(), (std::vector<int>{-4, 3, -2, -2, 1, 6, -5, 4, -3, -3, 2}));
  EXPECT_EQ(rearrange(prime(l)).parts(), (std::vector<int>{6, 4, 3, 2, 1, -5, -4, -3, -3, -2, -2}));
  EXPECT_EQ(prime(parse_composition("3,-1,5")), parse_composition("3,-1,5"));
  EXPECT_EQ(prime(parse_composition("2")), parse_composition("-2"));
  for (const auto& p : enumerate_signed_compositions(5)) EXPECT_EQ(prime(prime(p)), p);
}

TEST(Combinatorics, AbsComposition) {
  EXPECT_EQ(abs_composition(parse_composition("-1,3,-2")), parse_composition("1,3,2"));
  EXPECT_EQ(abs_composition(parse_composition("4")), parse_composition("4"));
  EXPECT_EQ(abs_composition(parse_composition("-2,-2")), parse_composition("2,2"));
}

TEST(Combinatorics, Mobius) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(4), 0);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(7), -1);
  // sum over divisors vanishes for m > 1
  for (long m = 2; m <= 60; ++m) {
    long s = 0;
    for (long d = 1; d <= m; ++d) {
      if (m % d == 0) s += mobius(d);
    }
    EXPECT_EQ(s, 0) << m;
  }
}

TEST(Combinatorics, OrderedSetPartitionsCountIsMultinomial) {
  const std::vector<std::vector<int>> cases = {{1}, {2, 1}, {1, 1, 1}, {2, 2}, {3, 1, 2}};
  for (const auto& sizes : cases) {
    const auto all = ordered_set_partitions(sizes);
    long n = 0, expected = 1;
    for (int s : sizes) {
      n += s;
      expected *= binomial(n, s);
    }
    EXPECT_EQ(static_cast<long>(all.size()), expected);
    for (const auto& J : all) {
      std::set<int> seen;
      for (std::size_t i = 0; i < J.size(); ++i) {
        EXPECT_EQ(static_cast<int>(J[i].size()), sizes[i]);
        EXPECT_TRUE(std::is_sorted(J[i].begin(), J[i].end()));
        seen.insert(J[i].begin(), J[i].end());
      }
      EXPECT_EQ(static_cast<long>(seen.size()), n);
    }
  }
}

TEST(Combinatorics, ParseErrors) {
  EXPECT_THROW(parse_composition(""), InvalidArgument);
  EXPECT_THROW(parse_composition("1,0"), InvalidArgument);
  EXPECT_THROW(parse_composition("1,,2"), InvalidArgument);
  EXPECT_THROW(parse_composition("1,x"), InvalidArgument);
  EXPECT_THROW(parse_partition("1,2"), InvalidArgument);
  EXPECT_THROW(parse_partition("-1,1"), InvalidArgument);
  EXPECT_EQ(parse_partition("2,1,-1").label(), "2,1,-1");
  EXPECT_THROW(enumerate_signed_compositions(0), InvalidArgument);
}
