#include <hyperoct/serialize.hpp>
#include <hyperoct/verify.hpp>

#include <gtest/gtest.h>

#include <atomic>

using namespace hyperoct;

TEST(Verify, CheckSelector) {
  EXPECT_EQ(parse_check_selector("all"), check_names());
  EXPECT_EQ(parse_check_selector("a,g"), (std::vector<std::string>{"induced", "ideals"}));
  EXPECT_EQ(parse_check_selector("ideals, induced,a"), (std::vector<std::string>{"induced", "ideals"}));
  EXPECT_EQ(parse_check_selector("c"), std::vector<std::string>{"even-induction"});
  EXPECT_THROW(parse_check_selector("bogus"), InvalidArgument);
  EXPECT_THROW(parse_check_selector("a,,b"), InvalidArgument);
  EXPECT_THROW(parse_check_selector(""), InvalidArgument);
}

TEST(Verify, WholeSuiteSmallN) {
  for (int n = 1; n <= 3; ++n) {
    std::atomic<std::size_t> seen{0};
    const auto report = verify_suite(n, check_names(), 2, 1, [&](const CheckResult&) { ++seen; });
    EXPECT_EQ(seen.load(), report.results.size());
    for (const auto& r : report.results) {
      EXPECT_TRUE(r.passed) << r.check << " " << to_json(r.parameters).dump() << " " << to_json(r.witness).dump();
      EXPECT_TRUE(r.witness.empty());
    }
    EXPECT_TRUE(report.all_passed());
    // every check contributes at least one task
    for (const auto& name : check_names()) {
      EXPECT_TRUE(std::any_of(report.results.begin(), report.results.end(), [&](const CheckResult& r) { return r.check == name; })) << name;
    }
  }
}

TEST(Verify, ReportIsIndependentOfThreadCount) {
  const auto one = to_json(verify_suite(3, check_names(), 1, 42)).dump();
  const auto four = to_json(verify_suite(3, check_names(), 4, 42)).dump();
  const auto again = to_json(verify_suite(3, check_names(), 3, 42)).dump();
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, again);
}

TEST(Verify, WitnessNamesFirstDifference) {
  const auto a = RationalElement::identity(2);
  const auto b = a + RationalElement::basis(simple_transposition(2, 1), make_rational(1, 3));
  const auto w = detail::element_difference("claim", a, b);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[1], (std::pair<std::string, std::string>{"perm", "2 1"}));
  EXPECT_EQ(w[2].second, "0");
  EXPECT_EQ(w[3].second, "1/3");
  const auto c = detail::class_difference("claim", trivial_character(2), sign_character(2));
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[2].second, "1");
  EXPECT_EQ(c[3].second, "-1");
}

TEST(Verify, EvenInductionClosedForm) {
  const auto f = detail::even_induction_closed_form(6);
  EXPECT_EQ(f.at(SignedPartition({3, 3})), Cyclotomic(-6));
  EXPECT_EQ(f.at(SignedPartition({-3, -3})), Cyclotomic(6));
  EXPECT_EQ(f.at(SignedPartition({-1, -1, -1, -1, -1, -1})), Cyclotomic(-3840));
  EXPECT_EQ(f.support().size(), 4u);
  for (int m = 1; m <= 6; ++m) EXPECT_TRUE(detail::check_power_types(m).passed) << m;
}
