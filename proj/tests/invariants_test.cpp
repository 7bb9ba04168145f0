#include "cltet/suites.hpp"
#include "test_util.hpp"

using namespace cltet;

class InvariantSuite : public ::testing::TestWithParam<std::tuple<int, std::uint64_t>> {};

TEST_P(InvariantSuite, Passes) {
  const auto [index, seed] = GetParam();
  const auto all = suites::module_suites();
  const auto r = suites::run(all.at(index), seed);
  EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

INSTANTIATE_TEST_SUITE_P(Seeds, InvariantSuite,
                         ::testing::Combine(::testing::Range(0, static_cast<int>(suites::module_suites().size())),
                                            ::testing::Values<std::uint64_t>(1, 42, 2024)));
