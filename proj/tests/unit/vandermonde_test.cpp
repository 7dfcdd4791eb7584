#include <gtest/gtest.h>

#include "domset/errors.hpp"
#include "domset/vandermonde.hpp"

namespace domset {
namespace {

TEST(Vandermonde, ThreeByThree) {
  const auto sys = reduction_system({5, 17, 65});
  EXPECT_EQ(sys.degree(), 2u);
  EXPECT_EQ(sys.alphas, (std::vector<mpz_class>{2, 4, 8}));
  EXPECT_EQ(vandermonde_solve(sys), (std::vector<BigCount>{1, 0, 1}));
  EXPECT_EQ(cramer_solve(sys), (std::vector<BigCount>{1, 0, 1}));
}

TEST(Vandermonde, OneByOne) {
  const auto sys = reduction_system({42});
  EXPECT_EQ(vandermonde_solve(sys), (std::vector<BigCount>{42}));
  EXPECT_EQ(cramer_solve(sys), (std::vector<BigCount>{42}));
}

TEST(Vandermonde, TwoByTwo) {
  EXPECT_EQ(vandermonde_solve(reduction_system({3, 5})), (std::vector<BigCount>{1, 1}));
}

TEST(Vandermonde, RoundTripLarge) {
  // Pick z, form the values, and solve back. Exercises many-digit numbers.
  std::vector<BigCount> z;
  for (int k = 0; k <= 16; ++k) z.push_back(BigCount::parse(std::to_string(k * k + 3) + "000000000007"));
  std::vector<BigCount> values;
  for (unsigned r = 1; r <= z.size(); ++r) {
    BigCount sum;
    for (std::size_t k = 0; k < z.size(); ++k) sum += z[k] * BigCount::pow2(r * k);
    values.push_back(sum);
  }
  EXPECT_EQ(vandermonde_solve(reduction_system(values)), z);
}

TEST(Vandermonde, CramerAgreesWithElimination) {
  for (std::uint64_t s = 1; s < 40; ++s) {
    const std::size_t n = 1 + s % kCramerMaxUnknowns;
    std::vector<BigCount> z;
    for (std::size_t k = 0; k < n; ++k) z.push_back((s * 7919 + k * 104729) % 1000);
    std::vector<BigCount> values;
    for (unsigned r = 1; r <= n; ++r) {
      BigCount sum;
      for (std::size_t k = 0; k < n; ++k) sum += z[k] * BigCount::pow2(r * k);
      values.push_back(sum);
    }
    const auto sys = reduction_system(values);
    EXPECT_EQ(vandermonde_solve(sys), z);
    EXPECT_EQ(cramer_solve(sys), z);
  }
}

TEST(Vandermonde, Inconsistent) {
  // z0 + 2 z1 = 3, z0 + 4 z1 = 4 gives z1 = 1/2.
  try {
    vandermonde_solve(reduction_system({3, 4}));
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInconsistentSystem);
  }
  // z0 + 2 z1 = 5, z0 + 4 z1 = 3 gives z1 = -1.
  EXPECT_THROW(vandermonde_solve(reduction_system({5, 3})), InvalidInput);
  EXPECT_THROW(cramer_solve(reduction_system({3, 4})), InvalidInput);
}

TEST(Vandermonde, RepeatedAlphas) {
  VandermondeSystem sys{{2, 2}, {3, 3}};
  EXPECT_THROW(vandermonde_solve(sys), InvalidInput);
}

TEST(Vandermonde, CramerCap) {
  EXPECT_THROW(cramer_solve(reduction_system(std::vector<BigCount>(kCramerMaxUnknowns + 1, 1))),
               std::exception);
}

}  // namespace
}  // namespace domset
