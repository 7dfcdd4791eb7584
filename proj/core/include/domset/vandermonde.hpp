#ifndef DOMSET_VANDERMONDE_HPP
#define DOMSET_VANDERMONDE_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "domset/big_count.hpp"

namespace domset {

/// M z = values with M[r][k] = alphas[r]^k, for N+1 unknowns z_0..z_N.
struct VandermondeSystem {
  std::vector<mpz_class> alphas;
  std::vector<BigCount> values;

  std::size_t degree() const noexcept { return alphas.empty() ? 0 : alphas.size() - 1; }
};

/// The system of the edge-cover reduction: alphas 2^1..2^(N+1), where
/// N + 1 = values.size().
VandermondeSystem reduction_system(std::vector<BigCount> values);

/// Exact solve by fraction-free (Bareiss) elimination and rational back
/// substitution. The solution is checked by substitution. Throws
/// InvalidInput if the alphas repeat or some z_k is negative or fractional.
std::vector<BigCount> vandermonde_solve(const VandermondeSystem& system);

inline constexpr std::size_t kCramerMaxUnknowns = 8;

/// Cramer's rule with permutation-expansion determinants. Independent of
/// the elimination path and only usable up to kCramerMaxUnknowns unknowns.
std::vector<BigCount> cramer_solve(const VandermondeSystem& system);

}  // namespace domset

#endif  // DOMSET_VANDERMONDE_HPP
