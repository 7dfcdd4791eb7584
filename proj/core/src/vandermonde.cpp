#include "domset/vandermonde.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "domset/errors.hpp"

namespace domset {
namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

void check_shape(const VandermondeSystem& system) {
  if (system.alphas.empty() || system.alphas.size() != system.values.size()) {
    throw InvalidInput(ErrorKind::kInvalidParameter,
                       "system needs one value per alpha (got " +
                           std::to_string(system.alphas.size()) + " alphas, " +
                           std::to_string(system.values.size()) + " values)");
  }
}

Matrix vandermonde_matrix(const VandermondeSystem& system) {
  const std::size_t m = system.alphas.size();
  Matrix rows(m, std::vector<mpz_class>(m));
  for (std::size_t r = 0; r < m; ++r) {
    mpz_class power = 1;
    for (std::size_t k = 0; k < m; ++k) {
      rows[r][k] = power;
      power *= system.alphas[r];
    }
  }
  return rows;
}

[[noreturn]] void inconsistent(const std::string& why) {
  throw InvalidInput(ErrorKind::kInconsistentSystem, "inconsistent system: " + why);
}

std::vector<BigCount> checked_solution(const VandermondeSystem& system,
                                       const std::vector<mpq_class>& z) {
  std::vector<BigCount> out;
  out.reserve(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k].get_den() != 1) inconsistent("z_" + std::to_string(k) + " = " + z[k].get_str() + " is not an integer");
    if (sgn(z[k]) < 0) inconsistent("z_" + std::to_string(k) + " = " + z[k].get_str() + " is negative");
    out.push_back(BigCount::from_integer(z[k].get_num()));
  }
  const Matrix rows = vandermonde_matrix(system);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    mpz_class lhs = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) lhs += rows[r][k] * out[k].value();
    if (lhs != system.values[r].value()) inconsistent("substitution fails in row " + std::to_string(r));
  }
  return out;
}

mpz_class permutation_determinant(const Matrix& a) {
  const std::size_t m = a.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class det = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) inversions += perm[i] > perm[j];
    }
    mpz_class term = 1;
    for (std::size_t i = 0; i < m && term != 0; ++i) term *= a[i][perm[i]];
    if (inversions % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

VandermondeSystem reduction_system(std::vector<BigCount> values) {
  VandermondeSystem system;
  for (std::size_t r = 1; r <= values.size(); ++r) {
    mpz_class alpha;
    mpz_ui_pow_ui(alpha.get_mpz_t(), 2, r);
    system.alphas.push_back(alpha);
  }
  system.values = std::move(values);
  return system;
}

std::vector<BigCount> vandermonde_solve(const VandermondeSystem& system) {
  check_shape(system);
  const std::size_t m = system.alphas.size();
  Matrix a = vandermonde_matrix(system);
  for (std::size_t r = 0; r < m; ++r) a[r].push_back(system.values[r].value());

  mpz_class previous = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pivot = k;
    while (pivot < m && a[pivot][k] == 0) ++pivot;
    if (pivot == m) {
      throw InvalidInput(ErrorKind::kInconsistentSystem, "singular system: repeated alpha values");
    }
    std::swap(a[k], a[pivot]);
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j <= m; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }

  std::vector<mpq_class> z(m);
  for (std::size_t i = m; i-- > 0;) {
    mpq_class rhs(a[i][m]);
    for (std::size_t j = i + 1; j < m; ++j) rhs -= mpq_class(a[i][j]) * z[j];
    z[i] = rhs / mpq_class(a[i][i]);
    z[i].canonicalize();
  }
  return checked_solution(system, z);
}

std::vector<BigCount> cramer_solve(const VandermondeSystem& system) {
  check_shape(system);
  const std::size_t m = system.alphas.size();
  if (m > kCramerMaxUnknowns) {
    throw InvalidInput(ErrorKind::kInvalidParameter,
                       "Cramer expansion limited to " + std::to_string(kCramerMaxUnknowns) +
                           " unknowns, got " + std::to_string(m));
  }
  const Matrix rows = vandermonde_matrix(system);
  const mpz_class det = permutation_determinant(rows);
  if (det == 0) {
    throw InvalidInput(ErrorKind::kInconsistentSystem, "singular system: repeated alpha values");
  }
  std::vector<mpq_class> z(m);
  for (std::size_t k = 0; k < m; ++k) {
    Matrix replaced = rows;
    for (std::size_t r = 0; r < m; ++r) replaced[r][k] = system.values[r].value();
    z[k] = mpq_class(permutation_determinant(replaced), det);
    z[k].canonicalize();
  }
  return checked_solution(system, z);
}

}  // namespace domset
