#ifndef DOMSET_BIG_COUNT_HPP
#define DOMSET_BIG_COUNT_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace domset {

/// Exact nonnegative integer used for every count in the library.
///
/// Only the closed operations of counting (addition, multiplication) are
/// exposed, so a BigCount can never go negative. Signed intermediate work
/// (linear solving) happens on mpz_class and re-enters through
/// from_integer(), which checks the sign.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  static BigCount pow2(std::uint64_t exponent);
  static BigCount from_integer(const mpz_class& value);
  static BigCount parse(std::string_view decimal);

  const mpz_class& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  std::string str() const;

  BigCount& operator+=(const BigCount& other);
  BigCount& operator*=(const BigCount& other);

  friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
  friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }

  friend bool operator==(const BigCount& lhs, const BigCount& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigCount& lhs, const BigCount& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& count);

}  // namespace domset

#endif  // DOMSET_BIG_COUNT_HPP
