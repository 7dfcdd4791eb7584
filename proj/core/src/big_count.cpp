#include "domset/big_count.hpp"

#include <ostream>

#include "domset/errors.hpp"

namespace domset {

BigCount::BigCount(std::uint64_t value) {
  // mpz_class has no portable uint64_t constructor; go through the C API.
  mpz_import(value_.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
}

BigCount BigCount::pow2(std::uint64_t exponent) {
  BigCount out;
  mpz_setbit(out.value_.get_mpz_t(), exponent);
  return out;
}

BigCount BigCount::from_integer(const mpz_class& value) {
  if (sgn(value) < 0) {
    throw InvalidInput(ErrorKind::kNegativeCount,
                       "count would be negative: " + value.get_str());
  }
  BigCount out;
  out.value_ = value;
  return out;
}

BigCount BigCount::parse(std::string_view decimal) {
  if (decimal.empty() ||
      decimal.find_first_not_of("0123456789") != std::string_view::npos) {
    throw InvalidInput(ErrorKind::kInvalidParameter,
                       "not a nonnegative decimal integer: '" + std::string(decimal) + "'");
  }
  BigCount out;
  out.value_.set_str(std::string(decimal), 10);
  return out;
}

std::string BigCount::str() const { return value_.get_str(10); }

BigCount& BigCount::operator+=(const BigCount& other) {
  value_ += other.value_;
  return *this;
}

BigCount& BigCount::operator*=(const BigCount& other) {
  value_ *= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigCount& count) {
  return os << count.str();
}

}  // namespace domset
