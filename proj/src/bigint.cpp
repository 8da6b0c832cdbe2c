#include "splitpile/bigint.hpp"

#include <stdexcept>

namespace splitpile {

BigInt factorial(std::uint64_t k) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= k; ++i) result *= i;
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // Each partial product is itself a binomial coefficient, so the division is exact.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

BigInt power(std::uint64_t base, std::uint64_t exponent) {
  BigInt result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigInt exact_div(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::logic_error("exact_div: division by zero");
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error("exact_div: " + numerator.str() + " is not divisible by " +
                           denominator.str());
  }
  return quotient;
}

}  // namespace splitpile
