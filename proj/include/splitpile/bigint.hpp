#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace splitpile {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::uint64_t k);
BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt power(std::uint64_t base, std::uint64_t exponent);

// Divides and throws std::logic_error if the remainder is nonzero. Every
// closed-form count in this library is an integer, so a remainder means a bug.
BigInt exact_div(const BigInt& numerator, const BigInt& denominator);

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace splitpile
