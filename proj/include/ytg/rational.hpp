#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ytg {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Throws InvalidInput when den == 0. The result is canonical (lowest terms, den > 0).
BigRational make_rational(const BigInt& num, const BigInt& den);

// "num/den", or "num" when den == 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

// Accepts "n", "-n", "n/d". Throws InvalidInput on anything else.
BigRational parse_rational(std::string_view text);

}  // namespace ytg
