#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace cmint {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational from num/den (den != 0).
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "n" or "n/d".
Rational parse_rational(const std::string& text);

bool is_prime(std::uint64_t n);
bool is_prime(const Integer& n);

bool is_square(const Integer& n);
bool is_squarefree(const Integer& n);
Integer isqrt(const Integer& n);

/// Largest k with p^k | x, for x != 0.
long ord_int(const Integer& x, std::uint64_t p);

/// Converts to u64, throwing ResourceError when it does not fit.
std::uint64_t to_u64(const Integer& z);
std::int64_t to_i64(const Integer& z);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Prime factorization of n >= 1: trial division, then Brent's variant of
/// Pollard rho on the cofactor.
std::map<std::uint64_t, int> factor(std::uint64_t n);

/// Factorization of |n| for n != 0; ResourceError beyond 64 bits.
std::map<std::uint64_t, int> factor(const Integer& n);

}  // namespace cmint
