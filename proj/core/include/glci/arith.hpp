#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace glci {

using BigInt = mpz_class;

// mpq_class keeps values canonical (coprime, positive denominator) after
// every arithmetic operation; construction from a raw pair goes through
// make_rational which canonicalizes explicitly.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

// Parses "a" or "a/b".
Rational parse_rational(const std::string& text);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t b);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t lcm_of(const std::vector<int>& values);

// Checked 64-bit helpers; throw std::overflow_error.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

std::int64_t binomial(std::int64_t n, std::int64_t k);

// floor of a rational as a 64-bit integer.
std::int64_t floor_of(const Rational& q);
std::int64_t ceil_of(const Rational& q);
int sign_of(const Rational& q);

}  // namespace glci
