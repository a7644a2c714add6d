#ifndef PPAR_ARITH_HPP
#define PPAR_ARITH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ppar {

using BigInt = mpz_class;
using Rational = mpq_class;

// Floor and ceiling division for signed operands, divisor > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    const std::int64_t q = a / b;
    return (a % b != 0 && a < 0) ? q - 1 : q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    const std::int64_t q = a / b;
    return (a % b != 0 && a > 0) ? q + 1 : q;
}

// Non-negative residue of a modulo m > 0.
constexpr std::int64_t pos_mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Inverse of a modulo m via extended Euclid; throws if gcd(a, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

// Distinct prime divisors in increasing order, by trial division.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Always "p/q" with q >= 1, including integers ("1/1").
std::string to_fraction_string(const Rational &r);

Rational make_rational(std::int64_t num, std::int64_t den);

// Largest integer <= r and smallest integer >= r.
BigInt floor_of(const Rational &r);
BigInt ceil_of(const Rational &r);

} // namespace ppar

#endif
