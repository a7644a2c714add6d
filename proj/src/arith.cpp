#include "ppar/arith.hpp"

#include <numeric>

#include "ppar/error.hpp"

namespace ppar {

std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
    return std::lcm(a, b);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m)
{
    if (m < 2)
        raise(Errc::invalid_argument, "mod_inverse: modulus must be >= 2");
    // Extended Euclid on signed 128-bit values to avoid overflow for large m.
    __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(a % m);
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        const __int128 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        const __int128 s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        raise(Errc::non_unit, "mod_inverse: " + std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    __int128 inv = s0 % static_cast<__int128>(m);
    if (inv < 0)
        inv += m;
    return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0 || n % 3 == 0)
        return false;
    for (std::uint64_t d = 5; d <= n / d; d += 6)
        if (n % d == 0 || n % (d + 2) == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

std::string to_fraction_string(const Rational &r)
{
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        raise(Errc::invalid_argument, "make_rational: zero denominator");
    Rational r{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
    r.canonicalize();
    return r;
}

BigInt floor_of(const Rational &r)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

BigInt ceil_of(const Rational &r)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

} // namespace ppar
