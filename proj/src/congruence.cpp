#include "ppar/congruence.hpp"

#include "ppar/error.hpp"
#include "ppar/series.hpp"

namespace ppar {

namespace {

void require_prime_ell(std::uint64_t ell, const char *op)
{
    if (ell < 5 || !is_prime(ell))
        raise(Errc::invalid_argument, std::string(op) + ": " + std::to_string(ell) + " is not a prime >= 5");
}

BoundReport make_report(std::uint64_t t, const Rational &bound, const ResidueStream &stream)
{
    BoundReport rep;
    rep.t = t;
    rep.delta = delta_of(t);
    rep.theorem_bound = bound;
    rep.search_ceiling = search_ceiling(bound);
    rep.m_min = smallest_odd_m(t, stream, rep.search_ceiling);
    rep.legacy_bound = legacy_bound(t, rep.delta).value;
    rep.verdict = rep.m_min.has_value() && Rational(BigInt(static_cast<unsigned long>(*rep.m_min))) < bound;
    return rep;
}

} // namespace

std::uint64_t delta_of(std::uint64_t t)
{
    if (t < 2 || t % 2 == 0 || t % 3 == 0)
        raise(Errc::invalid_argument, "delta_of: t = " + std::to_string(t) + " must exceed 1 and be coprime to 6");
    return mod_inverse(24 % t, t);
}

Rational theorem_bound(std::uint64_t ell)
{
    require_prime_ell(ell, "theorem_bound");
    Rational b(BigInt(static_cast<unsigned long>(ell)) * ell - 1, 24);
    b.canonicalize();
    return b;
}

Rational remark2_bound(std::uint64_t t)
{
    delta_of(t); // validates t
    BigInt radical = 1;
    for (std::uint64_t p : prime_divisors(t))
        radical *= static_cast<unsigned long>(p);
    Rational b(BigInt(static_cast<unsigned long>(t)) * radical, 24);
    b.canonicalize();
    return b;
}

std::uint64_t search_ceiling(const Rational &bound)
{
    if (bound <= 0)
        raise(Errc::invalid_argument, "search_ceiling: bound must be positive");
    const BigInt c = ceil_of(bound) - 1;
    return c.get_ui();
}

std::uint64_t required_stream_length(std::uint64_t t, std::uint64_t ceiling)
{
    return t * ceiling + delta_of(t) + 1;
}

std::optional<std::uint64_t> smallest_odd_m(std::uint64_t t, const ResidueStream &stream, std::uint64_t ceiling)
{
    const std::uint64_t delta = delta_of(t);
    const std::uint64_t need = t * ceiling + delta + 1;
    if (stream.length() < need)
        raise(Errc::stream_too_short, "stream too short: modulus " + std::to_string(t) + " up to m = " + std::to_string(ceiling)
                                          + " requires length " + std::to_string(need) + ", have " + std::to_string(stream.length()));
    for (std::uint64_t m = 0; m <= ceiling; ++m)
        if (stream.odd(t * m + delta))
            return m;
    return std::nullopt;
}

BoundReport verify_theorem_bound(std::uint64_t ell, const ResidueStream &stream)
{
    return make_report(ell, theorem_bound(ell), stream);
}

BoundReport verify_remark2(std::uint64_t t, const ResidueStream &stream)
{
    return make_report(t, remark2_bound(t), stream);
}

LegacyBound legacy_bound(std::uint64_t t, std::uint64_t r)
{
    if (t < 2 || t % 2 == 0 || t % 3 == 0)
        raise(Errc::invalid_argument, "legacy_bound: t = " + std::to_string(t) + " must exceed 1 and be coprime to 6");
    if (r >= t)
        raise(Errc::invalid_argument, "legacy_bound: need 0 <= r < t");
    LegacyBound out;
    // |24 r - 1| has the same gcd with t as 24 r - 1.
    const std::uint64_t a = r == 0 ? 1 : 24 * r - 1;
    out.d = static_cast<std::uint64_t>(gcd64(static_cast<std::int64_t>(a), static_cast<std::int64_t>(t)));
    while ((std::uint64_t{24} << out.j) <= t)
        ++out.j;

    BigInt two_j;
    mpz_ui_pow_ui(two_j.get_mpz_t(), 2, out.j);
    BigInt head;
    mpz_ui_pow_ui(head.get_mpz_t(), 2, 23 + out.j);
    BigInt t6;
    mpz_ui_pow_ui(t6.get_mpz_t(), t, 6);
    head *= 2187; // 3^7
    head *= t6;
    Rational value(head, BigInt(static_cast<unsigned long>(out.d)) * out.d);
    value.canonicalize();
    for (std::uint64_t p : prime_divisors(6 * t)) {
        const BigInt p2 = BigInt(static_cast<unsigned long>(p)) * p;
        Rational factor(p2 - 1, p2);
        factor.canonicalize();
        value *= factor;
    }
    value -= Rational(two_j);
    out.exact = value;
    out.value = floor_of(value);
    return out;
}

RamanujanCheck verify_ramanujan(std::uint64_t ell, std::uint64_t count)
{
    const std::uint64_t delta = delta_of(ell);
    return verify_ramanujan(ell, count, residue_stream(ell * count + delta + 1, ell));
}

RamanujanCheck verify_ramanujan(std::uint64_t ell, std::uint64_t count, const ResidueStream &stream)
{
    const std::uint64_t delta = delta_of(ell);
    if (count < 1)
        raise(Errc::invalid_argument, "verify_ramanujan: count must be >= 1");
    if (stream.modulus() % ell != 0)
        raise(Errc::invalid_argument, "verify_ramanujan: stream modulus " + std::to_string(stream.modulus())
                                          + " is not a multiple of " + std::to_string(ell));
    const std::uint64_t need = ell * (count - 1) + delta + 1;
    if (stream.length() < need)
        raise(Errc::stream_too_short, "verify_ramanujan: stream too short, requires length " + std::to_string(need));
    RamanujanCheck out;
    for (std::uint64_t n = 0; n < count; ++n) {
        if (stream.value(ell * n + delta) % ell != 0) {
            out.holds = false;
            out.first_failure = n;
            break;
        }
    }
    return out;
}

std::int64_t default_hecke_precision(std::uint64_t ell)
{
    require_prime_ell(ell, "default_hecke_precision");
    const auto l = static_cast<std::int64_t>(ell);
    return l * (l * l - 1);
}

std::int64_t minimum_hecke_precision(std::uint64_t ell)
{
    const std::uint64_t ceiling = search_ceiling(theorem_bound(ell));
    return static_cast<std::int64_t>(24 * (ell * ceiling + delta_of(ell)));
}

HeckeCheck nonvanishing_check(std::uint64_t ell, std::int64_t prec, const ResidueStream *stream)
{
    require_prime_ell(ell, "nonvanishing_check");
    if (prec == 0)
        prec = default_hecke_precision(ell);
    const std::int64_t need = minimum_hecke_precision(ell);
    if (prec < need)
        raise(Errc::precision_exhausted, "nonvanishing_check: precision insufficient, window " + std::to_string(prec)
                                             + " is below the required " + std::to_string(need));

    HeckeCheck out;
    out.ell = ell;
    out.prec = prec;
    const Series f = eta_quotient_expand(EtaQuotient({{3, 8}, {6, -8}}), Ring::gf2(), prec);
    const Series fu = u_op(f, ell);
    out.first_odd_exponent = fu.first_nonzero();
    out.nonvanishing = out.first_odd_exponent.has_value();

    const std::uint64_t ceiling = search_ceiling(theorem_bound(ell));
    std::optional<ResidueStream> owned;
    if (stream == nullptr) {
        owned = residue_stream(required_stream_length(ell, ceiling), 2);
        stream = &*owned;
    }
    const auto m_min = smallest_odd_m(ell, *stream, ceiling);
    if (m_min) {
        const auto big_m = static_cast<std::int64_t>(ell * *m_min + delta_of(ell));
        out.expected_exponent = (24 * big_m - 1) / static_cast<std::int64_t>(ell);
    }
    out.consistent = out.first_odd_exponent.has_value() && out.expected_exponent.has_value()
        && *out.first_odd_exponent == *out.expected_exponent;

    const Series t = hecke_t0_mod2(f, ell);
    const auto pole = -static_cast<std::int64_t>(ell);
    out.hecke_has_pole = t.lo() <= pole && pole < t.prec() && !t.is_zero_at(pole);
    out.hecke_support_in_multiples = support_in_multiples(t, static_cast<std::int64_t>(ell), 2);
    return out;
}

} // namespace ppar
