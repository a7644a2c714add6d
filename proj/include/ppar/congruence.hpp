#ifndef PPAR_CONGRUENCE_HPP
#define PPAR_CONGRUENCE_HPP

#include <cstdint>
#include <optional>

#include "ppar/arith.hpp"
#include "ppar/partition.hpp"

namespace ppar {

// Verification record for the progression t*m + delta_t.
struct BoundReport {
    std::uint64_t t = 0;
    std::uint64_t delta = 0;
    std::optional<std::uint64_t> m_min; // nullopt: nothing odd up to search_ceiling
    Rational theorem_bound;
    BigInt legacy_bound;
    bool verdict = false;
    std::uint64_t search_ceiling = 0;
};

struct LegacyBound {
    BigInt value;   // floor of exact
    Rational exact;
    std::uint64_t d = 0;
    std::uint64_t j = 0;
};

struct RamanujanCheck {
    bool holds = true;
    std::optional<std::uint64_t> first_failure; // n with p(ell n + delta) != 0 mod ell
};

struct HeckeCheck {
    std::uint64_t ell = 0;
    std::int64_t prec = 0;
    bool nonvanishing = false;
    std::optional<std::int64_t> first_odd_exponent;
    std::optional<std::int64_t> expected_exponent;
    bool consistent = false;
    bool hecke_has_pole = false;
    bool hecke_support_in_multiples = false;
};

// 0 < delta < t with 24 delta = 1 (mod t); t > 1 coprime to 6.
std::uint64_t delta_of(std::uint64_t t);

// (ell^2 - 1)/24 for primes ell >= 5.
Rational theorem_bound(std::uint64_t ell);
// (t/24) * product of the distinct primes dividing t.
Rational remark2_bound(std::uint64_t t);

// Largest m with m < bound.
std::uint64_t search_ceiling(const Rational &bound);
// Stream length needed to read p(t m + delta_t) for every m <= ceiling.
std::uint64_t required_stream_length(std::uint64_t t, std::uint64_t ceiling);

std::optional<std::uint64_t> smallest_odd_m(std::uint64_t t, const ResidueStream &stream, std::uint64_t ceiling);

BoundReport verify_theorem_bound(std::uint64_t ell, const ResidueStream &stream);
BoundReport verify_remark2(std::uint64_t t, const ResidueStream &stream);

// j is the least non-negative integer with 2^j > t/24.
LegacyBound legacy_bound(std::uint64_t t, std::uint64_t r);

RamanujanCheck verify_ramanujan(std::uint64_t ell, std::uint64_t count);
RamanujanCheck verify_ramanujan(std::uint64_t ell, std::uint64_t count, const ResidueStream &stream);

// Default F window for nonvanishing_check: ell (ell^2 - 1).
std::int64_t default_hecke_precision(std::uint64_t ell);
// Smallest window that still contains every exponent the theorem allows.
std::int64_t minimum_hecke_precision(std::uint64_t ell);

// prec == 0 selects default_hecke_precision.  Without a stream one is
// generated to the theorem's search ceiling.
HeckeCheck nonvanishing_check(std::uint64_t ell, std::int64_t prec = 0, const ResidueStream *stream = nullptr);

} // namespace ppar

#endif
