#ifndef PPAR_SERIES_HPP
#define PPAR_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ppar/arith.hpp"
#include "ppar/bitvector.hpp"

namespace ppar {

// Coefficient ring of a series: arbitrary-precision integers, packed bits,
// or residues modulo a machine-word modulus m >= 2.
class Ring {
public:
    enum class Kind { integer, gf2, mod };

    static Ring integers() noexcept { return Ring(Kind::integer, 0); }
    static Ring gf2() noexcept { return Ring(Kind::gf2, 2); }
    static Ring mod(std::uint64_t m);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    // 0 for the integers.
    [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
    [[nodiscard]] std::string name() const;

    friend bool operator==(const Ring &, const Ring &) = default;

private:
    Ring(Kind k, std::uint64_t m) noexcept : kind_(k), modulus_(m) {}

    Kind kind_;
    std::uint64_t modulus_;
};

// Truncated series sum a(n) q^(n/denom) over lo <= n < prec.
//
// Coefficients at numerators >= prec are unknown and never reported.
// Values are immutable once built; the set_* members exist for construction
// and are not used by any operation on its inputs.
class Series {
public:
    // Zero series over the window [lo, prec).
    Series(Ring ring, std::int64_t denom, std::int64_t lo, std::int64_t prec);

    static Series one(Ring ring, std::int64_t denom, std::int64_t prec);
    // Coefficients given from numerator lo upwards; prec = lo + coeffs.size()
    // unless a larger explicit prec is given (the gap is zero).
    static Series from_coefficients(Ring ring, std::int64_t denom, std::int64_t lo,
                                    std::span<const std::int64_t> coeffs,
                                    std::optional<std::int64_t> prec = std::nullopt);

    [[nodiscard]] const Ring &ring() const noexcept { return ring_; }
    [[nodiscard]] std::int64_t denom() const noexcept { return denom_; }
    [[nodiscard]] std::int64_t lo() const noexcept { return lo_; }
    [[nodiscard]] std::int64_t prec() const noexcept { return prec_; }
    [[nodiscard]] std::size_t length() const noexcept { return static_cast<std::size_t>(prec_ - lo_); }

    // Coefficient at numerator n; throws precision_exhausted outside [lo, prec).
    // Residue rings report the canonical representative in [0, m).
    [[nodiscard]] BigInt coefficient(std::int64_t n) const;
    [[nodiscard]] bool is_zero_at(std::int64_t n) const;
    [[nodiscard]] bool is_zero() const;
    // Numerator of the first nonzero stored coefficient.
    [[nodiscard]] std::optional<std::int64_t> first_nonzero() const;
    // Numerators of every nonzero stored coefficient, ascending.
    [[nodiscard]] std::vector<std::int64_t> support() const;

    void set_coefficient(std::int64_t n, const BigInt &value);
    void set_coefficient(std::int64_t n, std::int64_t value);

    // Reduction into a quotient ring (INT -> anything, MOD m -> MOD d with d | m,
    // MOD m -> GF2 with m even).
    [[nodiscard]] Series reduce(Ring target) const;
    // Same series over a denominator that is a multiple of denom().
    [[nodiscard]] Series rescale(std::int64_t new_denom) const;
    // Smallest denominator able to hold every nonzero stored coefficient.
    [[nodiscard]] Series normalized() const;
    [[nodiscard]] Series truncated(std::int64_t new_prec) const;

    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] std::string to_json() const;

    // Raw storage, exactly one alternative matching ring().kind().
    using Storage = std::variant<std::vector<BigInt>, BitVector, std::vector<std::uint64_t>>;
    [[nodiscard]] const Storage &storage() const noexcept { return coeffs_; }
    [[nodiscard]] Storage &storage() noexcept { return coeffs_; }

private:
    Ring ring_;
    std::int64_t denom_;
    std::int64_t lo_;
    std::int64_t prec_;
    Storage coeffs_;
};

// Coefficient-wise equality over the common window, after unifying denominators.
bool agree_on_overlap(const Series &a, const Series &b);

Series add(const Series &a, const Series &b);
Series mul(const Series &a, const Series &b);
Series inv(const Series &a);
Series pow(const Series &a, std::int64_t e);

// sum a(ell n) q^(n/D); requires gcd(ell, D) = 1.
Series u_op(const Series &a, std::uint64_t ell);
// q^(n/D) -> q^(ell n/D).
Series v_op(const Series &a, std::uint64_t ell);
// u_op + v_op over GF2; the 1/ell scalar is 1 because ell is odd.
Series hecke_t0_mod2(const Series &a, std::uint64_t ell);

// Least exponent with a nonzero stored coefficient; nullopt stands for
// +infinity (zero to the tracked precision).
std::optional<Rational> ord_q(const Series &a);

// True iff every exponent numerator whose coefficient is nonzero mod p is
// divisible by c.
bool support_in_multiples(const Series &a, std::int64_t c, std::uint64_t p);

// prod eta(delta tau)^(r_delta).
class EtaQuotient {
public:
    EtaQuotient() = default;
    // level 0 picks the lcm of the deltas.
    explicit EtaQuotient(std::map<std::int64_t, std::int64_t> factors, std::int64_t level = 0);

    // "delta:r,delta:r,..."; an empty or blank string is the empty quotient.
    static EtaQuotient parse(std::string_view text);

    [[nodiscard]] const std::map<std::int64_t, std::int64_t> &factors() const noexcept { return factors_; }
    [[nodiscard]] std::int64_t level() const noexcept { return level_; }
    // sum r_delta * delta: the leading exponent is this over 24.
    [[nodiscard]] std::int64_t offset_numerator() const noexcept;

private:
    std::map<std::int64_t, std::int64_t> factors_;
    std::int64_t level_ = 1;
};

// prod_{n>=1} (1 - q^(step n)) below q^prec, from the pentagonal-number series.
Series euler_product(Ring ring, std::int64_t step, std::int64_t prec);

// eta(delta tau)^r over denominator 24, exponents strictly below q^prec.
Series eta_power(std::int64_t delta, std::int64_t r, std::int64_t prec, Ring ring = Ring::integers());

// Expansion of the quotient below q^prec.  With normalize the denominator is
// 24 / gcd(24, offset_numerator()); otherwise it stays 24.
Series eta_quotient_expand(const EtaQuotient &eq, Ring ring, std::int64_t prec, bool normalize = true);

} // namespace ppar

#endif
