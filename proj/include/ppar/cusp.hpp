#ifndef PPAR_CUSP_HPP
#define PPAR_CUSP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ppar/arith.hpp"
#include "ppar/partition.hpp"

namespace ppar {

enum class OrderKind { exact, lower_bound };

// Row-major [[a, b], [c, d]].
using Matrix2 = std::array<std::int64_t, 4>;

// Order of G_ell at one cusp class of Gamma_0(2 ell), classified by gcd(c, 2 ell).
struct CuspClassReport {
    std::uint64_t gcd_class = 0;
    Matrix2 representative{};
    Rational order;
    OrderKind kind = OrderKind::exact;
    std::uint64_t multiplicity = 0;
};

struct SturmEvaluation {
    Rational weight;
    std::uint64_t index = 0;
    Rational cusp_order_sum;
    Rational rhs;
};

struct GlBound {
    Rational ord2_bound;
    Rational m_bound;
};

struct SturmReport {
    std::uint64_t ell = 0;
    std::uint64_t index = 0;
    std::vector<CuspClassReport> classes;
    SturmEvaluation evaluation;
    GlBound bound;
    std::optional<Rational> ord2_observed;
    bool ok = false;
};

// [SL2(Z) : Gamma_0(N)] = N prod_{p | N} (1 + 1/p).
std::uint64_t index_gamma0(std::uint64_t n);

// Classes gcd = 1, 2, ell, 2 ell in that order.
std::vector<CuspClassReport> cusp_classes(std::uint64_t ell);

// Sum of order * multiplicity over every class except the identity (gcd = 2 ell).
// Lower-bound orders contribute their stated minimum.
Rational non_identity_order_sum(std::span<const CuspClassReport> classes);

SturmEvaluation sturm_rhs(const Rational &weight, std::uint64_t index, const Rational &cusp_order_sum);

GlBound gl_bound(std::uint64_t ell);

// (24 M - 1) / (3 ell) with M = ell m_min + delta_ell; nullopt if no odd
// value lies below the theorem bound.
std::optional<Rational> ord2_observed(std::uint64_t ell, const ResidueStream &stream);

// ord_q of U_ell applied to eta(tau)^8/eta(2 tau)^8 reduced mod 2.
// prec == 0 picks a window covering the theorem's search range.
std::optional<Rational> ord2_from_eta(std::uint64_t ell, std::int64_t prec = 0);

SturmReport sturm_report(std::uint64_t ell, const ResidueStream &stream);

} // namespace ppar

#endif
