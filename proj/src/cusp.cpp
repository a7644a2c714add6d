#include "ppar/cusp.hpp"

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

Rational q(std::int64_t num, std::int64_t den)
{
    return make_rational(num, den);
}

} // namespace

std::uint64_t index_gamma0(std::uint64_t n)
{
    if (n < 1)
        raise(Errc::invalid_argument, "index_gamma0: N must be positive");
    std::uint64_t idx = n;
    for (std::uint64_t p : prime_divisors(n))
        idx = idx / p * (p + 1);
    return idx;
}

std::vector<CuspClassReport> cusp_classes(std::uint64_t ell)
{
    require_prime_ell(ell, "cusp_classes");
    const auto l = static_cast<std::int64_t>(ell);
    return {
        {1, {0, -1, 1, 0}, q(1, 6 * l), OrderKind::exact, 2 * ell},
        {2, {1, 0, 6, 1}, q(-l, 3), OrderKind::exact, ell},
        {ell, {1, 0, 3 * l, 1}, q(1, 6), OrderKind::lower_bound, 2},
        {2 * ell, {1, 0, 0, 1}, q(1, 3), OrderKind::lower_bound, 1},
    };
}

Rational non_identity_order_sum(std::span<const CuspClassReport> classes)
{
    std::uint64_t top = 0;
    for (const auto &c : classes)
        top = std::max(top, c.gcd_class);
    Rational sum = 0;
    for (const auto &c : classes)
        if (c.gcd_class != top)
            sum += c.order * BigInt(static_cast<unsigned long>(c.multiplicity));
    return sum;
}

SturmEvaluation sturm_rhs(const Rational &weight, std::uint64_t index, const Rational &cusp_order_sum)
{
    SturmEvaluation ev;
    ev.weight = weight;
    ev.index = index;
    ev.cusp_order_sum = cusp_order_sum;
    ev.rhs = weight / 12 * BigInt(static_cast<unsigned long>(index)) - cusp_order_sum;
    ev.rhs.canonicalize();
    return ev;
}

GlBound gl_bound(std::uint64_t ell)
{
    require_prime_ell(ell, "gl_bound");
    const auto l = static_cast<std::int64_t>(ell);
    const auto delta = static_cast<std::int64_t>(delta_of(ell));
    GlBound b;
    b.ord2_bound = q(l * l - 2, 3);
    b.m_bound = (Rational(l * l - 2) - q(24 * delta - 1, l)) / 24;
    b.m_bound.canonicalize();
    if (!(b.m_bound < theorem_bound(ell)))
        raise(Errc::invalid_argument, "gl_bound: m bound is not below (ell^2 - 1)/24");
    return b;
}

std::optional<Rational> ord2_observed(std::uint64_t ell, const ResidueStream &stream)
{
    require_prime_ell(ell, "ord2_observed");
    const auto m_min = smallest_odd_m(ell, stream, search_ceiling(theorem_bound(ell)));
    if (!m_min)
        return std::nullopt;
    const auto big_m = static_cast<std::int64_t>(ell * *m_min + delta_of(ell));
    return q(24 * big_m - 1, 3 * static_cast<std::int64_t>(ell));
}

std::optional<Rational> ord2_from_eta(std::uint64_t ell, std::int64_t prec)
{
    require_prime_ell(ell, "ord2_from_eta");
    if (prec == 0) {
        const std::uint64_t ceiling = search_ceiling(theorem_bound(ell));
        prec = 8 * static_cast<std::int64_t>(ell * ceiling + delta_of(ell));
    }
    const Series g = eta_quotient_expand(EtaQuotient({{1, 8}, {2, -8}}), Ring::gf2(), prec);
    return ord_q(u_op(g, ell));
}

SturmReport sturm_report(std::uint64_t ell, const ResidueStream &stream)
{
    SturmReport rep;
    rep.ell = ell;
    rep.index = index_gamma0(2 * ell);
    rep.classes = cusp_classes(ell);
    rep.evaluation = sturm_rhs(0, rep.index, non_identity_order_sum(rep.classes));
    rep.bound = gl_bound(ell);
    rep.ord2_observed = ord2_observed(ell, stream);
    std::uint64_t mult = 0;
    for (const auto &c : rep.classes)
        mult += c.multiplicity;
    rep.ok = mult == rep.index && rep.evaluation.rhs == rep.bound.ord2_bound && rep.ord2_observed.has_value()
        && *rep.ord2_observed <= rep.evaluation.rhs;
    return rep;
}

} // namespace ppar
