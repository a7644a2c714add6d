#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ppar/congruence.hpp"
#include "ppar/cusp.hpp"
#include "ppar/error.hpp"
#include "ppar/report.hpp"

using namespace ppar;

namespace {

Errc code_of(auto &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::io;
}

// Index by brute force: count points of P^1(Z/N).
std::uint64_t projective_line_size(std::uint64_t n)
{
    std::uint64_t count = 0;
    for (std::uint64_t c = 0; c < n; ++c)
        for (std::uint64_t d = 0; d < n; ++d)
            if (std::gcd(std::gcd(c, d), n) == 1)
                ++count;
    // Each point has phi(N) representatives.
    std::uint64_t phi = 0;
    for (std::uint64_t u = 1; u <= n; ++u)
        phi += std::gcd(u, n) == 1;
    return count / phi;
}

} // namespace

TEST_CASE("index of Gamma_0(N)")
{
    CHECK(index_gamma0(1) == 1);
    CHECK(index_gamma0(10) == 18);
    CHECK(index_gamma0(14) == 24);
    CHECK(index_gamma0(18) == 36);
    for (std::uint64_t n = 1; n <= 60; ++n)
        CHECK(index_gamma0(n) == projective_line_size(n));
    CHECK(code_of([] { (void)index_gamma0(0); }) == Errc::invalid_argument);
}

TEST_CASE("cusp class table")
{
    const auto c5 = cusp_classes(5);
    REQUIRE(c5.size() == 4);
    CHECK(c5[0].gcd_class == 1);
    CHECK(c5[0].order == make_rational(1, 30));
    CHECK(c5[0].kind == OrderKind::exact);
    CHECK(c5[0].multiplicity == 10);
    CHECK(c5[1].gcd_class == 2);
    CHECK(c5[1].order == make_rational(-5, 3));
    CHECK(c5[1].multiplicity == 5);
    CHECK(c5[2].gcd_class == 5);
    CHECK(c5[2].kind == OrderKind::lower_bound);
    CHECK(c5[2].order == make_rational(1, 6));
    CHECK(c5[2].multiplicity == 2);
    CHECK(c5[3].gcd_class == 10);
    CHECK(c5[3].multiplicity == 1);

    const auto c7 = cusp_classes(7);
    CHECK(c7[0].order == make_rational(1, 42));
    CHECK(c7[0].multiplicity == 14);
    CHECK(c7[1].order == make_rational(-7, 3));
    CHECK(c7[1].multiplicity == 7);

    for (std::uint64_t ell : primes_in_range(5, 200)) {
        const auto cl = cusp_classes(ell);
        std::uint64_t total = 0;
        for (const auto &c : cl) {
            total += c.multiplicity;
            const auto &m = c.representative;
            CHECK(m[0] * m[3] - m[1] * m[2] == 1);
            CHECK(std::gcd(static_cast<std::uint64_t>(std::abs(m[2])), 2 * ell) == c.gcd_class);
        }
        CHECK(total == index_gamma0(2 * ell));
    }
    CHECK(code_of([] { (void)cusp_classes(9); }) == Errc::invalid_argument);
}

TEST_CASE("Sturm right-hand side")
{
    const auto c5 = cusp_classes(5);
    const auto ev = sturm_rhs(0, index_gamma0(10), non_identity_order_sum(c5));
    CHECK(ev.index == 18);
    CHECK(ev.rhs == make_rational(23, 3));
    for (std::uint64_t ell : primes_in_range(5, 199)) {
        CAPTURE(ell);
        const auto l = static_cast<std::int64_t>(ell);
        const auto e = sturm_rhs(0, index_gamma0(2 * ell), non_identity_order_sum(cusp_classes(ell)));
        CHECK(e.rhs == make_rational(l * l - 2, 3));
    }
    CHECK(sturm_rhs(12, 10, 0).rhs == 10);
}

TEST_CASE("gl_bound")
{
    CHECK(gl_bound(5).m_bound == make_rational(1, 6));
    CHECK(gl_bound(5).ord2_bound == make_rational(23, 3));
    CHECK(gl_bound(7).ord2_bound == make_rational(47, 3));
    for (std::uint64_t ell : primes_in_range(5, 300))
        CHECK(gl_bound(ell).m_bound < theorem_bound(ell));
}

TEST_CASE("observed order at infinity")
{
    const auto s = residue_stream(200000, 2);
    CHECK(ord2_observed(5, s) == make_rational(19, 3));
    CHECK(ord2_observed(7, s) == make_rational(17, 3));
    CHECK(ord2_observed(47, s) == make_rational(25, 3));
    for (std::uint64_t ell : primes_in_range(5, 50)) {
        CAPTURE(ell);
        const auto from_eta = ord2_from_eta(ell);
        REQUIRE(from_eta.has_value());
        CHECK(*from_eta == *ord2_observed(ell, s));
        CHECK(*from_eta <= gl_bound(ell).ord2_bound);
    }
}

TEST_CASE("sturm_report")
{
    const auto s = residue_stream(200000, 2);
    for (std::uint64_t ell : primes_in_range(5, 150)) {
        CAPTURE(ell);
        const auto rep = sturm_report(ell, s);
        CHECK(rep.ok);
        CHECK(rep.index == index_gamma0(2 * ell));
    }
    const auto j = to_json(sturm_report(5, s));
    CHECK(j["ell"] == 5);
    CHECK(j["index"] == 18);
    CHECK(j["ok"] == true);
    CHECK(j["classes"].size() == 4);
    CHECK(j["classes"][1]["order"] == "-5/3");
    CHECK(j["classes"][0]["representative"] == nlohmann::json::array({0, -1, 1, 0}));
}
