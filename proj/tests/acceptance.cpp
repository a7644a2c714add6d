// One PASS/FAIL line per acceptance criterion.  Exit status is the number of
// failing criteria.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ppar/congruence.hpp"
#include "ppar/cusp.hpp"
#include "ppar/error.hpp"
#include "ppar/partition.hpp"
#include "ppar/series.hpp"

using namespace ppar;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(const char *name, const std::function<Outcome()> &body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %-34s %7.3fs  %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
}

void info(const std::string &line)
{
    std::printf("INFO  %s\n", line.c_str());
}

std::string str(const Rational &r)
{
    return to_fraction_string(r);
}

const ResidueStream &parity_stream()
{
    // Long enough for ell = 199 and every t <= 143.
    static const ResidueStream s = residue_stream(1000000, 2);
    return s;
}

} // namespace

int main()
{
    criterion("proportion-of-even-values", [] {
        const auto t0 = std::chrono::steady_clock::now();
        const auto s = residue_stream(1000000, 2);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const std::pair<std::uint64_t, const char *> rows[] = {
            {200000, "0.5012…"}, {600000, "0.5000…"}, {1000000, "0.5004…"}};
        bool ok = secs <= 10.0;
        std::string detail = "stream " + std::to_string(secs).substr(0, 5) + "s;";
        for (auto [n, want] : rows) {
            const auto got = proportion_even(n, s);
            ok = ok && got == want;
            detail += " " + std::to_string(n) + "->" + got + (got == want ? "" : " (want " + std::string(want) + ")");
        }
        info("even counts: " + std::to_string(count_even(200000, s)) + "/200000, "
             + std::to_string(count_even(600000, s)) + "/600000, " + std::to_string(count_even(1000000, s))
             + "/1000000");
        info("rounded to nearest: 200000->" + proportion_even(200000, s, 4, Rounding::nearest) + " 600000->"
             + proportion_even(600000, s, 4, Rounding::nearest) + " 1000000->"
             + proportion_even(1000000, s, 4, Rounding::nearest));
        return Outcome{ok, detail};
    });

    criterion("generating-function-values", [] {
        const auto table = partition_table(6);
        const long want[] = {1, 1, 2, 3, 5, 7, 11};
        bool ok = partition_exact(4) == 5;
        for (int n = 0; n < 7; ++n)
            ok = ok && table[static_cast<std::size_t>(n)] == want[n];
        const auto series = inv(euler_product(Ring::integers(), 1, 7));
        for (int n = 0; n < 7; ++n)
            ok = ok && series.coefficient(n) == want[n];
        return Outcome{ok, "p(0..6) = 1,1,2,3,5,7,11; p(4) = 5"};
    });

    criterion("eta-quotient-expansion", [] {
        const auto g = eta_quotient_expand(EtaQuotient({{1, 8}, {2, -8}}), Ring::integers(), 4);
        const std::pair<std::int64_t, long> want[] = {{-1, 1}, {2, -8}, {5, 28}, {8, -64}};
        bool ok = g.denom() == 3;
        for (auto [num, c] : want)
            ok = ok && g.coefficient(num) == c;
        return Outcome{ok, g.to_text()};
    });

    criterion("prime-modulus-sweep-5..199", [] {
        const auto &s = parity_stream();
        std::uint64_t count = 0, worst_t = 0;
        Rational worst = 0;
        for (std::uint64_t ell : primes_in_range(5, 199)) {
            const auto rep = verify_theorem_bound(ell, s);
            if (!rep.verdict)
                return Outcome{false, "ell = " + std::to_string(ell) + " has no odd value below the bound"};
            const Rational ratio = Rational(BigInt(static_cast<unsigned long>(*rep.m_min))) / rep.theorem_bound;
            if (ratio > worst) {
                worst = ratio;
                worst_t = ell;
            }
            ++count;
        }
        return Outcome{true, std::to_string(count) + " primes; largest m_min/bound = " + str(worst) + " at ell = "
                                 + std::to_string(worst_t)};
    });

    criterion("composite-modulus-sweep-to-143", [] {
        const auto &s = parity_stream();
        std::uint64_t count = 0;
        for (std::uint64_t t = 5; t <= 143; ++t) {
            if (t % 2 == 0 || t % 3 == 0)
                continue;
            const auto rep = verify_remark2(t, s);
            if (!rep.verdict)
                return Outcome{false, "t = " + std::to_string(t) + " has no odd value below the bound"};
            ++count;
        }
        return Outcome{true, std::to_string(count) + " moduli t coprime to 6"};
    });

    criterion("ramanujan-congruences", [] {
        std::string detail;
        bool ok = true;
        for (std::uint64_t ell : {5u, 7u, 11u}) {
            const auto r = verify_ramanujan(ell, 10000);
            ok = ok && r.holds;
            detail += "mod " + std::to_string(ell) + (r.holds ? " ok; " : " fails; ");
        }
        return Outcome{ok, detail + "n < 10000"};
    });

    criterion("sturm-arithmetic", [] {
        const auto &s = parity_stream();
        std::uint64_t count = 0;
        for (std::uint64_t ell : primes_in_range(5, 199)) {
            const auto rep = sturm_report(ell, s);
            const auto l = static_cast<std::int64_t>(ell);
            std::uint64_t mult = 0;
            for (const auto &c : rep.classes)
                mult += c.multiplicity;
            const bool ok = rep.evaluation.rhs == make_rational(l * l - 2, 3) && mult == 3 * (ell + 1)
                && rep.ord2_observed && *rep.ord2_observed <= rep.evaluation.rhs && rep.ok;
            if (!ok)
                return Outcome{false, "ell = " + std::to_string(ell)};
            ++count;
        }
        return Outcome{true, std::to_string(count) + " primes; rhs = (ell^2 - 2)/3"};
    });

    criterion("cross-module-oracles", [] {
        const auto p = inv(euler_product(Ring::gf2(), 1, 2000));
        const auto s = residue_stream(2000, 2);
        for (std::int64_t n = 0; n < 2000; ++n)
            if (p.coefficient(n) != s.value(static_cast<std::uint64_t>(n)))
                return Outcome{false, "parity mismatch at n = " + std::to_string(n)};
        std::uint64_t primes = 0;
        for (std::uint64_t ell : primes_in_range(5, 50)) {
            const auto h = nonvanishing_check(ell, 0, &parity_stream());
            if (!h.consistent)
                return Outcome{false, "first odd exponent disagrees at ell = " + std::to_string(ell)};
            ++primes;
        }
        return Outcome{true, "N = 2000 parities; first odd exponent agrees for " + std::to_string(primes) + " primes"};
    });

    criterion("legacy-bound-comparison", [] {
        std::uint64_t count = 0;
        for (std::uint64_t t = 5; t <= 199; ++t) {
            if (t % 2 == 0 || t % 3 == 0)
                continue;
            const Rational ours = is_prime(t) ? theorem_bound(t) : remark2_bound(t);
            const auto legacy = legacy_bound(t, delta_of(t));
            if (!(legacy.exact > ours))
                return Outcome{false, "t = " + std::to_string(t)};
            ++count;
        }
        return Outcome{true, std::to_string(count) + " moduli, legacy bound strictly larger"};
    });

    criterion("property-suites", [] {
        std::mt19937_64 rng(12345);
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = Series::from_coefficients(Ring::integers(), 1, -2, oracle::random_coeffs(rng, 60, -20, 20));
            const auto b = Series::from_coefficients(Ring::integers(), 1, 0, oracle::random_coeffs(rng, 50, -20, 20));
            for (std::uint64_t ell : {5u, 7u, 13u}) {
                if (!agree_on_overlap(u_op(v_op(a, ell), ell), a))
                    return Outcome{false, "U V != id"};
                if (!agree_on_overlap(v_op(mul(a, b), ell), mul(v_op(a, ell), v_op(b, ell))))
                    return Outcome{false, "V not multiplicative"};
                if (!agree_on_overlap(u_op(add(a, b), ell), add(u_op(a, ell), u_op(b, ell))))
                    return Outcome{false, "U not additive"};
            }
        }
        std::uniform_int_distribution<std::size_t> len(1, 512);
        for (int trial = 0; trial < 200; ++trial) {
            const auto ca = oracle::random_coeffs(rng, len(rng), -3, 3);
            const auto cb = oracle::random_coeffs(rng, len(rng), -3, 3);
            const auto gi = mul(Series::from_coefficients(Ring::integers(), 1, 0, ca),
                                Series::from_coefficients(Ring::integers(), 1, 0, cb));
            const auto g2 = mul(Series::from_coefficients(Ring::gf2(), 1, 0, ca),
                                Series::from_coefficients(Ring::gf2(), 1, 0, cb));
            if (!agree_on_overlap(gi.reduce(Ring::gf2()), g2))
                return Outcome{false, "GF2 convolution mismatch"};
        }
        const auto path = std::filesystem::temp_directory_path() / "ppar_acceptance_cache.bin";
        for (std::uint64_t m : {2u, 11u}) {
            const auto s = residue_stream(100003, m);
            save_cache(s, path);
            if (!(load_cache(path) == s))
                return Outcome{false, "cache round trip mod " + std::to_string(m)};
        }
        std::filesystem::remove(path);
        return Outcome{true, "operator algebra, 200 GF2/INT convolutions, cache round trip"};
    });

    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
