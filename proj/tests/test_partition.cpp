#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "oracles.hpp"
#include "ppar/error.hpp"
#include "ppar/partition.hpp"
#include "ppar/series.hpp"

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

std::filesystem::path temp_file(const char *name)
{
    return std::filesystem::temp_directory_path() / (std::string("ppar_test_") + name);
}

void write_bytes(const std::filesystem::path &p, const std::string &bytes)
{
    std::ofstream(p, std::ios::binary) << bytes;
}

std::string read_bytes(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("small parity streams")
{
    const auto s7 = residue_stream(7, 2);
    const std::uint64_t expect7[] = {1, 1, 0, 1, 1, 1, 1};
    for (std::uint64_t n = 0; n < 7; ++n)
        CHECK(s7.value(n) == expect7[n]);

    const auto s10 = residue_stream(10, 2);
    const std::uint64_t expect10[] = {1, 1, 0, 1, 1, 1, 1, 1, 0, 0};
    for (std::uint64_t n = 0; n < 10; ++n) {
        CHECK(s10.value(n) == expect10[n]);
        CHECK(s10.odd(n) == (expect10[n] == 1));
    }
    CHECK(count_even(10, s10) == 3);
    CHECK(code_of([&] { (void)s10.value(10); }) == Errc::stream_too_short);

    for (int n = 0; n < 40; ++n)
        CHECK(s7.is_prefix_of(residue_stream(40, 2)));
    for (int n = 0; n < 40; ++n)
        CHECK(residue_stream(40, 2).value(static_cast<std::uint64_t>(n)) == oracle::count_partitions(n, n) % 2);
}

TEST_CASE("parity agrees with the Jacobi-identity oracle up to 10^6")
{
    const std::size_t n = 1000000;
    const auto s = residue_stream(n, 2);
    const auto ref = oracle::parity_by_jacobi(n);
    std::uint64_t even = 0;
    for (std::size_t k = 0; k < n; ++k) {
        REQUIRE(s.value(k) == ref[k]);
        even += ref[k] == 0;
    }
    CHECK(count_even(n, s) == even);
    CHECK(count_even(n, s) == 500446);
    CHECK(count_even(100, s) == 42);
    CHECK(count_even(1000, s) == 472);
}

TEST_CASE("parity agrees with the GF2 reciprocal of the Euler product")
{
    const std::int64_t n = 2000;
    const auto p = inv(euler_product(Ring::gf2(), 1, n));
    const auto s = residue_stream(static_cast<std::uint64_t>(n), 2);
    for (std::int64_t k = 0; k < n; ++k)
        REQUIRE(p.coefficient(k) == s.value(static_cast<std::uint64_t>(k)));
}

TEST_CASE("residues mod m agree with the exact values")
{
    const std::size_t n = 10001;
    const auto dp = oracle::partitions_dp(n);
    const auto table = partition_table(n - 1);
    REQUIRE(table.size() == n);
    for (std::size_t k = 0; k < n; ++k)
        REQUIRE(table[k] == dp[k]);
    CHECK(partition_exact(49) == 173525);
    CHECK(partition_exact(100) == mpz_class("190569292"));
    for (std::uint64_t m : {2u, 3u, 5u, 7u, 11u, 13u, 1000000007u}) {
        CAPTURE(m);
        const auto s = residue_stream(n, m);
        for (std::size_t k = 0; k < n; ++k) {
            const mpz_class r = dp[k] % m;
            REQUIRE(s.value(k) == r.get_ui());
        }
    }
    const auto s2 = residue_stream(n, 2);
    const auto s4 = residue_stream(n, 4);
    for (std::size_t k = 0; k < n; ++k)
        REQUIRE(s2.odd(k) == s4.odd(k));
    CHECK(code_of([&] { (void)residue_stream(10, 5).odd(1); }) == Errc::invalid_argument);
}

TEST_CASE("streams are prefixes of longer streams")
{
    for (std::uint64_t m : {2u, 6u}) {
        const auto big = residue_stream(5000, m);
        for (std::uint64_t len : {1u, 63u, 64u, 65u, 1000u, 4999u, 5000u}) {
            const auto small = residue_stream(len, m);
            CHECK(small.is_prefix_of(big));
            CHECK(small.is_prefix_of(small));
            if (len < 5000)
                CHECK_FALSE(big.is_prefix_of(small));
        }
    }
    CHECK_FALSE(residue_stream(10, 2).is_prefix_of(residue_stream(20, 3)));
}

TEST_CASE("argument checks")
{
    CHECK(code_of([] { (void)residue_stream(0, 2); }) == Errc::invalid_argument);
    CHECK(code_of([] { (void)residue_stream(10, 1); }) == Errc::invalid_argument);
    CHECK(code_of([] { (void)residue_stream(max_stream_length + 1, 2); }) == Errc::resource_limit);
    CHECK(code_of([] { (void)residue_stream(max_residue_stream_length + 1, 3); }) == Errc::resource_limit);
    CHECK(code_of([] { (void)partition_exact(default_exact_limit + 1); }) == Errc::resource_limit);
    CHECK(partition_exact(0) == 1);
}

TEST_CASE("proportion of even values")
{
    const auto s = residue_stream(1000000, 2);
    CHECK(proportion_even(200000, s) == "0.5011…");
    CHECK(proportion_even(200000, s, 4, Rounding::nearest) == "0.5012…");
    CHECK(proportion_even(600000, s) == "0.5000…");
    CHECK(proportion_even(1000000, s) == "0.5004…");
    CHECK(proportion_even(1000000, s, 6) == "0.500446…");
    CHECK(proportion_even(1, s) == "0.0000…");
    CHECK(proportion_even(3, s) == "0.3333…");
    CHECK(proportion_even(3, s, 1, Rounding::nearest) == "0.3…");
    CHECK(proportion_even(10, s) == "0.3000…");
    CHECK(proportion_even(1000, s, 2) == "0.47…");
    CHECK(code_of([&] { (void)proportion_even(0, s); }) == Errc::invalid_argument);
    CHECK(code_of([&] { (void)proportion_even(1000001, s); }) == Errc::stream_too_short);
    CHECK(code_of([&] { (void)proportion_even(10, residue_stream(10, 3)); }) == Errc::invalid_argument);
}

TEST_CASE("cache round trip")
{
    for (std::uint64_t m : {2u, 7u}) {
        for (std::uint64_t len : {1u, 64u, 100u, 4097u}) {
            const auto path = temp_file("roundtrip.bin");
            const auto s = residue_stream(len, m);
            save_cache(s, path);
            const auto bytes = read_bytes(path);
            CHECK(bytes.substr(0, 4) == "PPAR");
            CHECK(bytes[4] == 1);
            CHECK(bytes.size() == 21 + (m == 2 ? (len + 7) / 8 : len));
            CHECK(load_cache(path) == s);
            std::filesystem::remove(path);
        }
    }
}

TEST_CASE("cache format errors")
{
    const auto path = temp_file("bad.bin");
    save_cache(residue_stream(100, 2), path);
    const auto good = read_bytes(path);

    auto bad = good;
    bad[0] = 'X';
    write_bytes(path, bad);
    CHECK(code_of([&] { (void)load_cache(path); }) == Errc::cache_format);

    write_bytes(path, good.substr(0, good.size() - 1));
    CHECK(code_of([&] { (void)load_cache(path); }) == Errc::cache_format);

    write_bytes(path, good.substr(0, 10));
    CHECK(code_of([&] { (void)load_cache(path); }) == Errc::cache_format);

    bad = good;
    bad[4] = 9;
    write_bytes(path, bad);
    CHECK(code_of([&] { (void)load_cache(path); }) == Errc::cache_format);

    save_cache(residue_stream(10, 3), path);
    bad = read_bytes(path);
    bad[21] = 5;
    write_bytes(path, bad);
    CHECK(code_of([&] { (void)load_cache(path); }) == Errc::cache_format);

    std::filesystem::remove(path);
    CHECK(code_of([&] { (void)load_cache(path); }) == Errc::io);
    CHECK(code_of([&] { save_cache(residue_stream(10, 1000), path); }) == Errc::invalid_argument);
}
