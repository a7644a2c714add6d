// Command-line front end; talks to the library only through the C interface.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ppar/ppar.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_usage = 2;
constexpr int exit_resource = 3;
constexpr int exit_falsified = 4;

struct CliError {
    int code;
    std::string message;
};

int exit_code_for(ppar_status st)
{
    switch (st) {
    case PPAR_OK:
        return exit_ok;
    case PPAR_ERR_INVALID_ARGUMENT:
    case PPAR_ERR_PRECISION_EXHAUSTED:
    case PPAR_ERR_NON_UNIT:
    case PPAR_ERR_RING_MISMATCH:
        return exit_usage;
    case PPAR_ERR_RESOURCE:
    case PPAR_ERR_IO:
    case PPAR_ERR_CACHE_FORMAT:
        return exit_resource;
    default:
        return exit_internal;
    }
}

void check(ppar_status st)
{
    if (st != PPAR_OK)
        throw CliError{exit_code_for(st), ppar_last_error()};
}

void usage_error(const std::string &msg)
{
    throw CliError{exit_usage, msg};
}

struct StreamDeleter {
    void operator()(ppar_stream *s) const { ppar_stream_free(s); }
};
struct SeriesDeleter {
    void operator()(ppar_series *s) const { ppar_series_free(s); }
};
struct StringDeleter {
    void operator()(char *s) const { ppar_string_free(s); }
};
using StreamPtr = std::unique_ptr<ppar_stream, StreamDeleter>;
using SeriesPtr = std::unique_ptr<ppar_series, SeriesDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take(char *s)
{
    StringPtr owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

// Reuses a cached stream when it is long enough and has the right modulus;
// otherwise generates one and refreshes the cache.
StreamPtr obtain_stream(std::uint64_t length, std::uint64_t modulus, const std::string &cache)
{
    ppar_stream *raw = nullptr;
    if (!cache.empty() && std::filesystem::exists(cache)) {
        check(ppar_stream_load(cache.c_str(), &raw));
        StreamPtr cached(raw);
        if (ppar_stream_modulus(cached.get()) == modulus && ppar_stream_length(cached.get()) >= length)
            return cached;
    }
    check(ppar_stream_generate(length, modulus, &raw));
    StreamPtr fresh(raw);
    if (!cache.empty())
        check(ppar_stream_save(fresh.get(), cache.c_str()));
    return fresh;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string &text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        usage_error("--primes expects A..B, got '" + text + "'");
    try {
        std::size_t used = 0;
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        const auto lo = std::stoull(a, &used);
        if (used != a.size())
            throw std::invalid_argument(a);
        const auto hi = std::stoull(b, &used);
        if (used != b.size())
            throw std::invalid_argument(b);
        if (lo < 5 || lo > hi)
            usage_error("--primes needs 5 <= A <= B");
        return {lo, hi};
    } catch (const std::logic_error &) {
        usage_error("--primes expects A..B, got '" + text + "'");
    }
    return {};
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0)
            return false;
    return true;
}

struct ParityOptions {
    std::uint64_t limit = 0;
    std::uint64_t modulus = 2;
    std::string out;
    std::string cache;
    bool proportion = false;
    std::string rounding = "truncate";
};

int run_parity(const ParityOptions &o)
{
    if (o.limit < 1)
        usage_error("--limit must be >= 1");
    if (o.modulus < 2)
        usage_error("--mod must be >= 2");
    const std::string format = o.out.empty() ? (o.proportion ? "" : "csv") : o.out;
    auto stream = obtain_stream(o.limit, o.modulus, o.cache);

    std::string proportion;
    if (o.proportion) {
        if (o.modulus % 2 != 0)
            usage_error("--proportion needs an even --mod");
        char *s = nullptr;
        check(ppar_proportion_even(stream.get(), o.limit, 4, o.rounding == "nearest" ? 1 : 0, &s));
        proportion = take(s);
    }

    if (format == "csv") {
        std::string buf = "n,value\n";
        for (std::uint64_t n = 0; n < o.limit; ++n) {
            std::uint64_t v = 0;
            check(ppar_stream_value(stream.get(), n, &v));
            buf += std::to_string(n);
            buf += ',';
            buf += std::to_string(v);
            buf += '\n';
        }
        std::cout << buf;
    } else if (format == "json") {
        nlohmann::json j;
        j["modulus"] = o.modulus;
        j["limit"] = o.limit;
        auto values = nlohmann::json::array();
        for (std::uint64_t n = 0; n < o.limit; ++n) {
            std::uint64_t v = 0;
            check(ppar_stream_value(stream.get(), n, &v));
            values.push_back(v);
        }
        j["values"] = std::move(values);
        if (o.proportion)
            j["proportion_even"] = proportion;
        std::cout << j.dump() << "\n";
        return exit_ok;
    }
    if (o.proportion)
        std::cout << "proportion_even=" << proportion << "\n";
    return exit_ok;
}

struct SweepOptions {
    std::string primes;
    std::string out = "json";
    std::string cache;
};

int run_sweep(const SweepOptions &o, unsigned threads)
{
    const auto [lo, hi] = parse_range(o.primes);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (is_prime(n))
            primes.push_back(n);
    std::uint64_t length = 1;
    for (auto ell : primes) {
        std::uint64_t need = 0;
        check(ppar_required_length(ell, 0, &need));
        length = std::max(length, need);
    }
    auto stream = obtain_stream(length, 2, o.cache);

    struct Slot {
        std::string json;
        int verdict = 0;
        ppar_status status = PPAR_OK;
        std::string error;
    };
    std::vector<Slot> slots(primes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < primes.size(); i = next++) {
            char *json = nullptr;
            slots[i].status = ppar_sweep_entry_json(stream.get(), primes[i], &slots[i].verdict, &json);
            if (slots[i].status != PPAR_OK)
                slots[i].error = ppar_last_error();
            slots[i].json = take(json);
        }
    };
    const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(primes.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();

    bool all = true;
    auto reports = nlohmann::json::array();
    for (const auto &s : slots) {
        if (s.status != PPAR_OK)
            throw CliError{exit_code_for(s.status), s.error};
        all = all && s.verdict != 0;
        reports.push_back(nlohmann::json::parse(s.json));
    }
    if (o.out == "csv") {
        std::cout << "t,delta,m_min,theorem_bound,legacy_bound,verdict,search_ceiling\n";
        for (const auto &r : reports) {
            std::cout << r["t"].get<std::uint64_t>() << ',' << r["delta"].get<std::uint64_t>() << ','
                      << (r["m_min"].is_null() ? std::string("NOT-FOUND") : std::to_string(r["m_min"].get<std::uint64_t>()))
                      << ',' << r["theorem_bound"].get<std::string>() << ',' << r["legacy_bound"].get<std::string>() << ','
                      << (r["verdict"].get<bool>() ? "true" : "false") << ',' << r["search_ceiling"].get<std::uint64_t>()
                      << '\n';
        }
    } else {
        std::cout << reports.dump(2) << "\n";
    }
    return all ? exit_ok : exit_falsified;
}

struct EtaOptions {
    std::string quotient;
    std::int64_t prec = 10;
    std::uint64_t modulus = 0;
    std::string format = "text";
};

int run_eta(const EtaOptions &o)
{
    if (o.prec < 1)
        usage_error("--prec must be >= 1");
    if (o.modulus == 1)
        usage_error("--mod must be >= 2 (or omitted for integer coefficients)");
    ppar_series *raw = nullptr;
    check(ppar_series_eta_quotient_parse(o.quotient.c_str(), o.modulus, o.prec, &raw));
    SeriesPtr s(raw);
    char *text = nullptr;
    if (o.format == "json")
        check(ppar_series_to_json(s.get(), &text));
    else
        check(ppar_series_to_text(s.get(), &text));
    std::cout << take(text) << "\n";
    return exit_ok;
}

int print_json(char *json, bool ok)
{
    std::cout << nlohmann::json::parse(take(json)).dump(2) << "\n";
    return ok ? exit_ok : exit_falsified;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Partition parity in Ramanujan progressions: eta-quotients, Hecke operators, Sturm bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);

    ParityOptions parity;
    auto *cmd_parity = app.add_subcommand("parity", "p(n) mod m for n < N");
    cmd_parity->add_option("--limit", parity.limit, "Number of values N")->required();
    cmd_parity->add_option("--mod", parity.modulus, "Modulus m (default 2)");
    cmd_parity->add_option("--out", parity.out, "Row format")->check(CLI::IsMember({"csv", "json"}));
    cmd_parity->add_option("--cache", parity.cache, "Residue cache file");
    cmd_parity->add_flag("--proportion", parity.proportion, "Also print the proportion of even values");
    cmd_parity->add_option("--rounding", parity.rounding, "Proportion digits: truncate (default) or nearest")
        ->check(CLI::IsMember({"truncate", "nearest"}));

    SweepOptions sweep;
    auto *cmd_sweep = app.add_subcommand("sweep", "Check the odd-value bound for every prime in A..B");
    cmd_sweep->add_option("--primes", sweep.primes, "Prime range A..B")->required();
    cmd_sweep->add_option("--out", sweep.out, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd_sweep->add_option("--cache", sweep.cache, "Parity cache file");

    EtaOptions eta;
    auto *cmd_eta = app.add_subcommand("eta", "Expand an eta-quotient");
    cmd_eta->add_option("--quotient", eta.quotient, "Factors as delta:r,delta:r,...")->required();
    cmd_eta->add_option("--prec", eta.prec, "Keep exponents below q^P (default 10)");
    cmd_eta->add_option("--mod", eta.modulus, "Reduce coefficients mod m");
    cmd_eta->add_option("--format", eta.format, "Rendering")->check(CLI::IsMember({"text", "json"}));

    std::uint64_t sturm_prime = 0;
    auto *cmd_sturm = app.add_subcommand("sturm", "Cusp orders and Sturm-bound arithmetic for Gamma_0(2 ell)");
    cmd_sturm->add_option("--prime", sturm_prime, "Prime ell >= 5")->required();

    std::uint64_t hecke_prime = 0;
    std::int64_t hecke_prec = 0;
    auto *cmd_hecke = app.add_subcommand("hecke", "Nonvanishing of F|U_ell mod 2");
    cmd_hecke->add_option("--prime", hecke_prime, "Prime ell >= 5")->required();
    cmd_hecke->add_option("--prec", hecke_prec, "F window (default ell (ell^2 - 1))");

    std::uint64_t remark_t = 0;
    std::string remark_cache;
    auto *cmd_remark = app.add_subcommand("remark2", "Odd-value bound for a modulus t coprime to 6");
    cmd_remark->add_option("--t", remark_t, "Modulus t")->required();
    cmd_remark->add_option("--cache", remark_cache, "Parity cache file");

    std::uint64_t legacy_t = 0, legacy_r = 0;
    auto *cmd_legacy = app.add_subcommand("legacy", "Evaluate the older odd-value bound");
    cmd_legacy->add_option("--t", legacy_t, "Modulus t")->required();
    cmd_legacy->add_option("--r", legacy_r, "Residue r")->required();

    std::uint64_t rama_prime = 0, rama_count = 10000;
    auto *cmd_rama = app.add_subcommand("ramanujan", "Check p(ell n + delta) = 0 mod ell for n < count");
    cmd_rama->add_option("--prime", rama_prime, "Modulus ell")->required();
    cmd_rama->add_option("--count", rama_count, "Number of n to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*cmd_parity)
            return run_parity(parity);
        if (*cmd_sweep)
            return run_sweep(sweep, threads);
        if (*cmd_eta)
            return run_eta(eta);
        if (*cmd_sturm) {
            int ok = 0;
            char *json = nullptr;
            check(ppar_sturm_report_json(nullptr, sturm_prime, &ok, &json));
            return print_json(json, ok != 0);
        }
        if (*cmd_hecke) {
            int nonvanishing = 0;
            char *json = nullptr;
            check(ppar_hecke_check_json(hecke_prime, hecke_prec, &nonvanishing, &json));
            const std::string text = take(json);
            const auto j = nlohmann::json::parse(text);
            std::cout << j.dump(2) << "\n";
            return (nonvanishing != 0 && j["consistent"].get<bool>()) ? exit_ok : exit_falsified;
        }
        if (*cmd_remark) {
            std::uint64_t need = 0;
            check(ppar_required_length(remark_t, 1, &need));
            auto stream = obtain_stream(need, 2, remark_cache);
            int verdict = 0;
            char *json = nullptr;
            check(ppar_remark2_report_json(stream.get(), remark_t, &verdict, &json));
            return print_json(json, verdict != 0);
        }
        if (*cmd_legacy) {
            char *json = nullptr;
            check(ppar_legacy_bound_json(legacy_t, legacy_r, &json));
            return print_json(json, true);
        }
        if (*cmd_rama) {
            int holds = 0;
            std::uint64_t first = 0;
            check(ppar_verify_ramanujan(rama_prime, rama_count, &holds, &first));
            nlohmann::json j{{"ell", rama_prime}, {"count", rama_count}, {"holds", holds != 0}};
            j["first_failure"] = holds != 0 ? nlohmann::json(nullptr) : nlohmann::json(first);
            std::cout << j.dump(2) << "\n";
            return holds != 0 ? exit_ok : exit_falsified;
        }
    } catch (const CliError &e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_usage;
}
