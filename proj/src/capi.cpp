#include "ppar/ppar.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ppar/congruence.hpp"
#include "ppar/cusp.hpp"
#include "ppar/error.hpp"
#include "ppar/partition.hpp"
#include "ppar/report.hpp"
#include "ppar/series.hpp"

struct ppar_stream {
    ppar::ResidueStream value;
};

struct ppar_series {
    ppar::Series value;
};

namespace {

thread_local std::string last_error;

ppar_status status_of(ppar::Errc c)
{
    switch (c) {
    case ppar::Errc::invalid_argument:
        return PPAR_ERR_INVALID_ARGUMENT;
    case ppar::Errc::ring_mismatch:
        return PPAR_ERR_RING_MISMATCH;
    case ppar::Errc::precision_exhausted:
        return PPAR_ERR_PRECISION_EXHAUSTED;
    case ppar::Errc::non_unit:
        return PPAR_ERR_NON_UNIT;
    case ppar::Errc::resource_limit:
        return PPAR_ERR_RESOURCE;
    case ppar::Errc::stream_too_short:
        return PPAR_ERR_STREAM_TOO_SHORT;
    case ppar::Errc::cache_format:
        return PPAR_ERR_CACHE_FORMAT;
    case ppar::Errc::io:
        return PPAR_ERR_IO;
    }
    return PPAR_ERR_INTERNAL;
}

template <typename F>
ppar_status guarded(F &&f) noexcept
{
    try {
        f();
        return PPAR_OK;
    } catch (const ppar::Error &e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return PPAR_ERR_RESOURCE;
    } catch (const std::exception &e) {
        last_error = e.what();
        return PPAR_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return PPAR_ERR_INTERNAL;
    }
}

void require(bool cond, const char *what)
{
    if (!cond)
        ppar::raise(ppar::Errc::invalid_argument, what);
}

char *dup_string(const std::string &s)
{
    char *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (p == nullptr)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

ppar::Ring ring_of(uint64_t code)
{
    if (code == PPAR_RING_INT)
        return ppar::Ring::integers();
    if (code == 2)
        return ppar::Ring::gf2();
    return ppar::Ring::mod(code);
}

ppar_series *wrap(ppar::Series s)
{
    return new ppar_series{std::move(s)};
}

} // namespace

extern "C" {

const char *ppar_version(void)
{
    return "1.0.0";
}

const char *ppar_last_error(void)
{
    return last_error.c_str();
}

void ppar_string_free(char *s)
{
    std::free(s);
}

ppar_status ppar_stream_generate(uint64_t length, uint64_t modulus, ppar_stream **out)
{
    return guarded([&] {
        require(out != nullptr, "null output handle");
        *out = new ppar_stream{ppar::residue_stream(length, modulus)};
    });
}

ppar_status ppar_stream_load(const char *path, ppar_stream **out)
{
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = new ppar_stream{ppar::load_cache(path)};
    });
}

ppar_status ppar_stream_save(const ppar_stream *s, const char *path)
{
    return guarded([&] {
        require(s != nullptr && path != nullptr, "null argument");
        ppar::save_cache(s->value, path);
    });
}

void ppar_stream_free(ppar_stream *s)
{
    delete s;
}

uint64_t ppar_stream_length(const ppar_stream *s)
{
    return s == nullptr ? 0 : s->value.length();
}

uint64_t ppar_stream_modulus(const ppar_stream *s)
{
    return s == nullptr ? 0 : s->value.modulus();
}

ppar_status ppar_stream_value(const ppar_stream *s, uint64_t n, uint64_t *out)
{
    return guarded([&] {
        require(s != nullptr && out != nullptr, "null argument");
        *out = s->value.value(n);
    });
}

ppar_status ppar_proportion_even(const ppar_stream *s, uint64_t n, int digits, int round_nearest, char **out)
{
    return guarded([&] {
        require(s != nullptr && out != nullptr, "null argument");
        *out = dup_string(ppar::proportion_even(n, s->value, digits,
                                                round_nearest != 0 ? ppar::Rounding::nearest : ppar::Rounding::truncate));
    });
}

ppar_status ppar_partition_exact(uint64_t n, char **out)
{
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = dup_string(ppar::partition_exact(n).get_str());
    });
}

ppar_status ppar_series_eta_quotient(const int64_t *deltas, const int64_t *exponents, size_t count, uint64_t ring,
                                     int64_t prec, ppar_series **out)
{
    return guarded([&] {
        require(out != nullptr, "null output handle");
        require(count == 0 || (deltas != nullptr && exponents != nullptr), "null factor arrays");
        std::map<std::int64_t, std::int64_t> factors;
        for (size_t i = 0; i < count; ++i)
            if (!factors.emplace(deltas[i], exponents[i]).second)
                ppar::raise(ppar::Errc::invalid_argument, "eta quotient: delta " + std::to_string(deltas[i]) + " listed twice");
        *out = wrap(ppar::eta_quotient_expand(ppar::EtaQuotient(std::move(factors)), ring_of(ring), prec));
    });
}

ppar_status ppar_series_eta_quotient_parse(const char *text, uint64_t ring, int64_t prec, ppar_series **out)
{
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = wrap(ppar::eta_quotient_expand(ppar::EtaQuotient::parse(text), ring_of(ring), prec));
    });
}

ppar_status ppar_series_from_coefficients(uint64_t ring, int64_t denom, int64_t lo, const int64_t *coeffs, size_t count,
                                          ppar_series **out)
{
    return guarded([&] {
        require(out != nullptr && coeffs != nullptr, "null argument");
        *out = wrap(ppar::Series::from_coefficients(ring_of(ring), denom, lo, std::span<const int64_t>(coeffs, count)));
    });
}

void ppar_series_free(ppar_series *s)
{
    delete s;
}

ppar_status ppar_series_mul(const ppar_series *a, const ppar_series *b, ppar_series **out)
{
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "null argument");
        *out = wrap(ppar::mul(a->value, b->value));
    });
}

ppar_status ppar_series_inv(const ppar_series *a, ppar_series **out)
{
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = wrap(ppar::inv(a->value));
    });
}

ppar_status ppar_series_pow(const ppar_series *a, int64_t e, ppar_series **out)
{
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = wrap(ppar::pow(a->value, e));
    });
}

ppar_status ppar_series_u(const ppar_series *a, uint64_t ell, ppar_series **out)
{
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = wrap(ppar::u_op(a->value, ell));
    });
}

ppar_status ppar_series_v(const ppar_series *a, uint64_t ell, ppar_series **out)
{
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = wrap(ppar::v_op(a->value, ell));
    });
}

ppar_status ppar_series_hecke_t0_mod2(const ppar_series *a, uint64_t ell, ppar_series **out)
{
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = wrap(ppar::hecke_t0_mod2(a->value, ell));
    });
}

ppar_status ppar_series_ord_q(const ppar_series *a, int *is_infinite, char **order)
{
    return guarded([&] {
        require(a != nullptr && is_infinite != nullptr && order != nullptr, "null argument");
        const auto o = ppar::ord_q(a->value);
        *is_infinite = o ? 0 : 1;
        *order = o ? dup_string(ppar::to_fraction_string(*o)) : nullptr;
    });
}

ppar_status ppar_series_support_in_multiples(const ppar_series *a, int64_t c, uint64_t p, int *result)
{
    return guarded([&] {
        require(a != nullptr && result != nullptr, "null argument");
        *result = ppar::support_in_multiples(a->value, c, p) ? 1 : 0;
    });
}

ppar_status ppar_series_window(const ppar_series *a, int64_t *denom, int64_t *lo, int64_t *prec)
{
    return guarded([&] {
        require(a != nullptr && denom != nullptr && lo != nullptr && prec != nullptr, "null argument");
        *denom = a->value.denom();
        *lo = a->value.lo();
        *prec = a->value.prec();
    });
}

ppar_status ppar_series_coefficient(const ppar_series *a, int64_t n, char **out)
{
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = dup_string(a->value.coefficient(n).get_str());
    });
}

ppar_status ppar_series_to_text(const ppar_series *a, char **out)
{
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = dup_string(a->value.to_text());
    });
}

ppar_status ppar_series_to_json(const ppar_series *a, char **out)
{
    return guarded([&] {
        require(a != nullptr && out != nullptr, "null argument");
        *out = dup_string(a->value.to_json());
    });
}

ppar_status ppar_delta_of(uint64_t t, uint64_t *out)
{
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = ppar::delta_of(t);
    });
}

ppar_status ppar_required_length(uint64_t t, int remark2, uint64_t *out)
{
    return guarded([&] {
        require(out != nullptr, "null argument");
        const auto bound = remark2 != 0 ? ppar::remark2_bound(t) : ppar::theorem_bound(t);
        *out = ppar::required_stream_length(t, ppar::search_ceiling(bound));
    });
}

ppar_status ppar_theorem_report_json(const ppar_stream *s, uint64_t ell, int *verdict, char **json)
{
    return guarded([&] {
        require(s != nullptr && verdict != nullptr && json != nullptr, "null argument");
        const auto rep = ppar::verify_theorem_bound(ell, s->value);
        *verdict = rep.verdict ? 1 : 0;
        *json = dup_string(ppar::to_json(rep).dump());
    });
}

ppar_status ppar_remark2_report_json(const ppar_stream *s, uint64_t t, int *verdict, char **json)
{
    return guarded([&] {
        require(s != nullptr && verdict != nullptr && json != nullptr, "null argument");
        const auto rep = ppar::verify_remark2(t, s->value);
        *verdict = rep.verdict ? 1 : 0;
        *json = dup_string(ppar::to_json(rep).dump());
    });
}

ppar_status ppar_sweep_entry_json(const ppar_stream *s, uint64_t ell, int *verdict, char **json)
{
    return guarded([&] {
        require(s != nullptr && verdict != nullptr && json != nullptr, "null argument");
        const auto rep = ppar::verify_theorem_bound(ell, s->value);
        const auto sturm = ppar::sturm_report(ell, s->value);
        auto j = ppar::to_json(rep);
        j["sturm"] = ppar::to_json(sturm);
        *verdict = (rep.verdict && sturm.ok) ? 1 : 0;
        *json = dup_string(j.dump());
    });
}

ppar_status ppar_legacy_bound_json(uint64_t t, uint64_t r, char **json)
{
    return guarded([&] {
        require(json != nullptr, "null argument");
        *json = dup_string(ppar::to_json(ppar::legacy_bound(t, r), t, r).dump());
    });
}

ppar_status ppar_sturm_report_json(const ppar_stream *s, uint64_t ell, int *ok, char **json)
{
    return guarded([&] {
        require(ok != nullptr && json != nullptr, "null argument");
        std::optional<ppar::ResidueStream> owned;
        const ppar::ResidueStream *stream = s != nullptr ? &s->value : nullptr;
        if (stream == nullptr) {
            owned = ppar::residue_stream(
                ppar::required_stream_length(ell, ppar::search_ceiling(ppar::theorem_bound(ell))), 2);
            stream = &*owned;
        }
        const auto rep = ppar::sturm_report(ell, *stream);
        *ok = rep.ok ? 1 : 0;
        *json = dup_string(ppar::to_json(rep).dump());
    });
}

ppar_status ppar_hecke_check_json(uint64_t ell, int64_t prec, int *nonvanishing, char **json)
{
    return guarded([&] {
        require(nonvanishing != nullptr && json != nullptr, "null argument");
        const auto h = ppar::nonvanishing_check(ell, prec);
        *nonvanishing = h.nonvanishing ? 1 : 0;
        *json = dup_string(ppar::to_json(h).dump());
    });
}

ppar_status ppar_verify_ramanujan(uint64_t ell, uint64_t count, int *holds, uint64_t *first_failure)
{
    return guarded([&] {
        require(holds != nullptr && first_failure != nullptr, "null argument");
        const auto r = ppar::verify_ramanujan(ell, count);
        *holds = r.holds ? 1 : 0;
        *first_failure = r.first_failure.value_or(0);
    });
}

} // extern "C"
