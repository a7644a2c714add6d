#include <charconv>
#include <string>

#include "ppar/error.hpp"
#include "ppar/series.hpp"

namespace ppar {

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        raise(Errc::invalid_argument, "eta quotient: bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

// prod (1 - q^(delta n))^r below q^len, as a denominator-1 series starting at q^0.
Series euler_power(Ring ring, std::int64_t delta, std::int64_t r, std::int64_t len)
{
    const Series base = euler_product(ring, 1, ceil_div(len, delta));
    return v_op(pow(base, r), static_cast<std::uint64_t>(delta));
}

} // namespace

EtaQuotient::EtaQuotient(std::map<std::int64_t, std::int64_t> factors, std::int64_t level)
    : factors_(std::move(factors))
{
    std::int64_t l = 1;
    for (const auto &[delta, r] : factors_) {
        if (delta < 1)
            raise(Errc::invalid_argument, "eta quotient: delta must be positive, got " + std::to_string(delta));
        if (r == 0)
            raise(Errc::invalid_argument, "eta quotient: exponent for delta " + std::to_string(delta) + " is zero");
        l = lcm64(l, delta);
    }
    if (level == 0)
        level = l;
    if (level < 1 || level % l != 0)
        raise(Errc::invalid_argument, "eta quotient: level " + std::to_string(level) + " is not divisible by every delta");
    level_ = level;
}

EtaQuotient EtaQuotient::parse(std::string_view text)
{
    std::map<std::int64_t, std::int64_t> factors;
    text = trim(text);
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos)
            raise(Errc::invalid_argument, "eta quotient: expected 'delta:r', got '" + std::string(item) + "'");
        const std::int64_t delta = parse_int(item.substr(0, colon), "delta");
        const std::int64_t r = parse_int(item.substr(colon + 1), "exponent");
        if (!factors.emplace(delta, r).second)
            raise(Errc::invalid_argument, "eta quotient: delta " + std::to_string(delta) + " listed twice");
    }
    return EtaQuotient(std::move(factors));
}

std::int64_t EtaQuotient::offset_numerator() const noexcept
{
    std::int64_t o = 0;
    for (const auto &[delta, r] : factors_)
        o += delta * r;
    return o;
}

Series euler_product(Ring ring, std::int64_t step, std::int64_t prec)
{
    if (step < 1 || prec < 1)
        raise(Errc::invalid_argument, "euler_product: step and precision must be positive");
    Series s(ring, 1, 0, prec);
    s.set_coefficient(0, std::int64_t{1});
    // Generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2 carry sign (-1)^k.
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t g1 = step * (k * (3 * k - 1) / 2);
        if (g1 >= prec)
            break;
        const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
        s.set_coefficient(g1, sign);
        const std::int64_t g2 = step * (k * (3 * k + 1) / 2);
        if (g2 < prec)
            s.set_coefficient(g2, sign);
    }
    return s;
}

Series eta_power(std::int64_t delta, std::int64_t r, std::int64_t prec, Ring ring)
{
    if (delta < 1)
        raise(Errc::invalid_argument, "eta_power: delta must be positive");
    if (prec < 1)
        raise(Errc::invalid_argument, "eta_power: precision must be positive");
    const std::int64_t offset = r * delta;
    const std::int64_t len = ceil_div(24 * prec - offset, 24);
    if (len < 1)
        raise(Errc::precision_exhausted, "eta_power: leading exponent lies beyond the requested precision");
    if (r == 0)
        return Series::one(ring, 24, 24 * prec);
    const Series body = euler_power(ring, delta, r, len);
    Series out(ring, 24, offset, 24 * prec);
    for (std::int64_t k = 0; offset + 24 * k < 24 * prec; ++k)
        out.set_coefficient(offset + 24 * k, body.coefficient(k));
    return out;
}

Series eta_quotient_expand(const EtaQuotient &eq, Ring ring, std::int64_t prec, bool normalize)
{
    if (prec < 1)
        raise(Errc::invalid_argument, "eta_quotient_expand: precision must be positive");
    const std::int64_t offset = eq.offset_numerator();
    const std::int64_t len = ceil_div(24 * prec - offset, 24);
    if (len < 1)
        raise(Errc::precision_exhausted, "eta_quotient_expand: leading exponent lies beyond the requested precision");

    Series body = Series::one(ring, 1, len);
    for (const auto &[delta, r] : eq.factors())
        body = mul(body, euler_power(ring, delta, r, len));

    const std::int64_t g = normalize ? gcd64(24, offset) : 1;
    const std::int64_t denom = 24 / g;
    const std::int64_t base = offset / g;
    Series out(ring, denom, base, denom * prec);
    for (std::int64_t k = 0; base + denom * k < denom * prec; ++k) {
        const auto di = static_cast<std::int64_t>(base + denom * k);
        if (!body.is_zero_at(k))
            out.set_coefficient(di, body.coefficient(k));
    }
    return out;
}

} // namespace ppar
