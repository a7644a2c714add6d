#include "ppar/series.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "json.hpp"

#include "ppar/error.hpp"

namespace ppar {

namespace {

// Dense windows beyond this many coefficients are refused.
constexpr std::int64_t max_window = std::int64_t{1} << 34;

using IntVec = std::vector<BigInt>;
using ResVec = std::vector<std::uint64_t>;

void require_same_ring(const Series &a, const Series &b, const char *op)
{
    if (a.ring() != b.ring())
        raise(Errc::ring_mismatch, std::string(op) + ": ring mismatch (" + a.ring().name() + " vs " + b.ring().name() + ")");
}

void require_window(std::int64_t lo, std::int64_t prec, const char *op)
{
    if (lo >= prec)
        raise(Errc::precision_exhausted, std::string(op) + ": precision exhausted (window [" + std::to_string(lo) + ", "
                                             + std::to_string(prec) + ") is empty)");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    const std::uint64_t s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

template <typename F>
void for_each_set_bit(const BitVector &v, F &&f)
{
    const auto words = v.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        while (bits != 0) {
            f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
}

std::size_t nonzero_count(const Series::Storage &s)
{
    return std::visit(
        [](const auto &c) -> std::size_t {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, BitVector>)
                return c.popcount();
            else
                return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](const auto &x) { return x != 0; }));
        },
        s);
}

std::pair<Series, Series> unify(const Series &a, const Series &b)
{
    if (a.denom() == b.denom())
        return {a, b};
    const std::int64_t l = lcm64(a.denom(), b.denom());
    return {a.rescale(l), b.rescale(l)};
}

// dst[di] = src[si] for two series over the same ring.
void copy_coeff(Series &dst, std::size_t di, const Series &src, std::size_t si)
{
    switch (src.ring().kind()) {
    case Ring::Kind::integer:
        std::get<IntVec>(dst.storage())[di] = std::get<IntVec>(src.storage())[si];
        break;
    case Ring::Kind::gf2:
        std::get<BitVector>(dst.storage()).set(di, std::get<BitVector>(src.storage()).get(si));
        break;
    case Ring::Kind::mod:
        std::get<ResVec>(dst.storage())[di] = std::get<ResVec>(src.storage())[si];
        break;
    }
}

// dst[di] += src[si].
void add_coeff(Series &dst, std::size_t di, const Series &src, std::size_t si)
{
    switch (src.ring().kind()) {
    case Ring::Kind::integer:
        std::get<IntVec>(dst.storage())[di] += std::get<IntVec>(src.storage())[si];
        break;
    case Ring::Kind::gf2:
        if (std::get<BitVector>(src.storage()).get(si))
            std::get<BitVector>(dst.storage()).flip(di);
        break;
    case Ring::Kind::mod: {
        auto &d = std::get<ResVec>(dst.storage())[di];
        d = addmod(d, std::get<ResVec>(src.storage())[si], src.ring().modulus());
        break;
    }
    }
}

std::string exponent_text(std::int64_t num, std::int64_t den)
{
    const std::int64_t g = gcd64(num, den);
    num /= g;
    den /= g;
    if (den == 1)
        return "q^(" + std::to_string(num) + ")";
    return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

// Multiplication kernels on raw coefficient arrays; index 0 is the lowest term
// and the product is cut at len.
IntVec mul_int(const IntVec &a, const IntVec &b, std::size_t len)
{
    IntVec r(len);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0)
            continue;
        const std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j)
            if (b[j] != 0)
                mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

ResVec mul_res(const ResVec &a, const ResVec &b, std::size_t len, std::uint64_t m)
{
    ResVec r(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0)
            continue;
        const std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j)
            if (b[j] != 0)
                r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], m), m);
    }
    return r;
}

BitVector mul_bits(const BitVector &a, const BitVector &b, std::size_t len)
{
    BitVector r(len);
    for_each_set_bit(a, [&](std::size_t i) {
        if (i < len)
            r.xor_shifted(b, i);
    });
    return r;
}

// Over GF2, (A + T)^2 = A^2 + T^2, so squaring doubles the known window.
Series square_gf2(const Series &a)
{
    Series r(a.ring(), a.denom(), 2 * a.lo(), 2 * a.prec());
    auto &dst = std::get<BitVector>(r.storage());
    for_each_set_bit(std::get<BitVector>(a.storage()), [&](std::size_t i) { dst.set(2 * i, true); });
    return r;
}

Series square(const Series &a)
{
    return a.ring().kind() == Ring::Kind::gf2 ? square_gf2(a) : mul(a, a);
}

} // namespace

Ring Ring::mod(std::uint64_t m)
{
    if (m < 2)
        raise(Errc::invalid_argument, "ring modulus must be >= 2, got " + std::to_string(m));
    return Ring(Kind::mod, m);
}

std::string Ring::name() const
{
    switch (kind_) {
    case Kind::integer:
        return "INT";
    case Kind::gf2:
        return "GF2";
    case Kind::mod:
        return "MOD " + std::to_string(modulus_);
    }
    return "?";
}

Series::Series(Ring ring, std::int64_t denom, std::int64_t lo, std::int64_t prec)
    : ring_(ring), denom_(denom), lo_(lo), prec_(prec)
{
    if (denom < 1)
        raise(Errc::invalid_argument, "series denominator must be positive");
    require_window(lo, prec, "series");
    if (prec - lo > max_window)
        raise(Errc::resource_limit, "series window of " + std::to_string(prec - lo) + " coefficients exceeds the limit");
    const auto n = static_cast<std::size_t>(prec - lo);
    switch (ring.kind()) {
    case Ring::Kind::integer:
        coeffs_ = IntVec(n);
        break;
    case Ring::Kind::gf2:
        coeffs_ = BitVector(n);
        break;
    case Ring::Kind::mod:
        coeffs_ = ResVec(n, 0);
        break;
    }
}

Series Series::one(Ring ring, std::int64_t denom, std::int64_t prec)
{
    Series s(ring, denom, 0, prec);
    s.set_coefficient(0, std::int64_t{1});
    return s;
}

Series Series::from_coefficients(Ring ring, std::int64_t denom, std::int64_t lo, std::span<const std::int64_t> coeffs,
                                 std::optional<std::int64_t> prec)
{
    const std::int64_t p = prec.value_or(lo + static_cast<std::int64_t>(coeffs.size()));
    Series s(ring, denom, lo, p);
    for (std::size_t i = 0; i < coeffs.size() && lo + static_cast<std::int64_t>(i) < p; ++i)
        s.set_coefficient(lo + static_cast<std::int64_t>(i), coeffs[i]);
    return s;
}

BigInt Series::coefficient(std::int64_t n) const
{
    if (n < lo_ || n >= prec_)
        raise(Errc::precision_exhausted, "coefficient at numerator " + std::to_string(n) + " is outside the tracked window ["
                                             + std::to_string(lo_) + ", " + std::to_string(prec_) + ")");
    const auto i = static_cast<std::size_t>(n - lo_);
    switch (ring_.kind()) {
    case Ring::Kind::integer:
        return std::get<IntVec>(coeffs_)[i];
    case Ring::Kind::gf2:
        return BigInt(std::get<BitVector>(coeffs_).get(i) ? 1 : 0);
    case Ring::Kind::mod:
        return BigInt(static_cast<unsigned long>(std::get<ResVec>(coeffs_)[i]));
    }
    return 0;
}

bool Series::is_zero_at(std::int64_t n) const
{
    if (n < lo_ || n >= prec_)
        raise(Errc::precision_exhausted, "numerator " + std::to_string(n) + " is outside the tracked window");
    const auto i = static_cast<std::size_t>(n - lo_);
    switch (ring_.kind()) {
    case Ring::Kind::integer:
        return std::get<IntVec>(coeffs_)[i] == 0;
    case Ring::Kind::gf2:
        return !std::get<BitVector>(coeffs_).get(i);
    case Ring::Kind::mod:
        return std::get<ResVec>(coeffs_)[i] == 0;
    }
    return true;
}

bool Series::is_zero() const
{
    return !first_nonzero().has_value();
}

std::optional<std::int64_t> Series::first_nonzero() const
{
    if (ring_.kind() == Ring::Kind::gf2) {
        const auto &bits = std::get<BitVector>(coeffs_);
        const std::size_t i = bits.find_first();
        if (i >= bits.size())
            return std::nullopt;
        return lo_ + static_cast<std::int64_t>(i);
    }
    for (std::int64_t n = lo_; n < prec_; ++n)
        if (!is_zero_at(n))
            return n;
    return std::nullopt;
}

std::vector<std::int64_t> Series::support() const
{
    std::vector<std::int64_t> out;
    if (ring_.kind() == Ring::Kind::gf2) {
        for_each_set_bit(std::get<BitVector>(coeffs_), [&](std::size_t i) { out.push_back(lo_ + static_cast<std::int64_t>(i)); });
        return out;
    }
    for (std::int64_t n = lo_; n < prec_; ++n)
        if (!is_zero_at(n))
            out.push_back(n);
    return out;
}

void Series::set_coefficient(std::int64_t n, const BigInt &value)
{
    if (n < lo_ || n >= prec_)
        raise(Errc::precision_exhausted, "cannot set numerator " + std::to_string(n) + " outside the tracked window");
    const auto i = static_cast<std::size_t>(n - lo_);
    switch (ring_.kind()) {
    case Ring::Kind::integer:
        std::get<IntVec>(coeffs_)[i] = value;
        break;
    case Ring::Kind::gf2:
        std::get<BitVector>(coeffs_).set(i, mpz_odd_p(value.get_mpz_t()) != 0);
        break;
    case Ring::Kind::mod:
        std::get<ResVec>(coeffs_)[i] = mpz_fdiv_ui(value.get_mpz_t(), ring_.modulus());
        break;
    }
}

void Series::set_coefficient(std::int64_t n, std::int64_t value)
{
    set_coefficient(n, BigInt(static_cast<long>(value)));
}

Series Series::reduce(Ring target) const
{
    if (target == ring_)
        return *this;
    const bool ok = ring_.kind() == Ring::Kind::integer
        || (ring_.kind() == Ring::Kind::mod && target.kind() == Ring::Kind::mod && ring_.modulus() % target.modulus() == 0)
        || (ring_.kind() == Ring::Kind::mod && target.kind() == Ring::Kind::gf2 && ring_.modulus() % 2 == 0)
        || (ring_.kind() == Ring::Kind::gf2 && target.kind() == Ring::Kind::mod && target.modulus() == 2);
    if (!ok)
        raise(Errc::ring_mismatch, "cannot reduce a series over " + ring_.name() + " into " + target.name());
    Series r(target, denom_, lo_, prec_);
    for (std::int64_t n : support())
        r.set_coefficient(n, coefficient(n));
    return r;
}

Series Series::rescale(std::int64_t new_denom) const
{
    if (new_denom < 1 || new_denom % denom_ != 0)
        raise(Errc::invalid_argument, "rescale: " + std::to_string(new_denom) + " is not a multiple of " + std::to_string(denom_));
    if (new_denom == denom_)
        return *this;
    const std::int64_t f = new_denom / denom_;
    Series r(ring_, new_denom, lo_ * f, prec_ * f);
    for (std::int64_t n : support())
        copy_coeff(r, static_cast<std::size_t>((n - lo_) * f), *this, static_cast<std::size_t>(n - lo_));
    return r;
}

Series Series::normalized() const
{
    const auto nz = support();
    if (nz.empty())
        return *this;
    std::int64_t g = denom_;
    for (std::int64_t n : nz)
        g = gcd64(g, n);
    if (g == 1)
        return *this;
    Series r(ring_, denom_ / g, ceil_div(lo_, g), ceil_div(prec_, g));
    for (std::int64_t n : nz)
        copy_coeff(r, static_cast<std::size_t>(n / g - r.lo()), *this, static_cast<std::size_t>(n - lo_));
    return r;
}

Series Series::truncated(std::int64_t new_prec) const
{
    if (new_prec > prec_)
        raise(Errc::precision_exhausted, "truncated: cannot extend precision beyond " + std::to_string(prec_));
    require_window(lo_, new_prec, "truncated");
    Series r(ring_, denom_, lo_, new_prec);
    for (std::int64_t n = lo_; n < new_prec; ++n)
        copy_coeff(r, static_cast<std::size_t>(n - lo_), *this, static_cast<std::size_t>(n - lo_));
    return r;
}

std::string Series::to_text() const
{
    std::ostringstream os;
    bool first = true;
    for (std::int64_t n : support()) {
        BigInt c = coefficient(n);
        const bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (n == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1)
            os << c.get_str() << "*";
        os << exponent_text(n, denom_);
    }
    if (first)
        return "0";
    return os.str();
}

std::string Series::to_json() const
{
    nlohmann::json j;
    j["ring"] = ring_.name();
    j["denom"] = denom_;
    j["lo"] = lo_;
    j["prec"] = prec_;
    auto coeffs = nlohmann::json::array();
    for (std::int64_t n = lo_; n < prec_; ++n) {
        if (ring_.kind() == Ring::Kind::integer)
            coeffs.push_back(coefficient(n).get_str());
        else
            coeffs.push_back(coefficient(n).get_ui());
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump();
}

bool agree_on_overlap(const Series &a0, const Series &b0)
{
    require_same_ring(a0, b0, "agree_on_overlap");
    const auto [a, b] = unify(a0, b0);
    const std::int64_t lo = std::min(a.lo(), b.lo());
    const std::int64_t prec = std::min(a.prec(), b.prec());
    for (std::int64_t n = lo; n < prec; ++n) {
        const BigInt ca = n < a.lo() ? BigInt(0) : a.coefficient(n);
        const BigInt cb = n < b.lo() ? BigInt(0) : b.coefficient(n);
        if (ca != cb)
            return false;
    }
    return true;
}

Series add(const Series &a0, const Series &b0)
{
    require_same_ring(a0, b0, "add");
    const auto [a, b] = unify(a0, b0);
    const std::int64_t lo = std::min(a.lo(), b.lo());
    const std::int64_t prec = std::min(a.prec(), b.prec());
    require_window(lo, prec, "add");
    Series r(a.ring(), a.denom(), lo, prec);
    for (const Series *s : {&a, &b})
        for (std::int64_t n = s->lo(); n < prec; ++n)
            add_coeff(r, static_cast<std::size_t>(n - lo), *s, static_cast<std::size_t>(n - s->lo()));
    return r;
}

Series mul(const Series &a0, const Series &b0)
{
    require_same_ring(a0, b0, "mul");
    const auto [a, b] = unify(a0, b0);
    const std::int64_t lo = a.lo() + b.lo();
    const std::int64_t prec = std::min(a.prec() + b.lo(), b.prec() + a.lo());
    require_window(lo, prec, "mul");
    Series r(a.ring(), a.denom(), lo, prec);
    const auto len = static_cast<std::size_t>(prec - lo);
    // Iterate over the sparser operand.
    const bool swap = nonzero_count(a.storage()) > nonzero_count(b.storage());
    const Series &outer = swap ? b : a;
    const Series &inner = swap ? a : b;
    switch (a.ring().kind()) {
    case Ring::Kind::integer:
        r.storage() = mul_int(std::get<IntVec>(outer.storage()), std::get<IntVec>(inner.storage()), len);
        break;
    case Ring::Kind::gf2:
        r.storage() = mul_bits(std::get<BitVector>(outer.storage()), std::get<BitVector>(inner.storage()), len);
        break;
    case Ring::Kind::mod:
        r.storage() = mul_res(std::get<ResVec>(outer.storage()), std::get<ResVec>(inner.storage()), len, a.ring().modulus());
        break;
    }
    return r;
}

Series inv(const Series &a)
{
    const auto lead = a.first_nonzero();
    if (!lead)
        raise(Errc::non_unit, "inv: leading coefficient is not a unit (series is zero to the tracked precision)");
    const std::int64_t v = *lead;
    const std::int64_t rel = a.prec() - v;
    Series r(a.ring(), a.denom(), -v, -v + rel);
    const auto len = static_cast<std::size_t>(rel);
    const auto off = static_cast<std::size_t>(v - a.lo());

    switch (a.ring().kind()) {
    case Ring::Kind::integer: {
        const auto &src = std::get<IntVec>(a.storage());
        const BigInt &c = src[off];
        if (c != 1 && c != -1)
            raise(Errc::non_unit, "inv: leading coefficient " + c.get_str() + " is not a unit over INT");
        std::vector<std::pair<std::size_t, const BigInt *>> nz;
        for (std::size_t k = 1; k < len; ++k)
            if (src[off + k] != 0)
                nz.emplace_back(k, &src[off + k]);
        IntVec out(len);
        out[0] = c;
        BigInt s;
        for (std::size_t n = 1; n < len; ++n) {
            s = 0;
            for (const auto &[k, ak] : nz) {
                if (k > n)
                    break;
                if (out[n - k] != 0)
                    mpz_addmul(s.get_mpz_t(), ak->get_mpz_t(), out[n - k].get_mpz_t());
            }
            out[n] = c < 0 ? BigInt(s) : BigInt(-s);
        }
        r.storage() = std::move(out);
        break;
    }
    case Ring::Kind::mod: {
        const std::uint64_t m = a.ring().modulus();
        const auto &src = std::get<ResVec>(a.storage());
        const std::uint64_t cinv = mod_inverse(src[off], m);
        std::vector<std::pair<std::size_t, std::uint64_t>> nz;
        for (std::size_t k = 1; k < len; ++k)
            if (src[off + k] != 0)
                nz.emplace_back(k, src[off + k]);
        ResVec out(len, 0);
        out[0] = cinv;
        for (std::size_t n = 1; n < len; ++n) {
            std::uint64_t s = 0;
            for (const auto &[k, ak] : nz) {
                if (k > n)
                    break;
                s = addmod(s, mulmod(ak, out[n - k], m), m);
            }
            const std::uint64_t t = mulmod(cinv, s, m);
            out[n] = t == 0 ? 0 : m - t;
        }
        r.storage() = std::move(out);
        break;
    }
    case Ring::Kind::gf2: {
        const auto &src = std::get<BitVector>(a.storage());
        // unit part: a / q^v, bit k holds the coefficient of q^(v + k)
        BitVector unit(len);
        std::vector<std::size_t> nz;
        for (std::size_t k = 0; k < len; ++k)
            if (src.get(off + k)) {
                unit.set(k, true);
                nz.push_back(k);
            }
        const bool sparse = nz.size() * 64 < len;
        // acc tracks unit * (quotient so far); quotient bit n cancels acc bit n.
        BitVector acc(len);
        BitVector out(len);
        for (std::size_t n = 0; n < len; ++n) {
            const bool bit = acc.get(n) != (n == 0);
            if (!bit)
                continue;
            out.set(n, true);
            if (sparse) {
                for (std::size_t k : nz) {
                    if (n + k >= len)
                        break;
                    acc.flip(n + k);
                }
            } else {
                acc.xor_shifted(unit, n);
            }
        }
        r.storage() = std::move(out);
        break;
    }
    }
    return r;
}

Series pow(const Series &a, std::int64_t e)
{
    if (e == 0)
        return Series::one(a.ring(), a.denom(), a.prec() - a.lo());
    Series base = e < 0 ? inv(a) : a;
    auto n = static_cast<std::uint64_t>(e < 0 ? -e : e);
    const int top = 63 - std::countl_zero(n);
    Series r = base;
    for (int bit = top - 1; bit >= 0; --bit) {
        r = square(r);
        if ((n >> bit) & 1u)
            r = mul(r, base);
    }
    return r;
}

Series u_op(const Series &a, std::uint64_t ell)
{
    if (ell < 1)
        raise(Errc::invalid_argument, "u_op: ell must be positive");
    const auto l = static_cast<std::int64_t>(ell);
    if (gcd64(l, a.denom()) != 1)
        raise(Errc::invalid_argument, "u_op: gcd(" + std::to_string(ell) + ", " + std::to_string(a.denom()) + ") != 1");
    const std::int64_t lo = ceil_div(a.lo(), l);
    const std::int64_t prec = ceil_div(a.prec(), l);
    require_window(lo, prec, "u_op");
    Series r(a.ring(), a.denom(), lo, prec);
    for (std::int64_t k = lo; k < prec; ++k)
        copy_coeff(r, static_cast<std::size_t>(k - lo), a, static_cast<std::size_t>(k * l - a.lo()));
    return r;
}

Series v_op(const Series &a, std::uint64_t ell)
{
    if (ell < 1)
        raise(Errc::invalid_argument, "v_op: ell must be positive");
    const auto l = static_cast<std::int64_t>(ell);
    Series r(a.ring(), a.denom(), a.lo() * l, a.prec() * l);
    for (std::int64_t n : a.support())
        copy_coeff(r, static_cast<std::size_t>((n - a.lo()) * l), a, static_cast<std::size_t>(n - a.lo()));
    return r;
}

Series hecke_t0_mod2(const Series &a, std::uint64_t ell)
{
    if (a.ring().kind() != Ring::Kind::gf2)
        raise(Errc::ring_mismatch, "hecke_t0_mod2: series must be over GF2, got " + a.ring().name());
    if (ell < 5)
        raise(Errc::invalid_argument, "hecke_t0_mod2: ell must be >= 5");
    return add(u_op(a, ell), v_op(a, ell));
}

std::optional<Rational> ord_q(const Series &a)
{
    const auto n = a.first_nonzero();
    if (!n)
        return std::nullopt;
    return make_rational(*n, a.denom());
}

bool support_in_multiples(const Series &a, std::int64_t c, std::uint64_t p)
{
    if (c < 2)
        raise(Errc::invalid_argument, "support_in_multiples: c must be >= 2");
    if (p < 2)
        raise(Errc::invalid_argument, "support_in_multiples: p must be >= 2");
    switch (a.ring().kind()) {
    case Ring::Kind::integer:
        break;
    case Ring::Kind::gf2:
        if (p != 2)
            raise(Errc::ring_mismatch, "support_in_multiples: a GF2 series can only be tested mod 2");
        break;
    case Ring::Kind::mod:
        if (a.ring().modulus() % p != 0)
            raise(Errc::ring_mismatch, "support_in_multiples: " + std::to_string(p) + " does not divide " + a.ring().name());
        break;
    }
    for (std::int64_t n : a.support()) {
        const BigInt cf = a.coefficient(n);
        if (mpz_fdiv_ui(cf.get_mpz_t(), p) != 0 && n % c != 0)
            return false;
    }
    return true;
}

} // namespace ppar
