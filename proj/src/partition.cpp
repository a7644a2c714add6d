#include "ppar/partition.hpp"

#include <algorithm>

#include "ppar/error.hpp"

namespace ppar {

namespace {

// Generalized pentagonal numbers below n in increasing order, with the sign
// of their term in the recurrence (true for +).
struct Pentagonal {
    std::uint64_t offset;
    bool plus;
};

std::vector<Pentagonal> pentagonals_below(std::uint64_t n)
{
    std::vector<Pentagonal> out;
    for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t g1 = k * (3 * k - 1) / 2;
        if (g1 >= n)
            break;
        const bool plus = (k % 2) == 1;
        out.push_back({g1, plus});
        const std::uint64_t g2 = k * (3 * k + 1) / 2;
        if (g2 < n)
            out.push_back({g2, plus});
    }
    return out;
}

// Parities by 64-bit blocks: offsets >= 64 read whole words of earlier,
// already final bits; smaller offsets are resolved bit by bit.
void fill_parity(BitVector &bits, std::uint64_t length)
{
    const auto pent = pentagonals_below(length);
    const auto split = static_cast<std::size_t>(
        std::find_if(pent.begin(), pent.end(), [](const Pentagonal &p) { return p.offset >= 64; }) - pent.begin());
    auto words = bits.words();
    const std::uint64_t nwords = words.size();
    for (std::uint64_t w = 0; w < nwords; ++w) {
        const auto block = static_cast<std::int64_t>(w * 64);
        std::uint64_t acc = 0;
        for (std::size_t i = split; i < pent.size(); ++i) {
            const auto off = static_cast<std::int64_t>(pent[i].offset);
            if (off > block + 63)
                break;
            acc ^= bits.window(block - off);
        }
        const std::uint64_t prev = w > 0 ? words[w - 1] : 0;
        std::uint64_t cur = 0;
        for (unsigned b = 0; b < 64; ++b) {
            const std::uint64_t n = w * 64 + b;
            if (n >= length)
                break;
            std::uint64_t bit = (acc >> b) & 1u;
            if (n == 0)
                bit = 1;
            for (std::size_t i = 0; i < split; ++i) {
                const unsigned off = static_cast<unsigned>(pent[i].offset);
                if (off > n)
                    break;
                bit ^= off <= b ? (cur >> (b - off)) & 1u : (prev >> (64 + b - off)) & 1u;
            }
            cur |= bit << b;
        }
        words[w] = cur;
    }
}

void fill_residues(std::vector<std::uint64_t> &vals, std::uint64_t length, std::uint64_t m)
{
    const auto pent = pentagonals_below(length);
    vals[0] = 1 % m;
    for (std::uint64_t n = 1; n < length; ++n) {
        std::uint64_t plus = 0, minus = 0;
        for (const auto &p : pent) {
            if (p.offset > n)
                break;
            std::uint64_t &acc = p.plus ? plus : minus;
            const std::uint64_t v = vals[n - p.offset];
            acc = (acc >= m - v) ? acc - (m - v) : acc + v;
        }
        vals[n] = plus >= minus ? plus - minus : m - (minus - plus);
    }
}

} // namespace

ResidueStream::ResidueStream(std::uint64_t modulus, std::uint64_t length) : modulus_(modulus), length_(length)
{
    if (modulus < 2)
        raise(Errc::invalid_argument, "residue stream modulus must be >= 2");
    if (modulus == 2)
        bits_ = BitVector(length);
    else
        residues_.assign(length, 0);
}

std::uint64_t ResidueStream::value(std::uint64_t n) const
{
    if (n >= length_)
        raise(Errc::stream_too_short, "stream of length " + std::to_string(length_) + " has no value at n = " + std::to_string(n));
    return packed() ? static_cast<std::uint64_t>(bits_.get(n)) : residues_[n];
}

bool ResidueStream::odd(std::uint64_t n) const
{
    if (modulus_ % 2 != 0)
        raise(Errc::invalid_argument, "parity needs an even modulus, stream is mod " + std::to_string(modulus_));
    return (value(n) & 1u) != 0;
}

bool ResidueStream::is_prefix_of(const ResidueStream &other) const
{
    if (modulus_ != other.modulus_ || length_ > other.length_)
        return false;
    for (std::uint64_t n = 0; n < length_; ++n)
        if (value(n) != other.value(n))
            return false;
    return true;
}

ResidueStream residue_stream(std::uint64_t length, std::uint64_t modulus)
{
    if (length < 1)
        raise(Errc::invalid_argument, "residue_stream: length must be >= 1");
    if (modulus < 2)
        raise(Errc::invalid_argument, "residue_stream: modulus must be >= 2");
    const std::uint64_t limit = modulus == 2 ? max_stream_length : max_residue_stream_length;
    if (length > limit)
        raise(Errc::resource_limit, "residue_stream: N = " + std::to_string(length) + " exceeds the limit of "
                                        + std::to_string(limit) + " for modulus " + std::to_string(modulus));
    ResidueStream s(modulus, length);
    if (modulus == 2)
        fill_parity(s.bits(), length);
    else {
        std::vector<std::uint64_t> vals(length);
        fill_residues(vals, length, modulus);
        std::copy(vals.begin(), vals.end(), s.residues().begin());
    }
    return s;
}

std::vector<BigInt> partition_table(std::uint64_t n, std::uint64_t limit)
{
    if (n > limit)
        raise(Errc::resource_limit, "partition_exact: n = " + std::to_string(n) + " exceeds the limit " + std::to_string(limit));
    const auto pent = pentagonals_below(n + 1);
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (std::uint64_t k = 1; k <= n; ++k) {
        BigInt &acc = p[k];
        for (const auto &g : pent) {
            if (g.offset > k)
                break;
            if (g.plus)
                acc += p[k - g.offset];
            else
                acc -= p[k - g.offset];
        }
    }
    return p;
}

BigInt partition_exact(std::uint64_t n, std::uint64_t limit)
{
    return partition_table(n, limit).back();
}

std::uint64_t count_even(std::uint64_t n, const ResidueStream &stream)
{
    if (n > stream.length())
        raise(Errc::stream_too_short, "proportion needs " + std::to_string(n) + " values, stream has " + std::to_string(stream.length()));
    if (stream.modulus() % 2 != 0)
        raise(Errc::invalid_argument, "parity needs an even modulus, stream is mod " + std::to_string(stream.modulus()));
    if (stream.packed())
        return n - stream.bits().popcount_prefix(n);
    std::uint64_t even = 0;
    for (std::uint64_t k = 0; k < n; ++k)
        even += (stream.residues()[k] & 1u) == 0;
    return even;
}

std::string proportion_even(std::uint64_t n, const ResidueStream &stream, int digits, Rounding mode)
{
    if (n < 1)
        raise(Errc::invalid_argument, "proportion_even: N must be >= 1");
    if (digits < 1)
        raise(Errc::invalid_argument, "proportion_even: digits must be >= 1");
    const std::uint64_t even = count_even(n, stream);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt scaled = BigInt(static_cast<unsigned long>(even)) * scale;
    BigInt divisor = static_cast<unsigned long>(n);
    if (mode == Rounding::nearest) {
        // floor((2 even 10^d + n) / 2n)
        scaled = 2 * scaled + divisor;
        divisor *= 2;
    }
    BigInt whole;
    mpz_fdiv_q(whole.get_mpz_t(), scaled.get_mpz_t(), divisor.get_mpz_t());
    BigInt int_part, frac_part;
    mpz_fdiv_qr(int_part.get_mpz_t(), frac_part.get_mpz_t(), whole.get_mpz_t(), scale.get_mpz_t());
    std::string frac = frac_part.get_str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    return int_part.get_str() + "." + frac + "…";
}

} // namespace ppar
