#include "ppar/bitvector.hpp"

#include <algorithm>
#include <bit>

namespace ppar {

std::uint64_t BitVector::window(std::int64_t pos) const noexcept
{
    const auto n = static_cast<std::int64_t>(size_);
    if (pos >= n || pos <= -64)
        return 0;
    auto word_at = [&](std::int64_t w) -> std::uint64_t {
        return (w < 0 || w >= static_cast<std::int64_t>(words_.size())) ? 0 : words_[static_cast<std::size_t>(w)];
    };
    // Floor division keeps negative positions aligned.
    const std::int64_t w = pos >= 0 ? pos / 64 : -((-pos + 63) / 64);
    const auto off = static_cast<unsigned>(pos - w * 64);
    if (off == 0)
        return word_at(w);
    return (word_at(w) >> off) | (word_at(w + 1) << (64 - off));
}

void BitVector::xor_shifted(const BitVector &src, std::size_t shift)
{
    if (shift >= size_ || src.size_ == 0)
        return;
    const std::size_t limit = std::min(size_, src.size_ + shift);
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    const std::size_t last_word = (limit - 1) / 64;
    for (std::size_t dw = word_shift; dw <= last_word; ++dw) {
        const std::size_t sw = dw - word_shift;
        std::uint64_t v = sw < src.words_.size() ? src.words_[sw] << bit_shift : 0;
        if (bit_shift != 0 && sw >= 1 && sw - 1 < src.words_.size())
            v |= src.words_[sw - 1] >> (64 - bit_shift);
        words_[dw] ^= v;
    }
    // Clear anything written past the logical end.
    if (size_ % 64 != 0)
        words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

void BitVector::resize(std::size_t nbits)
{
    words_.resize((nbits + 63) / 64, 0);
    size_ = nbits;
    if (size_ % 64 != 0)
        words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

std::size_t BitVector::popcount() const noexcept
{
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVector::popcount_prefix(std::size_t n) const noexcept
{
    n = std::min(n, size_);
    std::size_t c = 0;
    const std::size_t full = n / 64;
    for (std::size_t i = 0; i < full; ++i)
        c += static_cast<std::size_t>(std::popcount(words_[i]));
    if (n % 64 != 0)
        c += static_cast<std::size_t>(std::popcount(words_[full] & ((std::uint64_t{1} << (n % 64)) - 1)));
    return c;
}

bool BitVector::none() const noexcept
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::find_first() const noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0)
            return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return size_;
}

} // namespace ppar
