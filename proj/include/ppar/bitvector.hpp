#ifndef PPAR_BITVECTOR_HPP
#define PPAR_BITVECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ppar {

// Packed bit array, 64 bits per word, bit i at word i/64 position i%64.
// Bits at or beyond size() are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t nbits) : words_((nbits + 63) / 64, 0), size_(nbits) {}

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

    [[nodiscard]] bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) noexcept
    {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::span<std::uint64_t> words() noexcept { return words_; }

    // 64 bits starting at signed position pos; positions outside [0, size) read as zero.
    [[nodiscard]] std::uint64_t window(std::int64_t pos) const noexcept;

    // this[i + shift] ^= src[i] for every i with i + shift < size().
    void xor_shifted(const BitVector &src, std::size_t shift);

    void resize(std::size_t nbits);

    [[nodiscard]] std::size_t popcount() const noexcept;
    [[nodiscard]] std::size_t popcount_prefix(std::size_t n) const noexcept;
    [[nodiscard]] bool none() const noexcept;
    // Index of the lowest set bit, or size() when none is set.
    [[nodiscard]] std::size_t find_first() const noexcept;

    friend bool operator==(const BitVector &, const BitVector &) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

} // namespace ppar

#endif
