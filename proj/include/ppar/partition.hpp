#ifndef PPAR_PARTITION_HPP
#define PPAR_PARTITION_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ppar/arith.hpp"
#include "ppar/bitvector.hpp"

namespace ppar {

// p(n) mod m for 0 <= n < length.  Bit-packed when m = 2.
class ResidueStream {
public:
    ResidueStream(std::uint64_t modulus, std::uint64_t length);

    [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
    [[nodiscard]] std::uint64_t length() const noexcept { return length_; }
    [[nodiscard]] bool packed() const noexcept { return modulus_ == 2; }

    [[nodiscard]] std::uint64_t value(std::uint64_t n) const;
    // p(n) mod 2; needs an even modulus.
    [[nodiscard]] bool odd(std::uint64_t n) const;

    [[nodiscard]] const BitVector &bits() const noexcept { return bits_; }
    [[nodiscard]] BitVector &bits() noexcept { return bits_; }
    [[nodiscard]] std::span<const std::uint64_t> residues() const noexcept { return residues_; }
    [[nodiscard]] std::span<std::uint64_t> residues() noexcept { return residues_; }

    [[nodiscard]] bool is_prefix_of(const ResidueStream &other) const;

    friend bool operator==(const ResidueStream &, const ResidueStream &) = default;

private:
    std::uint64_t modulus_;
    std::uint64_t length_;
    BitVector bits_;
    std::vector<std::uint64_t> residues_;
};

inline constexpr std::uint64_t max_stream_length = std::uint64_t{1} << 33;
inline constexpr std::uint64_t max_residue_stream_length = std::uint64_t{1} << 28;
inline constexpr std::uint64_t default_exact_limit = 100000;

// Euler's pentagonal recurrence reduced mod m.
ResidueStream residue_stream(std::uint64_t length, std::uint64_t modulus);

// Exact p(n) and the table p(0..n), over big integers.
BigInt partition_exact(std::uint64_t n, std::uint64_t limit = default_exact_limit);
std::vector<BigInt> partition_table(std::uint64_t n, std::uint64_t limit = default_exact_limit);

// Number of even p(k) for k < n.
std::uint64_t count_even(std::uint64_t n, const ResidueStream &stream);

enum class Rounding { truncate, nearest };

// count_even(n) / n to `digits` decimals followed by an ellipsis, e.g. "0.5004…".
// nearest rounds half up.
std::string proportion_even(std::uint64_t n, const ResidueStream &stream, int digits = 4,
                            Rounding mode = Rounding::truncate);

// Cache file: "PPAR", version byte, modulus and length as little-endian u64,
// then the payload (bits for m = 2, one byte per value otherwise).
void save_cache(const ResidueStream &stream, const std::filesystem::path &path);
ResidueStream load_cache(const std::filesystem::path &path);

} // namespace ppar

#endif
