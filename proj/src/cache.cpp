#include <array>
#include <fstream>
#include <iterator>

#include "ppar/error.hpp"
#include "ppar/partition.hpp"

namespace ppar {

namespace {

constexpr std::array<char, 4> magic = {'P', 'P', 'A', 'R'};
constexpr std::uint8_t version = 1;
constexpr std::size_t header_size = 21;

void put_u64(std::vector<std::uint8_t> &out, std::uint64_t v)
{
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(const std::vector<std::uint8_t> &in, std::size_t at)
{
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(in[at + static_cast<std::size_t>(i)]) << (8 * i);
    return v;
}

} // namespace

void save_cache(const ResidueStream &stream, const std::filesystem::path &path)
{
    const std::uint64_t m = stream.modulus();
    const std::uint64_t n = stream.length();
    if (m > 255)
        raise(Errc::invalid_argument, "cache: modulus " + std::to_string(m) + " does not fit the one-byte payload");
    std::vector<std::uint8_t> out(magic.begin(), magic.end());
    out.push_back(version);
    put_u64(out, m);
    put_u64(out, n);
    if (m == 2) {
        const auto words = stream.bits().words();
        for (std::uint64_t b = 0; b < (n + 7) / 8; ++b)
            out.push_back(static_cast<std::uint8_t>(words[b / 8] >> (8 * (b % 8))));
    } else {
        for (std::uint64_t v : stream.residues())
            out.push_back(static_cast<std::uint8_t>(v));
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        raise(Errc::io, "cache: cannot open '" + path.string() + "' for writing");
    f.write(reinterpret_cast<const char *>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f)
        raise(Errc::io, "cache: write to '" + path.string() + "' failed");
}

ResidueStream load_cache(const std::filesystem::path &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        raise(Errc::io, "cache: cannot open '" + path.string() + "'");
    const std::vector<std::uint8_t> in((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (in.size() < header_size)
        raise(Errc::cache_format, "cache: truncated header");
    if (!std::equal(magic.begin(), magic.end(), in.begin()))
        raise(Errc::cache_format, "cache: bad magic");
    if (in[4] != version)
        raise(Errc::cache_format, "cache: unsupported version " + std::to_string(in[4]));
    const std::uint64_t m = get_u64(in, 5);
    const std::uint64_t n = get_u64(in, 13);
    if (m < 2 || m > 255)
        raise(Errc::cache_format, "cache: bad modulus " + std::to_string(m));
    if (n > max_stream_length)
        raise(Errc::cache_format, "cache: bad length " + std::to_string(n));
    const std::uint64_t payload = m == 2 ? (n + 7) / 8 : n;
    if (in.size() - header_size < payload)
        raise(Errc::cache_format, "cache: truncated payload (need " + std::to_string(payload) + " bytes, have "
                                      + std::to_string(in.size() - header_size) + ")");
    ResidueStream s(m, n);
    if (m == 2) {
        auto words = s.bits().words();
        for (std::uint64_t b = 0; b < payload; ++b)
            words[b / 8] |= static_cast<std::uint64_t>(in[header_size + b]) << (8 * (b % 8));
        // Bits past N in the last byte are padding.
        s.bits().resize(n);
    } else {
        auto vals = s.residues();
        for (std::uint64_t k = 0; k < n; ++k) {
            const std::uint8_t v = in[header_size + k];
            if (v >= m)
                raise(Errc::cache_format, "cache: payload value " + std::to_string(v) + " at n = " + std::to_string(k)
                                              + " is not a residue mod " + std::to_string(m));
            vals[k] = v;
        }
    }
    return s;
}

} // namespace ppar
