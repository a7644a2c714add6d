#ifndef PPAR_ERROR_HPP
#define PPAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ppar {

enum class Errc {
    invalid_argument = 1,
    ring_mismatch,
    precision_exhausted,
    non_unit,
    resource_limit,
    stream_too_short,
    cache_format,
    io,
};

// Every failure raised by the library carries one of the codes above so the
// C layer can translate it without string matching.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string &what)
{
    throw Error(code, what);
}

} // namespace ppar

#endif
