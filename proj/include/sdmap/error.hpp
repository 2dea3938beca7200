#ifndef SDMAP_ERROR_HPP
#define SDMAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sdmap {

enum class Errc {
    NotInvolution,
    Disconnected,
    NotSphere,
    InvalidMorphism,
    NotAutomorphism,
    NotACycle,
    NotSimple,
    BadParameter,
    InvalidCorner,
    UnknownFixture,
    FixtureSelfCheckFailed,
    ParseError,
    ValidationError,
    UnknownVertex,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

} // namespace sdmap

#endif
