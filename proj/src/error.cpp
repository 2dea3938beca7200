#include "sdmap/error.hpp"

namespace sdmap {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::NotInvolution: return "NotInvolution";
        case Errc::Disconnected: return "Disconnected";
        case Errc::NotSphere: return "NotSphere";
        case Errc::InvalidMorphism: return "InvalidMorphism";
        case Errc::NotAutomorphism: return "NotAutomorphism";
        case Errc::NotACycle: return "NotACycle";
        case Errc::NotSimple: return "NotSimple";
        case Errc::BadParameter: return "BadParameter";
        case Errc::InvalidCorner: return "InvalidCorner";
        case Errc::UnknownFixture: return "UnknownFixture";
        case Errc::FixtureSelfCheckFailed: return "FixtureSelfCheckFailed";
        case Errc::ParseError: return "ParseError";
        case Errc::ValidationError: return "ValidationError";
        case Errc::UnknownVertex: return "UnknownVertex";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

} // namespace sdmap
