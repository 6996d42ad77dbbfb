#pragma once

#include <stdexcept>
#include <string>

namespace latsieve {

enum class ErrorCode {
    ClosureTooLarge,
    LatticeTooLarge,
    NotAnAutomorphism,
    NotAHomomorphism,
    NotPrime,
    ForeignSubgroup,
    PatternTooLarge,
    UnknownPattern,
    NotCoprime,
    NotInvariant,
    ParseError,
    CacheCorrupt,
    IoError,
    UnknownId,
    Internal,
};

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

const char* error_code_name(ErrorCode c);

}  // namespace latsieve
