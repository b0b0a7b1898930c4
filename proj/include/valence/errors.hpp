#pragma once

#include <stdexcept>
#include <string>

namespace valence {

/// Base class for all structural errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values over different alphabets were combined.
struct AlphabetMismatch final : Error {
    using Error::Error;
};

/// A token string or word did not parse over the declared alphabet.
struct ParseError final : Error {
    using Error::Error;
};

/// An operation's stated precondition was violated.
struct PreconditionError final : Error {
    using Error::Error;
};

/// Integer register arithmetic overflowed.
struct OverflowError final : Error {
    using Error::Error;
};

/// An interchange document is malformed; `key` names the offending field.
struct DocumentError final : Error {
    std::string key;
    DocumentError(std::string offending_key, const std::string& message)
        : Error(message), key(std::move(offending_key)) {}
};

}  // namespace valence
