#pragma once

#include <stdexcept>
#include <string>

namespace asrep {

// Malformed textual input (symbol strings, table text).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Embedded data failed its self-check (digest mismatch, impossible table shape).
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace asrep
