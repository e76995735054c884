#pragma once

// Exception taxonomy shared by all modules.  The command-line frontend maps
// these onto distinct process exit codes (see cli.cpp).

#include <stdexcept>
#include <string>

namespace twobridge {

// Malformed textual input (Conway notation, PD files, matrix files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Conway text with an entry equal to zero.
struct ZeroEntryError : ParseError {
    explicit ZeroEntryError(const std::string& msg) : ParseError(msg) {}
};

// Conway text mixing positive and negative entries.
struct MixedSignError : ParseError {
    explicit MixedSignError(const std::string& msg) : ParseError(msg) {}
};

// Empty Conway text where a notation is required.
struct EmptyInputError : ParseError {
    explicit EmptyInputError(const std::string& msg) : ParseError(msg) {}
};

// A diagram turned out to have more than one component where a knot is
// required (orientation trace, report assembly on even determinants).
struct LinkError : std::runtime_error {
    explicit LinkError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independently computed values that are mathematically guaranteed
// to be equal disagreed.
// This always signals an implementation bug, never bad user input.
struct IdentityError : std::logic_error {
    explicit IdentityError(const std::string& msg) : std::logic_error(msg) {}
};

// A quantity violated a structural convention (e.g. an odd signature for a
// knot), indicating that one of the local crossing rules is implemented
// inconsistently.  Treated like an identity violation by the frontend.
struct ConventionError : IdentityError {
    explicit ConventionError(const std::string& msg) : IdentityError(msg) {}
};

}  // namespace twobridge
