#pragma once

#include <stdexcept>
#include <string>

namespace niche {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// unknown vertex identifier passed to an operation
struct InvalidVertexError : Error {
    using Error::Error;
};

// input exceeds the hard bound of an exact algorithm
struct SizeLimitError : Error {
    using Error::Error;
};

// the given vertex set is not a component of the graph
struct NotAComponentError : Error {
    using Error::Error;
};

// operation requires a connected nonempty graph
struct DisconnectedError : Error {
    using Error::Error;
};

// malformed construction input (duplicate vertex, bad id, non-total orientation, ...)
struct ValidationError : Error {
    using Error::Error;
};

// certificate does not match the graph or has the wrong kind for this constructor
struct CertificateMismatchError : Error {
    using Error::Error;
};

// a constructed witness failed its internal verification; signals a bug
struct InternalRoundTripError : Error {
    using Error::Error;
};

// text input rejected; line is 0 when no specific line applies
struct ParseError : Error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

}  // namespace niche
