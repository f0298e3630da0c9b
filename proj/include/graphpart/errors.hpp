#pragma once

#include <stdexcept>
#include <string>

namespace graphpart {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidEdge : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct OracleSizeExceeded : Error { using Error::Error; };
struct BadCertificate : Error { using Error::Error; };
struct SpecMismatch : Error { using Error::Error; };
struct BoundTooLarge : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct UnclassifiedRemainder : Error { using Error::Error; };
struct CoverageError : Error { using Error::Error; };

struct ParseError : Error {
    int line = 0;
    explicit ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

} // namespace graphpart
