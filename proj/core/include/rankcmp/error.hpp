#pragma once

#include <stdexcept>
#include <string>

namespace rankcmp {

enum class ErrorKind {
    parse,         // malformed input file
    validation,    // input violates a declared invariant
    domain,        // operation preconditions not met (bad math domain)
    insufficient,  // too little data (n below a required minimum)
    conflict,      // linkage conflict
    io,            // filesystem failure
    usage,         // bad CLI/config usage
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::parse: return "parse";
        case ErrorKind::validation: return "validation";
        case ErrorKind::domain: return "domain";
        case ErrorKind::insufficient: return "insufficient";
        case ErrorKind::conflict: return "conflict";
        case ErrorKind::io: return "io";
        case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

}  // namespace rankcmp
