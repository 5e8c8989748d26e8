#ifndef MESHCA_ERROR_HPP
#define MESHCA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace meshca {

/// Classifies every failure the library can raise. The CLI maps kinds to
/// exit codes: configuration problems exit 2, algorithm precondition and
/// budget failures exit 3.
enum class ErrorKind {
    invalid_argument,       // parameter violates a documented precondition
    schema,                 // malformed or mistyped JSON document
    duplicate_id,           // node ids not unique
    disconnected,           // graph (or candidate layout) is not connected
    edge_mismatch,          // document edge list disagrees with derived edges
    incomplete_assignment,  // channel assignment does not cover every radio
    precondition,           // algorithm called on a state it rejects
    budget_exceeded,        // exhaustive search larger than the given budget
    no_convergence,         // iterative repair failed to reach a fixpoint
    io,                     // file could not be read or written
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument: return "invalid argument";
        case ErrorKind::schema: return "schema violation";
        case ErrorKind::duplicate_id: return "duplicate node id";
        case ErrorKind::disconnected: return "disconnected graph";
        case ErrorKind::edge_mismatch: return "derived edge mismatch";
        case ErrorKind::incomplete_assignment: return "incomplete assignment";
        case ErrorKind::precondition: return "precondition failure";
        case ErrorKind::budget_exceeded: return "budget exceeded";
        case ErrorKind::no_convergence: return "no convergence";
        case ErrorKind::io: return "io failure";
    }
    return "unknown error";
}

}  // namespace meshca

#endif
