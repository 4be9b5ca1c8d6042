#pragma once

#include <stdexcept>
#include <string>

namespace reserve {

enum class Errc {
    CapacityMismatch,
    DuplicatePatient,
    DuplicateCategory,
    MalformedPriority,
    UnknownPatient,
    UnknownCategory,
    AxiomViolation,
    InstanceTooLarge,
    NotAdjacent,
    InvalidProfile,
    InvalidBaseline,
    PreconditionViolated,
    ParseError,
};

const char* errc_name(Errc code);

/// All engine errors carry one of the codes above plus a human-readable detail.
class ReserveError : public std::runtime_error {
public:
    ReserveError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw ReserveError(code, what);
}

} // namespace reserve
