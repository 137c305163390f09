#ifndef HAMDEC_ERRORS_HPP
#define HAMDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hamdec {

enum class Err {
    InvalidSpec,
    HalfJump,
    Disconnected,
    DegenerateJump,
    AlphaTooSmall,
    BadShape,
    DegenerateC,
    OddHostOrder,
    Q1Missing,
    ConstructionFailed,
    SameParityJumps,
    UnbalancedJumps,
    NoValidPairing,
    HalfJumpPresent,
    PairingMismatch,
    OddN,
    CertificateInvalid,
    PropertyQFailed,
    OddOrderUnsupported,
    HNotDecomposition,
    TooLarge,
    ParityUndefined,
    VertexAbsent,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace hamdec

#endif
