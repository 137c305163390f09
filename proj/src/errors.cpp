#include "hamdec/errors.hpp"

namespace hamdec {

const char* err_name(Err e) {
    switch (e) {
        case Err::InvalidSpec: return "InvalidSpec";
        case Err::HalfJump: return "HalfJump";
        case Err::Disconnected: return "Disconnected";
        case Err::DegenerateJump: return "DegenerateJump";
        case Err::AlphaTooSmall: return "AlphaTooSmall";
        case Err::BadShape: return "BadShape";
        case Err::DegenerateC: return "DegenerateC";
        case Err::OddHostOrder: return "OddHostOrder";
        case Err::Q1Missing: return "Q1Missing";
        case Err::ConstructionFailed: return "ConstructionFailed";
        case Err::SameParityJumps: return "SameParityJumps";
        case Err::UnbalancedJumps: return "UnbalancedJumps";
        case Err::NoValidPairing: return "NoValidPairing";
        case Err::HalfJumpPresent: return "HalfJumpPresent";
        case Err::PairingMismatch: return "PairingMismatch";
        case Err::OddN: return "OddN";
        case Err::CertificateInvalid: return "CertificateInvalid";
        case Err::PropertyQFailed: return "PropertyQFailed";
        case Err::OddOrderUnsupported: return "OddOrderUnsupported";
        case Err::HNotDecomposition: return "HNotDecomposition";
        case Err::TooLarge: return "TooLarge";
        case Err::ParityUndefined: return "ParityUndefined";
        case Err::VertexAbsent: return "VertexAbsent";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace hamdec
