#pragma once

#include <stdexcept>
#include <string>

namespace dra {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct ZeroDivisionError : Error {
    ZeroDivisionError() : Error("division by zero scalar") {}
};

// Numerator does not factor as rational * prod (H-n) over integers n.
struct NotAUnitError : Error {
    explicit NotAUnitError(const std::string &what) : Error("not a unit: " + what) {}
};

struct PoleAtPointError : Error {
    explicit PoleAtPointError(const std::string &at) : Error("evaluation at pole H = " + at) {}
};

struct MixedParityError : Error {
    MixedParityError() : Error("element is not parity-homogeneous") {}
};

struct NotInCentralizerError : Error {
    NotInCentralizerError() : Error("element has a term of nonzero weight") {}
};

struct WeightMismatchError : Error {
    WeightMismatchError() : Error("vectors live over different highest weights") {}
};

struct NotFiniteDimensionalError : Error {
    NotFiniteDimensionalError()
        : Error("no odd positive integer n with lambda^2 = (mu+n)^2") {}
};

struct IntegerMuError : Error {
    IntegerMuError() : Error("mu must not be an integer") {}
};

struct InexactDivisionError : Error {
    explicit InexactDivisionError(const std::string &what)
        : Error("inexact division: " + what) {}
};

struct ShapeMismatchError : Error {
    explicit ShapeMismatchError(const std::string &what)
        : Error("residue shape mismatch: " + what) {}
};

struct BoundExceededError : Error {
    explicit BoundExceededError(int bound)
        : Error("no radical zero found within scan bound " + std::to_string(bound)) {}
};

struct TruncationOverflowError : Error {
    TruncationOverflowError() : Error("lowering left the truncation window") {}
};

struct PoleOnWeightError : Error {
    PoleOnWeightError() : Error("weight component has H-eigenvalue at a pole") {}
};

struct WindowTooSmallError : Error {
    explicit WindowTooSmallError(const std::string &what)
        : Error("truncation window too small: " + what) {}
};

// Rewriting fuel exhausted; diagnostic, not a mathematical failure.
struct FuelExhaustedError : Error {
    FuelExhaustedError() : Error("rewriting fuel exhausted (raise DRA_FUEL)") {}
};

struct SyntaxError : Error {
    SyntaxError(const std::string &msg, std::size_t pos)
        : Error("syntax error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

struct UnknownSymbolError : Error {
    explicit UnknownSymbolError(const std::string &name)
        : Error("unknown symbol '" + name + "'") {}
};

} // namespace dra
