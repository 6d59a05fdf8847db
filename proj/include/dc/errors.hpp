#pragma once

#include <stdexcept>
#include <string>

namespace dc {

// Requested operation needs more q-expansion coefficients than are available.
struct PrecisionTooLow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The echelon basis construction could not reach a unit-pivot integral basis.
struct BasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series claimed to be a modular form does not lie in the given space.
struct NotInSpace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bracket congruence system has no solution: the input has no virtual
// weight-n representative at this precision.
struct NoVirtualWeight : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// p times the given class is nonzero, so no p-adapted representative exists.
struct NotPTorsion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression syntax error; pos is a 0-based offset into the input text.
struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)),
          pos(position) {}
};

// Expression is well formed but cannot be evaluated (type or level mismatch).
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace dc
