#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// Malformed files, unparsable options, bad indices. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated mathematical preconditions or failed internal checks. Exit code 1 at the CLI.
class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public MathError {
public:
    using MathError::MathError;
};

class CompositionNonzeroError : public MathError {
public:
    using MathError::MathError;
};

class BadPrimeError : public MathError {
public:
    using MathError::MathError;
};

// Exact and modular ranks disagree after retries. This can only come from an
// elimination bug, so it aborts the computation rather than degrade the report.
class ModularMismatchError : public MathError {
public:
    using MathError::MathError;
};

// Refusal to build an over-cap chain degree; an input-scale problem, overridable
// with the force flag.
class SizeLimitError : public InputError {
public:
    using InputError::InputError;
};

class NotUnitalError : public MathError {
public:
    using MathError::MathError;
};

class NotIdempotentError : public MathError {
public:
    using MathError::MathError;
};

class NotATraceError : public MathError {
public:
    using MathError::MathError;
};

class DecompositionMismatchError : public MathError {
public:
    using MathError::MathError;
};

class NonCanonicalError : public MathError {
public:
    using MathError::MathError;
};

class NotComparableError : public MathError {
public:
    using MathError::MathError;
};

// The class pair is comparable but no decidable separating sequence exists
// within the symbolic family.
class NoWitnessError : public MathError {
public:
    using MathError::MathError;
};

} // namespace cyclo
