#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gkflow {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input/structure problems (CLI exit code 2).
class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownElementError : public Error {
public:
    using Error::Error;
};

class CycleError : public Error {
public:
    using Error::Error;
};

// One offending pair of a compatibility-relation axiom. axiom is 1, 2 or 3.
struct AxiomViolation {
    int axiom;
    std::string x;
    std::string y;
};

// Carries every violated axiom pair found during validation, not just the first.
class ValidationError : public Error {
public:
    ValidationError(std::string message, std::vector<AxiomViolation> violations)
        : Error(std::move(message)), violations_(std::move(violations)) {}

    const std::vector<AxiomViolation>& violations() const { return violations_; }

    bool violates_axiom(int axiom) const {
        for (const auto& v : violations_)
            if (v.axiom == axiom) return true;
        return false;
    }

private:
    std::vector<AxiomViolation> violations_;
};

class NotAdjacentableError : public Error {
public:
    using Error::Error;
};

class NotHOrderedError : public Error {
public:
    using Error::Error;
};

class OverlapError : public Error {
public:
    using Error::Error;
};

class NotLinearExtensionError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

// A maintained runtime invariant failed; indicates a bug, never valid input
// (CLI exit code 4).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ConjugacyViolation : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

class DecompositionError : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

} // namespace gkflow
