#ifndef MULTDEC_ERRORS_HPP
#define MULTDEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multdec {

// Input that violates a documented precondition (bad arity, degree too
// large, mismatched moduli, malformed files).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The prime is too small to host a required hitting set or search grid.
class FieldTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameters that are well-formed but outside the regime where the decoder
// is guaranteed to work. Carries the computed bound so callers can adjust.
class InfeasibleParameters : public std::runtime_error {
public:
    InfeasibleParameters(const std::string& what, double bound)
        : std::runtime_error(what), bound_(bound) {}
    double bound() const noexcept { return bound_; }

private:
    double bound_;
};

// A state that the mathematics says cannot happen.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace multdec

#endif  // MULTDEC_ERRORS_HPP
