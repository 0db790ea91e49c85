#pragma once

#include <stdexcept>
#include <string>

namespace cbel {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input could not be read or does not denote a document at all:
/// file IO failures, JSON syntax, schema shape, unknown labels.
/// The CLI maps this family to exit code 1.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input is well-formed but violates a semantic condition
/// (mass conditions, table invariants, impossible parameters).
/// The CLI maps this family to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A hard resource limit was exceeded. The CLI maps this to exit code 3.
class LimitError : public Error {
public:
    using Error::Error;
};

class UnknownLabel : public ParseError {
public:
    explicit UnknownLabel(const std::string& label)
        : ParseError("UnknownLabel: \"" + label + "\" is not in the frame"), label_(label) {}
    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

class IoError : public ParseError {
public:
    using ParseError::ParseError;
};

class InvalidFrame : public ParseError {
public:
    using ParseError::ParseError;
};

class FrameTooLarge : public LimitError {
public:
    FrameTooLarge(int size, int limit)
        : LimitError("FrameTooLarge: frame of " + std::to_string(size) +
                     " events exceeds the limit of " + std::to_string(limit)),
          size_(size), limit_(limit) {}
    int size() const noexcept { return size_; }
    int limit() const noexcept { return limit_; }

private:
    int size_;
    int limit_;
};

class NonFiniteValue : public ValidationError {
public:
    NonFiniteValue() : ValidationError("NonFiniteValue: components must be finite") {}
};

class ZeroArgument : public ValidationError {
public:
    ZeroArgument() : ValidationError("ZeroArgument: the phase of 0 is undefined") {}
};

class NegativeModulus : public ValidationError {
public:
    explicit NegativeModulus(double r)
        : ValidationError("NegativeModulus: modulus " + std::to_string(r) + " is negative"), r_(r) {}
    double modulus() const noexcept { return r_; }

private:
    double r_;
};

class EmptySetAssigned : public ValidationError {
public:
    EmptySetAssigned() : ValidationError("EmptySetAssigned: the empty set must carry zero mass") {}
};

class MagnitudeOutOfRange : public ValidationError {
public:
    MagnitudeOutOfRange(const std::string& set, double magnitude)
        : ValidationError("MagnitudeOutOfRange: " + set + " has magnitude " +
                          std::to_string(magnitude) + " outside [0, 1]"),
          set_(set), magnitude_(magnitude) {}
    const std::string& set() const noexcept { return set_; }
    double magnitude() const noexcept { return magnitude_; }

private:
    std::string set_;
    double magnitude_;
};

class SumNotUnity : public ValidationError {
public:
    SumNotUnity(double sum_re, double sum_im)
        : ValidationError("SumNotUnity: masses sum to " + std::to_string(sum_re) + (sum_im < 0 ? "" : "+") +
                          std::to_string(sum_im) + "i instead of 1"),
          sum_re_(sum_re), sum_im_(sum_im) {}
    double sum_re() const noexcept { return sum_re_; }
    double sum_im() const noexcept { return sum_im_; }

private:
    double sum_re_;
    double sum_im_;
};

class DuplicateEntry : public ValidationError {
public:
    explicit DuplicateEntry(const std::string& set)
        : ValidationError("DuplicateEntry: " + set + " is assigned more than once"), set_(set) {}
    const std::string& set() const noexcept { return set_; }

private:
    std::string set_;
};

class ZeroMassPhase : public ValidationError {
public:
    explicit ZeroMassPhase(const std::string& set)
        : ValidationError("ZeroMassPhase: " + set + " has zero mass, its phase is undefined") {}
};

class EmptyProposition : public ValidationError {
public:
    EmptyProposition() : ValidationError("EmptyProposition: the empty set is not allowed here") {}
};

class NotClassical : public ValidationError {
public:
    NotClassical()
        : ValidationError("NotClassical: masses have nonzero imaginary parts or negative real parts") {}
};

class Unsatisfiable : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidTable : public ValidationError {
public:
    using ValidationError::ValidationError;
};

} // namespace cbel
