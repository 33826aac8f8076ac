#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyloc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-square operand or mismatched coefficient sizes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Zero leading coefficient, or a degree too small for the operation.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// Parameter outside the domain an ensemble constructor accepts.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Leading coefficient numerically singular; study reverse(P) instead.
class SingularLeadingError : public Error {
public:
    using Error::Error;
};

/// The eigensolver ran out of iterations or could not meet its residual
/// contract. Carries whatever eigenvalue estimates were available.
class SolverFailure : public Error {
public:
    SolverFailure(const std::string& what, std::vector<std::complex<double>> partial)
        : Error(what), partial_(std::move(partial)) {}

    const std::vector<std::complex<double>>& partial_spectrum() const noexcept { return partial_; }

private:
    std::vector<std::complex<double>> partial_;
};

/// A theorem hypothesis was not met by the input (e.g. not in family D).
class FamilyError : public Error {
public:
    FamilyError(const std::string& predicate, const std::string& what)
        : Error(what), predicate_(predicate) {}

    const std::string& predicate() const noexcept { return predicate_; }

private:
    std::string predicate_;
};

/// A verified instance broke the bound it is supposed to obey.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

/// Malformed polynomial document. The message names the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace polyloc
