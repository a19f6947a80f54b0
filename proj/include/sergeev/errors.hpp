#ifndef SERGEEV_ERRORS_HPP
#define SERGEEV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sergeev {

// Arithmetic errors.
struct ZeroDivision : std::domain_error {
    explicit ZeroDivision(const std::string& what) : std::domain_error("ZeroDivision: " + what) {}
};

struct NegativeRadicand : std::domain_error {
    explicit NegativeRadicand(const std::string& what) : std::domain_error("NegativeRadicand: " + what) {}
};

// Structural errors on combinatorial input.
struct SizeMismatch : std::invalid_argument {
    explicit SizeMismatch(const std::string& what) : std::invalid_argument("SizeMismatch: " + what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range("IndexOutOfRange: " + what) {}
};

struct BarOnDiagonal : std::invalid_argument {
    explicit BarOnDiagonal(const std::string& what) : std::invalid_argument("BarOnDiagonal: " + what) {}
};

struct ShapeMismatch : std::invalid_argument {
    explicit ShapeMismatch(const std::string& what) : std::invalid_argument("ShapeMismatch: " + what) {}
};

struct NotStandard : std::invalid_argument {
    explicit NotStandard(const std::string& what) : std::invalid_argument("NotStandard: " + what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument("ParseError: " + what) {}
};

// Rational-function evaluation errors.
struct PoleAtEvaluation : std::domain_error {
    explicit PoleAtEvaluation(const std::string& what) : std::domain_error("PoleAtEvaluation: " + what) {}
};

struct NonRemovablePole : std::domain_error {
    explicit NonRemovablePole(const std::string& what) : std::domain_error("NonRemovablePole: " + what) {}
};

// A broken internal invariant; any throw of this is a bug.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error("InternalError: " + what) {}
};

} // namespace sergeev

#endif
