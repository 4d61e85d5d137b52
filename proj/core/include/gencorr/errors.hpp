#ifndef GENCORR_ERRORS_HPP
#define GENCORR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gencorr {

/// Base class for every error thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument lies outside the mathematical domain of an operation.
class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

/// Input data are degenerate (constant column, too few points, ...).
class degenerate_error : public error {
public:
    explicit degenerate_error(const std::string& msg) : error(msg) {}
};

/// An iterative evaluation failed to converge within its budget.
class convergence_error : public error {
public:
    explicit convergence_error(const std::string& msg) : error(msg) {}
};

/// Malformed input file.
class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

} // namespace gencorr

#endif
