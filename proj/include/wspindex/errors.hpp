#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wspindex {

// Every library error carries a stable machine-readable code; the CLI maps
// codes to exit status and JSON error reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class ArithmeticOverflow : public Error {
public:
    explicit ArithmeticOverflow(const std::string& message)
        : Error("arithmetic_overflow", message) {}
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error("syntax_error", message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class NoSolutionError : public Error {
public:
    explicit NoSolutionError(const std::string& message) : Error("no_solution", message) {}
};

class WeightsNotUniqueError : public Error {
public:
    explicit WeightsNotUniqueError(const std::string& message)
        : Error("weights_not_unique", message) {}
};

class NonPositiveWeightError : public Error {
public:
    explicit NonPositiveWeightError(const std::string& message)
        : Error("non_positive_weight", message) {}
};

class InfiniteGroupError : public Error {
public:
    explicit InfiniteGroupError(const std::string& message)
        : Error("infinite_group", message) {}
};

class OrderCapExceededError : public Error {
public:
    OrderCapExceededError(long long order, const std::string& message)
        : Error("order_cap_exceeded", message), order_(order) {}

    long long order() const noexcept { return order_; }

private:
    long long order_;
};

class IndexOutOfRangeError : public Error {
public:
    explicit IndexOutOfRangeError(const std::string& message)
        : Error("index_out_of_range", message) {}
};

class OnWallError : public Error {
public:
    explicit OnWallError(const std::string& message) : Error("on_wall", message) {}
};

class ShapeMismatchError : public Error {
public:
    explicit ShapeMismatchError(const std::string& message)
        : Error("shape_mismatch", message) {}
};

class MismatchedBoundaryError : public Error {
public:
    explicit MismatchedBoundaryError(const std::string& message)
        : Error("mismatched_boundary", message) {}
};

class UnsupportedPairError : public Error {
public:
    explicit UnsupportedPairError(const std::string& message)
        : Error("unsupported_pair", message) {}
};

class IllConditionedError : public Error {
public:
    IllConditionedError(double gap_ratio, const std::string& message)
        : Error("ill_conditioned", message), gap_ratio_(gap_ratio) {}

    double gap_ratio() const noexcept { return gap_ratio_; }

private:
    double gap_ratio_;
};

// Raised when two algebraically equivalent evaluation routes disagree.
// Must never fire; the CLI maps it to exit code 2.
class InternalInconsistencyError : public Error {
public:
    explicit InternalInconsistencyError(const std::string& message)
        : Error("internal_inconsistency", message) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message)
        : Error("invalid_argument", message) {}
};

} // namespace wspindex
