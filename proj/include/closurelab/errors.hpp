#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "closurelab/rational.hpp"

namespace closurelab {

/// Caller broke a precondition: dimension mismatch, negative covering data,
/// malformed input. The CLI maps this to exit code 2.
class ContractViolation : public std::invalid_argument
{
  public:
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// Input text could not be parsed. Carries a 1-based line and column.
class ParseError : public ContractViolation
{
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : ContractViolation(std::to_string(line) + ":" + std::to_string(column) + ": " + what)
        , line_(line)
        , column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

/// A mathematical hypothesis required by an operation does not hold
/// (non-pointed cone, closure not full-dimensional, empty closure).
class HypothesisViolation : public std::runtime_error
{
  public:
    explicit HypothesisViolation(const std::string& what) : std::runtime_error(what) {}
};

/// The cone contains the line spanned by `line()`.
class NotPointedError : public HypothesisViolation
{
  public:
    NotPointedError(const std::string& what, QVector line)
        : HypothesisViolation(what), line_(std::move(line))
    {
    }

    const QVector& line() const { return line_; }

  private:
    QVector line_;
};

/// An inequality expected to be valid is violated by `witness()`.
class InvalidInequalityError : public HypothesisViolation
{
  public:
    InvalidInequalityError(const std::string& what, QVector witness)
        : HypothesisViolation(what), witness_(std::move(witness))
    {
    }

    const QVector& witness() const { return witness_; }

  private:
    QVector witness_;
};

/// The inequality system has no solution; `certificate()` is a Farkas
/// vector y >= 0 with y^T A = 0 and y^T b < 0.
class InconsistentSystemError : public HypothesisViolation
{
  public:
    InconsistentSystemError(const std::string& what, QVector certificate)
        : HypothesisViolation(what), certificate_(std::move(certificate))
    {
    }

    const QVector& certificate() const { return certificate_; }

  private:
    QVector certificate_;
};

/// A self-check on an exact certificate failed. Indicates a bug.
class InternalError : public std::logic_error
{
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace closurelab
