#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace closurelab {

/// Exact rational number. Results of gmpxx arithmetic are always in lowest
/// terms with a positive denominator; values built from a numerator and a
/// denominator must go through `rat()` to get the same guarantee.
using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long numerator, long denominator = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". No decimal points, no exponents.
/// Throws ContractViolation on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

Integer ceil_div(const Rational& q);

/// Dense vector of rationals. The size is fixed at construction and every
/// element access is bounds-checked.
class QVector
{
  public:
    QVector() = default;
    explicit QVector(std::size_t size) : values_(size) {}
    QVector(std::initializer_list<Rational> values) : values_(values) {}
    explicit QVector(std::vector<Rational> values) : values_(std::move(values)) {}

    static QVector unit(std::size_t size, std::size_t index);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    Rational& operator[](std::size_t i);
    const Rational& operator[](std::size_t i) const;

    std::span<const Rational> values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }
    auto begin() { return values_.begin(); }
    auto end() { return values_.end(); }

    bool is_zero() const;

    /// Copy with element `value` appended.
    QVector appended(const Rational& value) const;
    /// Copy of the first `count` entries.
    QVector head(std::size_t count) const;

    friend bool operator==(const QVector& a, const QVector& b) { return a.values_ == b.values_; }
    /// Lexicographic; shorter vectors order first on a common prefix.
    friend bool operator<(const QVector& a, const QVector& b);

  private:
    std::vector<Rational> values_;
};

Rational dot(const QVector& a, const QVector& b);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& a);
QVector operator*(const Rational& s, const QVector& v);

/// Positive rescaling of `v` to coprime integers. The zero vector maps to
/// itself.
QVector primitive(const QVector& v);

/// Positive factor s with primitive(v) = s * v; 1 for the zero vector.
Rational primitive_scale(const QVector& v);

/// True iff a = s*b for some s > 0.
bool positively_parallel(const QVector& a, const QVector& b);

std::string to_string(const QVector& v, std::string_view separator = " ");

/// Row-major dense rational matrix with bounds-checked access.
class QMatrix
{
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), values_(rows * cols) {}

    /// All rows must share one length; `cols` is only consulted when `rows`
    /// is empty.
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j);
    const Rational& at(std::size_t i, std::size_t j) const;

    QVector row(std::size_t i) const;
    QVector col(std::size_t j) const;
    QMatrix transposed() const;

    QVector operator*(const QVector& x) const;
    /// y^T A
    QVector left_multiply(const QVector& y) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> values_;
};

/// Rank by exact Gaussian elimination.
std::size_t rank(std::vector<QVector> rows);

/// Basis of {x : r.x = 0 for every row r}, each basis vector primitive.
std::vector<QVector> null_space(std::vector<QVector> rows, std::size_t cols);

/// Reduced row echelon basis of span(rows), each row primitive.
std::vector<QVector> row_basis(std::vector<QVector> rows);

} // namespace closurelab
