#include "closurelab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "closurelab/errors.hpp"

namespace closurelab {

Rational rat(long numerator, long denominator)
{
    if (denominator == 0) {
        throw ContractViolation("rational with zero denominator");
    }
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(std::string_view text)
{
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        });
    };
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw ContractViolation("malformed rational '" + std::string(text) + "'");
    }
    std::string num_text(num);
    if (num_text.front() == '+') {
        num_text.erase(0, 1);
    }
    Integer p(num_text, 10);
    Integer q(std::string(den), 10);
    if (q == 0) {
        throw ContractViolation("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Integer ceil_div(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

QVector QVector::unit(std::size_t size, std::size_t index)
{
    QVector v(size);
    v[index] = 1;
    return v;
}

Rational& QVector::operator[](std::size_t i)
{
    if (i >= values_.size()) {
        throw std::out_of_range("QVector index " + std::to_string(i) + " out of range " +
                                std::to_string(values_.size()));
    }
    return values_[i];
}

const Rational& QVector::operator[](std::size_t i) const
{
    if (i >= values_.size()) {
        throw std::out_of_range("QVector index " + std::to_string(i) + " out of range " +
                                std::to_string(values_.size()));
    }
    return values_[i];
}

bool QVector::is_zero() const
{
    return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

QVector QVector::appended(const Rational& value) const
{
    QVector out = *this;
    out.values_.push_back(value);
    return out;
}

QVector QVector::head(std::size_t count) const
{
    if (count > values_.size()) {
        throw std::out_of_range("QVector::head beyond size");
    }
    return QVector(std::vector<Rational>(values_.begin(), values_.begin() + count));
}

bool operator<(const QVector& a, const QVector& b)
{
    return std::lexicographical_compare(a.values_.begin(), a.values_.end(), b.values_.begin(),
                                        b.values_.end());
}

namespace {

void require_same_size(const QVector& a, const QVector& b, const char* op)
{
    if (a.size() != b.size()) {
        throw ContractViolation(std::string(op) + ": dimension mismatch " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
    }
}

} // namespace

Rational dot(const QVector& a, const QVector& b)
{
    require_same_size(a, b, "dot");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

QVector operator+(const QVector& a, const QVector& b)
{
    require_same_size(a, b, "vector sum");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

QVector operator-(const QVector& a, const QVector& b)
{
    require_same_size(a, b, "vector difference");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

QVector operator-(const QVector& a)
{
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = -a[i];
    }
    return out;
}

QVector operator*(const Rational& s, const QVector& v)
{
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = s * v[i];
    }
    return out;
}

Rational primitive_scale(const QVector& v)
{
    Integer lcm_den = 1;
    for (const auto& q : v) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    }
    Integer gcd_num = 0;
    for (const auto& q : v) {
        const Integer scaled = q.get_num() * (lcm_den / q.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    if (gcd_num == 0) {
        return 1;
    }
    Rational s(lcm_den, gcd_num);
    s.canonicalize();
    return s;
}

QVector primitive(const QVector& v)
{
    return primitive_scale(v) * v;
}

bool positively_parallel(const QVector& a, const QVector& b)
{
    if (a.size() != b.size() || a.is_zero() || b.is_zero()) {
        return false;
    }
    return primitive(a) == primitive(b);
}

std::string to_string(const QVector& v, std::string_view separator)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out << separator;
        }
        out << to_string(v[i]);
    }
    return out.str();
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols)
{
    if (!rows.empty()) {
        cols = rows.front().size();
    }
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw ContractViolation("QMatrix::from_rows: ragged rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m.values_[i * cols + j] = rows[i][j];
        }
    }
    return m;
}

Rational& QMatrix::at(std::size_t i, std::size_t j)
{
    if (i >= rows_ || j >= cols_) {
        throw std::out_of_range("QMatrix index out of range");
    }
    return values_[i * cols_ + j];
}

const Rational& QMatrix::at(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_) {
        throw std::out_of_range("QMatrix index out of range");
    }
    return values_[i * cols_ + j];
}

QVector QMatrix::row(std::size_t i) const
{
    if (i >= rows_) {
        throw std::out_of_range("QMatrix row out of range");
    }
    return QVector(std::vector<Rational>(values_.begin() + i * cols_, values_.begin() + (i + 1) * cols_));
}

QVector QMatrix::col(std::size_t j) const
{
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = at(i, j);
    }
    return out;
}

QMatrix QMatrix::transposed() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t.values_[j * rows_ + i] = values_[i * cols_ + j];
        }
    }
    return t;
}

QVector QMatrix::operator*(const QVector& x) const
{
    if (x.size() != cols_) {
        throw ContractViolation("matrix-vector product: dimension mismatch");
    }
    QVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            s += values_[i * cols_ + j] * x[j];
        }
        out[i] = s;
    }
    return out;
}

QVector QMatrix::left_multiply(const QVector& y) const
{
    if (y.size() != rows_) {
        throw ContractViolation("vector-matrix product: dimension mismatch");
    }
    QVector out(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(y[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            out[j] += y[i] * values_[i * cols_ + j];
        }
    }
    return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<QVector>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        const Rational inv = 1 / rows[r][c];
        for (std::size_t j = 0; j < cols; ++j) {
            rows[r][j] *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) {
                continue;
            }
            const Rational f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                rows[i][j] -= f * rows[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

} // namespace

std::size_t rank(std::vector<QVector> rows)
{
    if (rows.empty()) {
        return 0;
    }
    const auto cols = rows.front().size();
    return rref(rows, cols).size();
}

std::vector<QVector> row_basis(std::vector<QVector> rows)
{
    if (rows.empty()) {
        return {};
    }
    const auto cols = rows.front().size();
    rref(rows, cols);
    for (auto& r : rows) {
        r = primitive(r);
    }
    return rows;
}

std::vector<QVector> null_space(std::vector<QVector> rows, std::size_t cols)
{
    const auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        QVector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -rows[i][free];
        }
        basis.push_back(primitive(v));
    }
    return basis;
}

} // namespace closurelab
