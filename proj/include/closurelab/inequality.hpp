#pragma once

#include <string>
#include <vector>

#include "closurelab/rational.hpp"

namespace closurelab {

/// Half-space normal . x <= rhs.
///
/// The coefficients are kept exactly as written, so certificates can be
/// reported against the caller's scaling. Identity (==, ordering) goes
/// through the canonical form: (normal, rhs) positively rescaled to coprime
/// integers. A zero normal is allowed; 0 <= rhs with rhs >= 0 is the
/// trivial inequality and 0 <= -1 is the canonical contradiction.
class Inequality
{
  public:
    Inequality() = default;
    Inequality(QVector normal, Rational rhs);

    /// From a vector (a_1, ..., a_n, b) in Q^{n+1}.
    static Inequality from_vector(const QVector& v);

    /// sum_j coefficients_j x_j >= rhs, stored as the negated <= form.
    static Inequality at_least(const QVector& coefficients, const Rational& rhs);

    std::size_t dim() const { return normal_.size(); }
    const QVector& normal() const { return normal_; }
    const Rational& rhs() const { return rhs_; }

    /// (normal, rhs) as one vector in Q^{n+1}, original scaling.
    QVector as_vector() const { return normal_.appended(rhs_); }
    /// Canonical coprime-integer vector in Q^{n+1}.
    const QVector& key() const { return key_; }
    Inequality canonical() const { return from_vector(key_); }

    bool is_trivial() const;        // 0 <= b, b >= 0
    bool is_contradiction() const;  // 0 <= b, b < 0
    /// -x_j <= 0 for some j.
    bool is_sign_constraint() const;

    bool satisfied_by(const QVector& x) const;
    bool tight_at(const QVector& x) const;

    friend bool operator==(const Inequality& a, const Inequality& b) { return a.key_ == b.key_; }
    friend bool operator<(const Inequality& a, const Inequality& b) { return a.key_ < b.key_; }

  private:
    QVector normal_;
    Rational rhs_;
    QVector key_;
};

/// Drops later copies of canonically equal inequalities; keeps input order.
std::vector<Inequality> unique_canonical(const std::vector<Inequality>& ineqs);

} // namespace closurelab
