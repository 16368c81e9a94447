#include "closurelab/inequality.hpp"

#include <set>

namespace closurelab {

Inequality::Inequality(QVector normal, Rational rhs)
    : normal_(std::move(normal)), rhs_(std::move(rhs)), key_(primitive(normal_.appended(rhs_)))
{
}

Inequality Inequality::from_vector(const QVector& v)
{
    if (v.empty()) {
        return Inequality(QVector(), 0);
    }
    return Inequality(v.head(v.size() - 1), v[v.size() - 1]);
}

Inequality Inequality::at_least(const QVector& coefficients, const Rational& rhs)
{
    return Inequality(-coefficients, -rhs);
}

bool Inequality::is_trivial() const
{
    return normal_.is_zero() && sgn(rhs_) >= 0;
}

bool Inequality::is_contradiction() const
{
    return normal_.is_zero() && sgn(rhs_) < 0;
}

bool Inequality::is_sign_constraint() const
{
    if (sgn(rhs_) != 0) {
        return false;
    }
    int nonzero = 0;
    for (const auto& a : normal_) {
        const int s = sgn(a);
        if (s > 0) {
            return false;
        }
        nonzero += s != 0;
    }
    return nonzero == 1;
}

bool Inequality::satisfied_by(const QVector& x) const
{
    return dot(normal_, x) <= rhs_;
}

bool Inequality::tight_at(const QVector& x) const
{
    return dot(normal_, x) == rhs_;
}

std::vector<Inequality> unique_canonical(const std::vector<Inequality>& ineqs)
{
    std::set<QVector> seen;
    std::vector<Inequality> out;
    for (const auto& h : ineqs) {
        if (seen.insert(h.key()).second) {
            out.push_back(h);
        }
    }
    return out;
}

} // namespace closurelab
