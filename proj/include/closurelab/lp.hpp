#pragma once

#include <optional>
#include <string>
#include <vector>

#include "closurelab/rational.hpp"

namespace closurelab {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Sense { Minimize, Maximize };

std::string to_string(LpStatus status);

/// Outcome of optimizing c.x over {x : Ax <= b} with x free.
///
/// Every field is exact and every certificate is checked by substitution
/// before `solve_lp` returns:
///  - Optimal: `primal` attains `objective`; `dual` is y >= 0 with
///    y^T A = c and y^T b = objective when maximizing (y^T A = -c and
///    y^T b = -objective when minimizing).
///  - Infeasible: `certificate` is y >= 0 with y^T A = 0 and y^T b < 0.
///  - Unbounded: `certificate` is r with A r <= 0 and c.r > 0 when
///    maximizing (c.r < 0 when minimizing); `primal` is a feasible point.
struct LpResult
{
    LpStatus status = LpStatus::Infeasible;
    QVector primal;
    Rational objective;
    QVector dual;
    QVector certificate;
};

/// Exact simplex with Bland's rule, so it terminates on degenerate input.
/// Throws ContractViolation on dimension mismatch.
LpResult solve_lp(const QMatrix& A, const QVector& b, const QVector& c, Sense sense);

/// Independent substitution check of every claim in `result`. Returns an
/// error description, or nothing when all claims hold.
std::optional<std::string> audit(const LpResult& result, const QMatrix& A, const QVector& b,
                                 const QVector& c, Sense sense);

/// Answer to "is target a nonnegative combination of the generators?".
/// member: target = sum multipliers[i] * generators[i], multipliers >= 0.
/// otherwise: separator.g <= 0 for every generator and separator.target > 0.
struct MembershipResult
{
    bool member = false;
    QVector multipliers;
    QVector separator;
};

/// The empty generator list spans the cone {0}.
MembershipResult cone_membership(const std::vector<QVector>& generators, const QVector& target);

} // namespace closurelab
