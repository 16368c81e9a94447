#include "closurelab/lp.hpp"

#include "closurelab/errors.hpp"

namespace closurelab {

std::string to_string(LpStatus status)
{
    switch (status) {
    case LpStatus::Optimal:
        return "Optimal";
    case LpStatus::Infeasible:
        return "Infeasible";
    case LpStatus::Unbounded:
        return "Unbounded";
    }
    return "?";
}

namespace {

// Result of min c.z subject to A z = b, z >= 0, reported against the rows as
// given (no sign normalization visible to the caller).
struct StandardResult
{
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> z;       // Optimal: solution. Unbounded: feasible point.
    std::vector<Rational> y;       // Optimal: y^T A <= c, y^T b = c.z. Infeasible: y^T A <= 0, y^T b > 0.
    std::vector<Rational> ray;     // Unbounded: A ray = 0, ray >= 0, c.ray < 0.
};

// Dense tableau simplex. The rows are sign-normalized so the right-hand side
// is nonnegative; unit columns become the initial basis and artificials fill
// the remaining rows. B^{-1} stays readable from the columns of the initial
// basis, which yields duals and Farkas vectors without a second solve.
class Tableau
{
  public:
    Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b, std::size_t cols)
        : m_(A.size()), n_(cols), sign_(m_, 1), initial_(m_)
    {
        for (std::size_t i = 0; i < m_; ++i) {
            if (sgn(b[i]) < 0) {
                sign_[i] = -1;
            }
        }
        // Find unit columns per row.
        std::vector<std::size_t> unit_for_row(m_, npos);
        for (std::size_t j = 0; j < n_; ++j) {
            std::size_t hit = npos;
            bool unit = true;
            for (std::size_t i = 0; i < m_ && unit; ++i) {
                const int s = sgn(A[i][j]);
                if (s == 0) {
                    continue;
                }
                if (hit != npos || A[i][j] * sign_[i] != 1) {
                    unit = false;
                } else {
                    hit = i;
                }
            }
            if (unit && hit != npos && unit_for_row[hit] == npos) {
                unit_for_row[hit] = j;
            }
        }
        std::size_t artificials = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (unit_for_row[i] == npos) {
                ++artificials;
            }
        }
        width_ = n_ + artificials;
        t_.assign(m_ * width_, Rational(0));
        rhs_.resize(m_);
        basis_.resize(m_);
        std::size_t next_art = n_;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(A[i][j]) != 0) {
                    cell(i, j) = sign_[i] > 0 ? A[i][j] : Rational(-A[i][j]);
                }
            }
            rhs_[i] = sign_[i] > 0 ? b[i] : Rational(-b[i]);
            if (unit_for_row[i] != npos) {
                initial_[i] = unit_for_row[i];
            } else {
                initial_[i] = next_art;
                cell(i, next_art) = 1;
                ++next_art;
            }
            basis_[i] = initial_[i];
        }
    }

    StandardResult solve(const std::vector<Rational>& cost)
    {
        StandardResult out;
        const bool needs_phase_one = width_ > n_;
        if (needs_phase_one) {
            std::vector<Rational> phase_one(width_, Rational(0));
            for (std::size_t j = n_; j < width_; ++j) {
                phase_one[j] = 1;
            }
            set_objective(phase_one);
            run(width_);
            if (sgn(objective_value()) > 0) {
                out.status = LpStatus::Infeasible;
                // Phase-one dual: y' with y'^T A' <= 0 and y'^T b' = w > 0.
                out.y = dual(phase_one);
                return out;
            }
            drive_out_artificials();
        }
        std::vector<Rational> full_cost(width_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) {
            full_cost[j] = cost[j];
        }
        set_objective(full_cost);
        const auto unbounded_col = run(n_);
        out.z = primal();
        if (unbounded_col != npos) {
            out.status = LpStatus::Unbounded;
            out.ray.assign(n_, Rational(0));
            out.ray[unbounded_col] = 1;
            for (std::size_t i = 0; i < m_; ++i) {
                if (basis_[i] < n_) {
                    out.ray[basis_[i]] = -cell(i, unbounded_col);
                }
            }
            return out;
        }
        out.status = LpStatus::Optimal;
        out.y = dual(full_cost);
        return out;
    }

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Rational& cell(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }

    void set_objective(const std::vector<Rational>& cost)
    {
        reduced_ = cost;
        neg_value_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& cb = cost[basis_[i]];
            if (sgn(cb) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < width_; ++j) {
                reduced_[j] -= cb * cell(i, j);
            }
            neg_value_ -= cb * rhs_[i];
        }
    }

    Rational objective_value() const { return -neg_value_; }

    // Bland's rule over columns [0, eligible). Returns npos at optimality,
    // or the entering column when it proves unboundedness.
    std::size_t run(std::size_t eligible)
    {
        for (;;) {
            std::size_t enter = npos;
            for (std::size_t j = 0; j < eligible; ++j) {
                if (sgn(reduced_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == npos) {
                return npos;
            }
            std::size_t leave = npos;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(cell(i, enter)) <= 0) {
                    continue;
                }
                Rational ratio = rhs_[i] / cell(i, enter);
                if (leave == npos || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leave == npos) {
                return enter;
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        const Rational inv = 1 / cell(r, c);
        for (std::size_t j = 0; j < width_; ++j) {
            if (sgn(cell(r, j)) != 0) {
                cell(r, j) *= inv;
            }
        }
        rhs_[r] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || sgn(cell(i, c)) == 0) {
                continue;
            }
            const Rational f = cell(i, c);
            for (std::size_t j = 0; j < width_; ++j) {
                if (sgn(cell(r, j)) != 0) {
                    cell(i, j) -= f * cell(r, j);
                }
            }
            rhs_[i] -= f * rhs_[r];
        }
        if (sgn(reduced_[c]) != 0) {
            const Rational f = reduced_[c];
            for (std::size_t j = 0; j < width_; ++j) {
                if (sgn(cell(r, j)) != 0) {
                    reduced_[j] -= f * cell(r, j);
                }
            }
            neg_value_ -= f * rhs_[r];
        }
        basis_[r] = c;
    }

    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) {
                continue;
            }
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(cell(i, j)) != 0) {
                    pivot(i, j);
                    break;
                }
            }
            // A row with no structural entry left is linearly dependent; its
            // artificial stays basic at zero and never re-enters.
        }
    }

    std::vector<Rational> primal() const
    {
        std::vector<Rational> z(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) {
                z[basis_[i]] = rhs_[i];
            }
        }
        return z;
    }

    // y_k = c_{u_k} - d_{u_k} for the initial basic column u_k of row k,
    // mapped back through the row sign flip.
    std::vector<Rational> dual(const std::vector<Rational>& cost) const
    {
        std::vector<Rational> y(m_);
        for (std::size_t k = 0; k < m_; ++k) {
            const auto u = initial_[k];
            Rational yk = cost[u] - reduced_[u];
            y[k] = sign_[k] > 0 ? yk : Rational(-yk);
        }
        return y;
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t width_ = 0;
    std::vector<int> sign_;
    std::vector<std::size_t> initial_;
    std::vector<Rational> t_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> reduced_;
    Rational neg_value_;
};

StandardResult solve_standard(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                              const std::vector<Rational>& cost)
{
    Tableau tableau(A, b, cost.size());
    return tableau.solve(cost);
}

QVector primitive_nonzero(QVector v)
{
    return v.is_zero() ? v : primitive(v);
}

} // namespace

LpResult solve_lp(const QMatrix& A, const QVector& b, const QVector& c, Sense sense)
{
    const auto m = A.rows();
    const auto n = A.cols();
    if (b.size() != m || c.size() != n) {
        throw ContractViolation("solve_lp: A is " + std::to_string(m) + "x" + std::to_string(n) +
                                " but b has length " + std::to_string(b.size()) + " and c has length " +
                                std::to_string(c.size()));
    }
    // z = (x+, x-, s); [A, -A, I] z = b; minimize -c'.x+ + c'.x- with c' the
    // maximization objective.
    const auto N = 2 * n + m;
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(N, Rational(0)));
    std::vector<Rational> rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = A.at(i, j);
            rows[i][n + j] = -A.at(i, j);
        }
        rows[i][2 * n + i] = 1;
        rhs[i] = b[i];
    }
    const Rational flip = sense == Sense::Maximize ? 1 : -1;
    std::vector<Rational> cost(N, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        cost[j] = -flip * c[j];
        cost[n + j] = flip * c[j];
    }
    const auto std_result = solve_standard(rows, rhs, cost);

    LpResult result;
    result.status = std_result.status;
    auto x_of = [n](const std::vector<Rational>& z) {
        QVector x(n);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = z[j] - z[n + j];
        }
        return x;
    };
    switch (std_result.status) {
    case LpStatus::Infeasible: {
        QVector y(m);
        for (std::size_t i = 0; i < m; ++i) {
            y[i] = -std_result.y[i];
        }
        result.certificate = primitive_nonzero(y);
        break;
    }
    case LpStatus::Unbounded:
        result.primal = x_of(std_result.z);
        result.certificate = primitive_nonzero(x_of(std_result.ray));
        break;
    case LpStatus::Optimal: {
        result.primal = x_of(std_result.z);
        result.objective = dot(c, result.primal);
        QVector y(m);
        for (std::size_t i = 0; i < m; ++i) {
            y[i] = -std_result.y[i];
        }
        result.dual = y;
        break;
    }
    }
    if (auto problem = audit(result, A, b, c, sense)) {
        throw InternalError("solve_lp certificate failed: " + *problem);
    }
    return result;
}

std::optional<std::string> audit(const LpResult& result, const QMatrix& A, const QVector& b, const QVector& c,
                                 Sense sense)
{
    const auto m = A.rows();
    auto feasible = [&](const QVector& x) {
        const auto Ax = A * x;
        for (std::size_t i = 0; i < m; ++i) {
            if (Ax[i] > b[i]) {
                return false;
            }
        }
        return true;
    };
    switch (result.status) {
    case LpStatus::Optimal: {
        if (result.primal.size() != A.cols() || !feasible(result.primal)) {
            return "optimal point infeasible";
        }
        if (dot(c, result.primal) != result.objective) {
            return "objective mismatch";
        }
        if (result.dual.size() != m) {
            return "dual has wrong length";
        }
        for (const auto& y : result.dual) {
            if (sgn(y) < 0) {
                return "dual not nonnegative";
            }
        }
        const QVector target = sense == Sense::Maximize ? c : -c;
        if (A.left_multiply(result.dual) != target) {
            return "dual does not reproduce the objective";
        }
        const Rational value = sense == Sense::Maximize ? result.objective : Rational(-result.objective);
        if (dot(result.dual, b) != value) {
            return "duality gap";
        }
        return std::nullopt;
    }
    case LpStatus::Infeasible: {
        const auto& y = result.certificate;
        if (y.size() != m) {
            return "Farkas vector has wrong length";
        }
        for (const auto& v : y) {
            if (sgn(v) < 0) {
                return "Farkas vector not nonnegative";
            }
        }
        if (!A.left_multiply(y).is_zero()) {
            return "Farkas vector: y^T A != 0";
        }
        if (sgn(dot(y, b)) >= 0) {
            return "Farkas vector: y^T b >= 0";
        }
        return std::nullopt;
    }
    case LpStatus::Unbounded: {
        const auto& r = result.certificate;
        if (r.size() != A.cols()) {
            return "ray has wrong length";
        }
        const auto Ar = A * r;
        for (const auto& v : Ar) {
            if (sgn(v) > 0) {
                return "ray leaves the feasible region";
            }
        }
        const int s = sgn(dot(c, r));
        if ((sense == Sense::Maximize && s <= 0) || (sense == Sense::Minimize && s >= 0)) {
            return "ray does not improve the objective";
        }
        if (result.primal.size() != A.cols() || !feasible(result.primal)) {
            return "unbounded result without a feasible point";
        }
        return std::nullopt;
    }
    }
    return "unknown status";
}

MembershipResult cone_membership(const std::vector<QVector>& generators, const QVector& target)
{
    const auto d = target.size();
    for (const auto& g : generators) {
        if (g.size() != d) {
            throw ContractViolation("cone_membership: generator of dimension " + std::to_string(g.size()) +
                                    ", target of dimension " + std::to_string(d));
        }
    }
    MembershipResult out;
    if (generators.empty()) {
        out.member = target.is_zero();
        if (!out.member) {
            out.separator = primitive(target);
        }
        return out;
    }
    const auto k = generators.size();
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(k));
    std::vector<Rational> rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            rows[i][j] = generators[j][i];
        }
        rhs[i] = target[i];
    }
    const auto res = solve_standard(rows, rhs, std::vector<Rational>(k, Rational(0)));
    if (res.status == LpStatus::Optimal) {
        out.member = true;
        out.multipliers = QVector(res.z);
        QVector check(d);
        for (std::size_t j = 0; j < k; ++j) {
            check = check + out.multipliers[j] * generators[j];
        }
        if (check != target) {
            throw InternalError("cone_membership: multipliers do not reproduce the target");
        }
        return out;
    }
    if (res.status != LpStatus::Infeasible) {
        throw InternalError("cone_membership: feasibility problem reported unbounded");
    }
    out.separator = primitive(QVector(res.y));
    for (const auto& g : generators) {
        if (sgn(dot(out.separator, g)) > 0) {
            throw InternalError("cone_membership: separator has positive product with a generator");
        }
    }
    if (sgn(dot(out.separator, target)) <= 0) {
        throw InternalError("cone_membership: separator does not separate the target");
    }
    return out;
}

} // namespace closurelab
