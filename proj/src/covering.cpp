#include "closurelab/covering.hpp"

#include <algorithm>

#include "closurelab/errors.hpp"

namespace closurelab {

CoveringInstance::CoveringInstance(QMatrix M, QVector d) : M_(std::move(M)), d_(std::move(d))
{
    if (d_.size() != M_.rows()) {
        throw ContractViolation("covering instance: M has " + std::to_string(M_.rows()) + " rows but d has " +
                                std::to_string(d_.size()) + " entries");
    }
    for (std::size_t i = 0; i < M_.rows(); ++i) {
        bool zero_row = true;
        for (std::size_t j = 0; j < M_.cols(); ++j) {
            if (sgn(M_.at(i, j)) < 0) {
                throw ContractViolation("covering instance: negative entry M[" + std::to_string(i + 1) + "][" +
                                        std::to_string(j + 1) + "] = " + to_string(M_.at(i, j)));
            }
            zero_row = zero_row && sgn(M_.at(i, j)) == 0;
        }
        if (sgn(d_[i]) < 0) {
            throw ContractViolation("covering instance: negative entry d[" + std::to_string(i + 1) +
                                    "] = " + to_string(d_[i]));
        }
        if (zero_row && sgn(d_[i]) > 0) {
            throw ContractViolation("covering instance: row " + std::to_string(i + 1) +
                                    " is zero but demands " + to_string(d_[i]));
        }
    }
}

bool CoveringInstance::contains(const QVector& x) const
{
    if (x.size() != cols()) {
        throw ContractViolation("covering instance: point dimension mismatch");
    }
    for (const auto& v : x) {
        if (sgn(v) < 0) {
            return false;
        }
    }
    const auto Mx = M_ * x;
    for (std::size_t i = 0; i < rows(); ++i) {
        if (Mx[i] < d_[i]) {
            return false;
        }
    }
    return true;
}

HPolyhedron CoveringInstance::relaxation() const
{
    HPolyhedron P(cols());
    for (std::size_t i = 0; i < rows(); ++i) {
        P.add(Inequality::at_least(M_.row(i), d_[i]));
    }
    for (std::size_t j = 0; j < cols(); ++j) {
        P.add(Inequality(-QVector::unit(cols(), j), 0));
    }
    return P;
}

QVector to_qvector(const LatticePoint& p)
{
    QVector v(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        v[j] = Rational(static_cast<long>(p[j]));
    }
    return v;
}

std::vector<std::int64_t> enumeration_bounds(const CoveringInstance& Q)
{
    std::vector<std::int64_t> bound(Q.cols(), 0);
    for (std::size_t j = 0; j < Q.cols(); ++j) {
        Integer best = 0;
        for (std::size_t i = 0; i < Q.rows(); ++i) {
            const auto& a = Q.matrix().at(i, j);
            if (sgn(a) > 0) {
                best = std::max(best, ceil_div(Q.demand()[i] / a));
            }
        }
        if (!best.fits_slong_p()) {
            throw ContractViolation("covering instance: enumeration bound overflows");
        }
        bound[j] = best.get_si();
    }
    return bound;
}

namespace {

// Rows scaled to integers: sum_j w_ij x_j >= r_i.
struct IntegerRows
{
    std::vector<std::vector<Integer>> w;
    std::vector<Integer> r;

    explicit IntegerRows(const CoveringInstance& Q)
    {
        for (std::size_t i = 0; i < Q.rows(); ++i) {
            auto scaled = primitive(Q.matrix().row(i).appended(Q.demand()[i]));
            std::vector<Integer> row;
            for (std::size_t j = 0; j < Q.cols(); ++j) {
                row.push_back(scaled[j].get_num());
            }
            w.push_back(std::move(row));
            r.push_back(scaled[Q.cols()].get_num());
        }
    }

    bool feasible(const LatticePoint& x) const
    {
        Integer s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            s = 0;
            for (std::size_t j = 0; j < x.size(); ++j) {
                if (x[j] != 0 && sgn(w[i][j]) != 0) {
                    s += w[i][j] * static_cast<long>(x[j]);
                }
            }
            if (s < r[i]) {
                return false;
            }
        }
        return true;
    }
};

} // namespace

MinimalPointSet minimal_integer_points(const CoveringInstance& Q, std::uint64_t max_box)
{
    const auto n = Q.cols();
    const auto bound = enumeration_bounds(Q);
    std::uint64_t box = 1;
    for (auto b : bound) {
        const auto extent = static_cast<std::uint64_t>(b) + 1;
        if (box > max_box / extent) {
            throw ContractViolation("minimal_integer_points: enumeration box exceeds " + std::to_string(max_box) +
                                    " points");
        }
        box *= extent;
    }
    const IntegerRows rows(Q);
    MinimalPointSet out;
    LatticePoint x(n, 0);
    // Feasible integer points form an up-set, so x is minimal iff no single
    // unit decrement stays feasible. Lexicographic odometer order.
    for (;;) {
        if (rows.feasible(x)) {
            bool minimal = true;
            for (std::size_t j = 0; j < n && minimal; ++j) {
                if (x[j] == 0) {
                    continue;
                }
                --x[j];
                minimal = !rows.feasible(x);
                ++x[j];
            }
            if (minimal) {
                out.points.push_back(x);
            }
        }
        std::size_t j = n;
        while (j > 0 && x[j - 1] == bound[j - 1]) {
            x[j - 1] = 0;
            --j;
        }
        if (j == 0) {
            break;
        }
        ++x[j - 1];
    }
    return out;
}

HPolyhedron integer_hull(const CoveringInstance& Q)
{
    const auto n = Q.cols();
    VPolyhedron V;
    V.dim = n;
    for (const auto& p : minimal_integer_points(Q).points) {
        V.vertices.push_back(to_qvector(p));
    }
    for (std::size_t j = 0; j < n; ++j) {
        V.rays.push_back(QVector::unit(n, j));
    }
    return v_to_h(V);
}

bool dominated_by(const LatticePoint& a, const LatticePoint& b)
{
    if (a.size() != b.size()) {
        throw ContractViolation("point dimension mismatch");
    }
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) {
            return false;
        }
    }
    return true;
}

MinimalPointSet minimal_elements(std::vector<LatticePoint> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    // A dominator precedes the point it dominates in lexicographic order.
    MinimalPointSet out;
    for (auto& p : points) {
        const bool dominated = std::any_of(out.points.begin(), out.points.end(),
                                           [&](const LatticePoint& q) { return dominated_by(q, p); });
        if (!dominated) {
            out.points.push_back(std::move(p));
        }
    }
    return out;
}

bool down_set_contains(const std::vector<LatticePoint>& inner, const std::vector<LatticePoint>& outer)
{
    return std::all_of(inner.begin(), inner.end(), [&](const LatticePoint& p) {
        return std::any_of(outer.begin(), outer.end(), [&](const LatticePoint& q) { return dominated_by(p, q); });
    });
}

} // namespace closurelab
