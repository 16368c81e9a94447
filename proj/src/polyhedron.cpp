#include "closurelab/polyhedron.hpp"

#include <algorithm>
#include <set>

#include "closurelab/double_description.hpp"
#include "closurelab/errors.hpp"

namespace closurelab {

HPolyhedron::HPolyhedron(std::size_t dim, std::vector<Inequality> ineqs) : dim_(dim)
{
    for (auto& h : ineqs) {
        add(std::move(h));
    }
}

void HPolyhedron::add(Inequality ineq)
{
    if (ineq.dim() != dim_) {
        throw ContractViolation("inequality of dimension " + std::to_string(ineq.dim()) +
                                " added to a polyhedron in dimension " + std::to_string(dim_));
    }
    ineqs_.push_back(std::move(ineq));
}

bool HPolyhedron::contains(const QVector& x) const
{
    return std::all_of(ineqs_.begin(), ineqs_.end(), [&](const Inequality& h) { return h.satisfied_by(x); });
}

QMatrix HPolyhedron::matrix() const
{
    QMatrix A(ineqs_.size(), dim_);
    for (std::size_t i = 0; i < ineqs_.size(); ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            A.at(i, j) = ineqs_[i].normal()[j];
        }
    }
    return A;
}

QVector HPolyhedron::rhs() const
{
    QVector b(ineqs_.size());
    for (std::size_t i = 0; i < ineqs_.size(); ++i) {
        b[i] = ineqs_[i].rhs();
    }
    return b;
}

HPolyhedron HPolyhedron::canonical() const
{
    std::vector<Inequality> out;
    out.reserve(ineqs_.size());
    for (const auto& h : ineqs_) {
        out.push_back(h.canonical());
    }
    std::sort(out.begin(), out.end());
    return HPolyhedron(dim_, std::move(out));
}

namespace {

// Homogenized generators (v, 1), (r, 0) of a V-polyhedron.
std::vector<QVector> homogenize(const VPolyhedron& V)
{
    std::vector<QVector> gens;
    for (const auto& v : V.vertices) {
        gens.push_back(v.appended(1));
    }
    for (const auto& r : V.rays) {
        gens.push_back(r.appended(0));
    }
    return gens;
}

bool tight_on_generator(const Inequality& h, const QVector& g)
{
    // (alpha, -beta) . (x, t) = 0
    const auto n = h.dim();
    Rational s = -h.rhs() * g[n];
    for (std::size_t j = 0; j < n; ++j) {
        s += h.normal()[j] * g[j];
    }
    return sgn(s) == 0;
}

HPolyhedron lp_scan(const HPolyhedron& P)
{
    std::vector<Inequality> kept = P.inequalities();
    std::size_t i = 0;
    while (i < kept.size()) {
        std::vector<Inequality> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j != i) {
                others.push_back(kept[j]);
            }
        }
        if (check_implication(others, kept[i]).implied) {
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    return HPolyhedron(P.dim(), std::move(kept));
}

std::vector<Inequality> drop_column(const std::vector<Inequality>& ineqs, std::size_t col)
{
    std::vector<Inequality> out;
    out.reserve(ineqs.size());
    for (const auto& h : ineqs) {
        std::vector<Rational> a;
        a.reserve(h.dim() - 1);
        for (std::size_t j = 0; j < h.dim(); ++j) {
            if (j != col) {
                a.push_back(h.normal()[j]);
            }
        }
        out.emplace_back(QVector(std::move(a)), h.rhs());
    }
    return out;
}

} // namespace

VPolyhedron h_to_v(const HPolyhedron& P)
{
    const auto n = P.dim();
    if (n == 0) {
        throw ContractViolation("h_to_v: dimension must be at least 1");
    }
    std::vector<QVector> constraints;
    constraints.reserve(P.size() + 1);
    constraints.push_back(-QVector::unit(n + 1, n));
    for (const auto& h : P.inequalities()) {
        constraints.push_back(h.normal().appended(-h.rhs()));
    }
    const auto cone = cone_generators(constraints, n + 1);

    VPolyhedron V;
    V.dim = n;
    std::set<QVector> vertices, rays;
    for (const auto& g : cone.rays) {
        const auto& t = g[n];
        if (sgn(t) > 0) {
            vertices.insert((1 / t) * g.head(n));
        } else {
            rays.insert(primitive(g.head(n)));
        }
    }
    if (vertices.empty()) {
        return V;
    }
    for (const auto& l : cone.lines) {
        rays.insert(primitive(l.head(n)));
        rays.insert(primitive(-l.head(n)));
    }
    V.vertices.assign(vertices.begin(), vertices.end());
    V.rays.assign(rays.begin(), rays.end());
    return V;
}

HPolyhedron v_to_h(const VPolyhedron& V)
{
    const auto n = V.dim;
    if (V.vertices.empty() && V.rays.empty()) {
        throw ContractViolation("v_to_h: no vertices and no rays");
    }
    for (const auto& v : V.vertices) {
        if (v.size() != n) {
            throw ContractViolation("v_to_h: vertex dimension mismatch");
        }
    }
    for (const auto& r : V.rays) {
        if (r.size() != n) {
            throw ContractViolation("v_to_h: ray dimension mismatch");
        }
    }
    auto gens = homogenize(V);
    if (V.vertices.empty()) {
        gens.push_back(QVector::unit(n + 1, n));
    }
    // Polar cone {y : y.g <= 0}; y = (a, c) gives a.x <= -c.
    const auto polar = cone_generators(gens, n + 1);
    std::vector<Inequality> out;
    auto emit = [&](const QVector& y) {
        QVector a = y.head(n);
        if (a.is_zero()) {
            return;
        }
        out.push_back(Inequality(std::move(a), -y[n]).canonical());
    };
    for (const auto& y : polar.rays) {
        emit(y);
    }
    for (const auto& y : polar.lines) {
        emit(y);
        emit(-y);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return HPolyhedron(n, std::move(out));
}

RedundancyResult remove_redundant(const HPolyhedron& P)
{
    const auto n = P.dim();
    std::vector<Inequality> candidates;
    for (const auto& h : unique_canonical(P.inequalities())) {
        if (h.is_contradiction()) {
            return {P, false};
        }
        if (!h.is_trivial()) {
            candidates.push_back(h);
        }
    }
    HPolyhedron reduced(n, candidates);
    if (is_empty(reduced)) {
        return {P, false};
    }
    if (candidates.empty()) {
        return {reduced, true};
    }
    const auto V = h_to_v(reduced);
    const auto gens = homogenize(V);
    if (rank(gens) == n + 1) {
        // Full-dimensional: the irredundant system is exactly the set of
        // facet-defining inequalities, and canonically distinct inequalities
        // define distinct facets.
        std::vector<Inequality> kept;
        for (const auto& h : candidates) {
            std::vector<QVector> tight;
            for (const auto& g : gens) {
                if (tight_on_generator(h, g)) {
                    tight.push_back(g);
                }
            }
            if (tight.size() >= n && rank(std::move(tight)) == n) {
                kept.push_back(h);
            }
        }
        return {HPolyhedron(n, std::move(kept)), true};
    }
    return {lp_scan(reduced), true};
}

ImplicationResult check_implication(const std::vector<Inequality>& system, const Inequality& target)
{
    const auto n = target.dim();
    HPolyhedron P(n, system);
    const auto A = P.matrix();
    const auto b = P.rhs();
    const auto lp = solve_lp(A, b, target.normal(), Sense::Maximize);
    ImplicationResult out;
    switch (lp.status) {
    case LpStatus::Infeasible:
        throw InconsistentSystemError("check_implication: the system is inconsistent", lp.certificate);
    case LpStatus::Unbounded: {
        const Rational slope = dot(target.normal(), lp.certificate);
        Rational step = (target.rhs() - dot(target.normal(), lp.primal)) / slope;
        if (sgn(step) < 0) {
            step = 0;
        }
        step += 1;
        out.witness = lp.primal + step * lp.certificate;
        return out;
    }
    case LpStatus::Optimal:
        if (lp.objective <= target.rhs()) {
            out.implied = true;
            out.multipliers = lp.dual;
            out.slack = target.rhs() - lp.objective;
        } else {
            out.witness = lp.primal;
        }
        return out;
    }
    throw InternalError("check_implication: unknown LP status");
}

std::optional<QVector> feasible_point(const HPolyhedron& P)
{
    const auto lp = solve_lp(P.matrix(), P.rhs(), QVector(P.dim()), Sense::Maximize);
    if (lp.status == LpStatus::Infeasible) {
        return std::nullopt;
    }
    return lp.primal;
}

bool is_empty(const HPolyhedron& P)
{
    return !feasible_point(P).has_value();
}

int dimension(const HPolyhedron& P)
{
    const auto n = P.dim();
    if (is_empty(P)) {
        return -1;
    }
    std::vector<Inequality> rows;
    for (const auto& h : P.inequalities()) {
        if (!h.normal().is_zero()) {
            rows.push_back(h);
        }
    }
    if (rows.empty()) {
        return static_cast<int>(n);
    }
    // max eps s.t. a_i.x + eps <= b_i, eps <= 1; eps* > 0 iff an interior point exists.
    QMatrix A(rows.size() + 1, n + 1);
    QVector b(rows.size() + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            A.at(i, j) = rows[i].normal()[j];
        }
        A.at(i, n) = 1;
        b[i] = rows[i].rhs();
    }
    A.at(rows.size(), n) = 1;
    b[rows.size()] = 1;
    const auto slack = solve_lp(A, b, QVector::unit(n + 1, n), Sense::Maximize);
    if (slack.status == LpStatus::Optimal && sgn(slack.objective) > 0) {
        return static_cast<int>(n);
    }
    std::vector<QVector> equalities;
    const auto Am = HPolyhedron(n, rows).matrix();
    const auto bm = HPolyhedron(n, rows).rhs();
    for (const auto& h : rows) {
        const auto lp = solve_lp(Am, bm, h.normal(), Sense::Minimize);
        if (lp.status == LpStatus::Optimal && lp.objective == h.rhs()) {
            equalities.push_back(h.normal());
        }
    }
    return static_cast<int>(n) - static_cast<int>(rank(equalities));
}

bool is_facet_defining(const HPolyhedron& P, const Inequality& ineq)
{
    const auto n = P.dim();
    if (ineq.dim() != n) {
        throw ContractViolation("is_facet_defining: dimension mismatch");
    }
    if (dimension(P) != static_cast<int>(n)) {
        throw HypothesisViolation("is_facet_defining: the polyhedron is not full-dimensional");
    }
    const auto implication = check_implication(P.inequalities(), ineq);
    if (!implication.implied) {
        throw InvalidInequalityError("is_facet_defining: inequality is not valid for the polyhedron",
                                     implication.witness);
    }
    HPolyhedron face = P;
    face.add(Inequality(-ineq.normal(), -ineq.rhs()));
    return dimension(face) == static_cast<int>(n) - 1;
}

HPolyhedron fourier_motzkin_project(const HPolyhedron& P, const std::vector<std::size_t>& keep)
{
    const auto n = P.dim();
    std::set<std::size_t> kept(keep.begin(), keep.end());
    if (kept.empty()) {
        throw ContractViolation("fourier_motzkin_project: nothing to keep");
    }
    if (*kept.rbegin() >= n) {
        throw ContractViolation("fourier_motzkin_project: coordinate " + std::to_string(*kept.rbegin()) +
                                " out of range for dimension " + std::to_string(n));
    }
    const auto out_dim = kept.size();
    auto reduced = remove_redundant(P);
    if (!reduced.consistent) {
        return HPolyhedron(out_dim, {Inequality(QVector(out_dim), -1)});
    }
    std::vector<Inequality> system = reduced.polyhedron.inequalities();
    std::vector<std::size_t> coords(n);
    for (std::size_t j = 0; j < n; ++j) {
        coords[j] = j;
    }
    for (std::size_t j = n; j-- > 0;) {
        if (kept.count(j)) {
            continue;
        }
        const auto col = static_cast<std::size_t>(std::find(coords.begin(), coords.end(), j) - coords.begin());
        std::vector<Inequality> pos, neg, next;
        for (const auto& h : system) {
            const int s = sgn(h.normal()[col]);
            if (s > 0) {
                pos.push_back(h);
            } else if (s < 0) {
                neg.push_back(h);
            } else {
                next.push_back(h);
            }
        }
        for (const auto& p : pos) {
            for (const auto& q : neg) {
                const Rational wp = -q.normal()[col];
                const Rational wq = p.normal()[col];
                next.emplace_back(wp * p.normal() + wq * q.normal(), wp * p.rhs() + wq * q.rhs());
            }
        }
        next = drop_column(next, col);
        coords.erase(coords.begin() + static_cast<std::ptrdiff_t>(col));
        const auto dim_now = coords.size();
        const auto step = remove_redundant(HPolyhedron(dim_now, next));
        if (!step.consistent) {
            throw InternalError("fourier_motzkin_project: projection of a nonempty set became empty");
        }
        system = step.polyhedron.inequalities();
    }
    return HPolyhedron(out_dim, system).canonical();
}

bool is_subset(const HPolyhedron& a, const HPolyhedron& b)
{
    if (a.dim() != b.dim()) {
        throw ContractViolation("is_subset: dimension mismatch");
    }
    if (is_empty(a)) {
        return true;
    }
    for (const auto& h : b.inequalities()) {
        if (!check_implication(a.inequalities(), h).implied) {
            return false;
        }
    }
    return true;
}

bool same_point_set(const HPolyhedron& a, const HPolyhedron& b)
{
    return is_subset(a, b) && is_subset(b, a);
}

} // namespace closurelab
