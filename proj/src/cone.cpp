#include "closurelab/cone.hpp"

#include <algorithm>

#include "closurelab/errors.hpp"
#include "closurelab/lp.hpp"

namespace closurelab {

GeneratedCone::GeneratedCone(std::size_t n, std::vector<QVector> generators) : n_(n)
{
    for (auto& g : generators) {
        if (g.size() != n + 1) {
            throw ContractViolation("generator of dimension " + std::to_string(g.size()) + ", expected " +
                                    std::to_string(n + 1));
        }
        if (g.is_zero()) {
            throw ContractViolation("zero generator");
        }
        auto p = primitive(g);
        if (std::find(generators_.begin(), generators_.end(), p) == generators_.end()) {
            generators_.push_back(std::move(p));
        }
    }
}

GeneratedCone::GeneratedCone(std::vector<QVector> generators)
    : GeneratedCone(generators.empty() ? throw ContractViolation("GeneratedCone: empty generator list needs an "
                                                                 "explicit dimension")
                                       : generators.front().size() - 1,
                    std::move(generators))
{
}

bool GeneratedCone::has_unit_last() const
{
    const auto unit = QVector::unit(n_ + 1, n_);
    return std::find(generators_.begin(), generators_.end(), unit) != generators_.end();
}

GeneratedCone GeneratedCone::with_unit_last() const
{
    if (has_unit_last()) {
        return *this;
    }
    auto gens = generators_;
    gens.push_back(QVector::unit(n_ + 1, n_));
    return GeneratedCone(n_, std::move(gens));
}

PointednessResult is_pointed(const GeneratedCone& K)
{
    const auto d = K.space_dim() + 1;
    const auto& gens = K.generators();
    PointednessResult out;
    if (gens.empty()) {
        out.pointed = true;
        out.support = QVector(d);
        return out;
    }
    // max s  s.t.  s - h.g <= 0 for every generator, -1 <= h_i <= 1.
    const auto rows = gens.size() + 2 * d;
    QMatrix A(rows, d + 1);
    QVector b(rows);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            A.at(i, j) = -gens[i][j];
        }
        A.at(i, d) = 1;
    }
    for (std::size_t j = 0; j < d; ++j) {
        A.at(gens.size() + 2 * j, j) = 1;
        b[gens.size() + 2 * j] = 1;
        A.at(gens.size() + 2 * j + 1, j) = -1;
        b[gens.size() + 2 * j + 1] = 1;
    }
    const auto lp = solve_lp(A, b, QVector::unit(d + 1, d), Sense::Maximize);
    if (lp.status == LpStatus::Optimal && sgn(lp.objective) > 0) {
        out.pointed = true;
        out.support = primitive(lp.primal.head(d));
        return out;
    }
    // Not pointed: some nonzero mu >= 0 has sum mu_i g_i = 0. Normalize by
    // sum mu_i = 1 and read a line off any generator in the support.
    std::vector<QVector> lifted;
    for (const auto& g : gens) {
        lifted.push_back(g.appended(1));
    }
    const auto m = cone_membership(lifted, QVector::unit(d + 1, d));
    if (!m.member) {
        throw InternalError("is_pointed: no strict support and no zero combination");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (sgn(m.multipliers[i]) > 0) {
            out.line = gens[i];
            break;
        }
    }
    return out;
}

RaySet extreme_rays(const GeneratedCone& K)
{
    const auto pointed = is_pointed(K);
    if (!pointed.pointed) {
        throw NotPointedError("extreme_rays: the cone contains the line through (" + to_string(pointed.line, ", ") +
                                  ")",
                              pointed.line);
    }
    const auto& gens = K.generators();
    RaySet out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<QVector> others;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j != i) {
                others.push_back(gens[j]);
            }
        }
        if (!cone_membership(others, gens[i]).member) {
            out.rays.push_back(gens[i]);
        }
    }
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

ClosureResult closure_of(const GeneratedCone& K)
{
    const auto n = K.space_dim();
    ClosureResult out;
    out.unit_last_appended = !K.has_unit_last();
    const auto augmented = K.with_unit_last();
    HPolyhedron P(n);
    for (const auto& g : augmented.generators()) {
        P.add(Inequality::from_vector(g));
    }
    auto reduced = remove_redundant(P);
    out.empty = !reduced.consistent;
    out.polyhedron = out.empty ? HPolyhedron(n, {Inequality(QVector(n), -1)}) : std::move(reduced.polyhedron);
    return out;
}

namespace {

HPolyhedron nonempty_closure(const GeneratedCone& K, const char* op)
{
    auto closure = closure_of(K);
    if (closure.empty) {
        throw HypothesisViolation(std::string(op) + ": the closure is empty");
    }
    return std::move(closure.polyhedron);
}

HPolyhedron full_dimensional_closure(const GeneratedCone& K, const char* op)
{
    auto closure = nonempty_closure(K, op);
    if (dimension(closure) != static_cast<int>(K.space_dim())) {
        throw HypothesisViolation(std::string(op) + ": the closure is not full-dimensional");
    }
    return closure;
}

} // namespace

ValidityResult is_valid_for_closure(const GeneratedCone& K, const Inequality& ineq)
{
    if (ineq.dim() != K.space_dim()) {
        throw ContractViolation("is_valid_for_closure: dimension mismatch");
    }
    const auto closure = nonempty_closure(K, "is_valid_for_closure");
    const auto augmented = K.with_unit_last();
    ValidityResult out;
    const auto m = cone_membership(augmented.generators(), ineq.as_vector());
    if (m.member) {
        out.valid = true;
        out.multipliers = m.multipliers;
        return out;
    }
    const auto implication = check_implication(closure.inequalities(), ineq);
    if (implication.implied) {
        throw InternalError("is_valid_for_closure: cone membership and implication disagree");
    }
    out.witness = implication.witness;
    return out;
}

Theorem1Report check_theorem1(const GeneratedCone& K)
{
    const auto n = K.space_dim();
    const auto augmented = K.with_unit_last();
    const auto closure = full_dimensional_closure(augmented, "check_theorem1");
    Theorem1Report report;
    const auto pointed = is_pointed(augmented);
    report.pointedness_agrees = pointed.pointed;
    if (!pointed.pointed) {
        report.counterexample = "closure is full-dimensional but the cone contains the line through (" +
                                to_string(pointed.line, ", ") + ")";
        return report;
    }
    report.extreme = extreme_rays(augmented);
    for (const auto& g : augmented.generators()) {
        if (!std::binary_search(report.extreme.rays.begin(), report.extreme.rays.end(), g)) {
            report.non_extreme.push_back(g);
        }
    }
    const auto rebuilt = closure_of(GeneratedCone(n, report.extreme.rays)).polyhedron;
    report.closures_equal = same_point_set(closure, rebuilt);
    if (!report.closures_equal) {
        report.counterexample = "closure rebuilt from extreme rays differs from the full closure";
    }
    report.pass = report.closures_equal && report.pointedness_agrees;
    return report;
}

FiiResult is_fii(const GeneratedCone& K, const Inequality& ineq)
{
    if (ineq.dim() != K.space_dim()) {
        throw ContractViolation("is_fii: dimension mismatch");
    }
    const auto augmented = K.with_unit_last();
    const auto closure = full_dimensional_closure(augmented, "is_fii");
    const auto& gens = augmented.generators();
    const auto target = ineq.as_vector();
    if (!cone_membership(gens, target).member) {
        const auto implication = check_implication(closure.inequalities(), ineq);
        throw InvalidInequalityError("is_fii: inequality is not valid for the closure", implication.witness);
    }
    FiiResult out;
    if (ineq.normal().is_zero()) {
        // 0 <= beta holds everywhere, so every family of other inequalities
        // implies it.
        out.multipliers = QVector(gens.size());
        return out;
    }
    std::vector<QVector> others;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!positively_parallel(gens[i], target)) {
            others.push_back(gens[i]);
            index.push_back(i);
        }
    }
    const auto m = cone_membership(others, target);
    if (!m.member) {
        out.fii = true;
        return out;
    }
    out.multipliers = QVector(gens.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        out.multipliers[index[i]] = m.multipliers[i];
    }
    return out;
}

} // namespace closurelab
