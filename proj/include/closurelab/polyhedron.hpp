#pragma once

#include <optional>
#include <vector>

#include "closurelab/inequality.hpp"
#include "closurelab/lp.hpp"
#include "closurelab/rational.hpp"

namespace closurelab {

/// Intersection of finitely many half-spaces in Q^dim. May be empty or
/// unbounded; equalities are written as pairs of opposite inequalities.
class HPolyhedron
{
  public:
    HPolyhedron() = default;
    explicit HPolyhedron(std::size_t dim, std::vector<Inequality> ineqs = {});

    std::size_t dim() const { return dim_; }
    const std::vector<Inequality>& inequalities() const { return ineqs_; }
    std::size_t size() const { return ineqs_.size(); }

    void add(Inequality ineq);
    bool contains(const QVector& x) const;

    /// Constraint matrix and right-hand side of the <= system.
    QMatrix matrix() const;
    QVector rhs() const;

    /// Same inequalities in canonical form, sorted lexicographically.
    HPolyhedron canonical() const;

  private:
    std::size_t dim_ = 0;
    std::vector<Inequality> ineqs_;
};

/// conv(vertices) + cone(rays). When the polyhedron contains lines, each
/// line appears as a pair of opposite rays and the "vertices" are points of
/// the minimal faces orthogonal to the lineality space.
struct VPolyhedron
{
    std::size_t dim = 0;
    std::vector<QVector> vertices;
    std::vector<QVector> rays;

    bool empty() const { return vertices.empty(); }
};

/// Vertices and rays by double description on the homogenization. Empty
/// input yields empty lists. Output sorted lexicographically; rays primitive.
VPolyhedron h_to_v(const HPolyhedron& P);

/// Irredundant canonical H-representation of conv(vertices) + cone(rays).
/// With no vertices the origin is taken as apex. Throws ContractViolation
/// when both lists are empty.
HPolyhedron v_to_h(const VPolyhedron& V);

struct RedundancyResult
{
    HPolyhedron polyhedron;
    bool consistent = true;
};

/// Minimal sub-list defining the same set. Canonically equal inequalities
/// collapse to their first occurrence; the rest are scanned in order and an
/// inequality is dropped when the remaining ones imply it. Inconsistent
/// input comes back unchanged with `consistent = false`.
RedundancyResult remove_redundant(const HPolyhedron& P);

/// Whether `target` is valid over {x : system}. When implied, `multipliers`
/// (one per system row) and `slack` (the weight on 0 <= 1) satisfy
/// sum y_i a_i = alpha and sum y_i b_i + slack = beta exactly. Otherwise
/// `witness` satisfies the system and violates the target.
struct ImplicationResult
{
    bool implied = false;
    QVector multipliers;
    Rational slack;
    QVector witness;
};

/// Throws InconsistentSystemError (with Farkas certificate) when the
/// system has no solution.
ImplicationResult check_implication(const std::vector<Inequality>& system, const Inequality& target);

/// A point of P, or nothing when P is empty.
std::optional<QVector> feasible_point(const HPolyhedron& P);
bool is_empty(const HPolyhedron& P);

/// -1 for the empty set, otherwise the affine dimension.
int dimension(const HPolyhedron& P);

/// True iff P ∩ {alpha.x = beta} has dimension dim - 1. Throws
/// HypothesisViolation if P is not full-dimensional and
/// InvalidInequalityError (with a violating point) if the inequality is not
/// valid for P.
bool is_facet_defining(const HPolyhedron& P, const Inequality& ineq);

/// Projection onto the coordinates in `keep` (0-based, any order; output
/// coordinates follow ascending index order). Fourier-Motzkin elimination
/// with redundancy removal after every step. An empty P projects to the
/// canonical contradiction 0 <= -1.
HPolyhedron fourier_motzkin_project(const HPolyhedron& P, const std::vector<std::size_t>& keep);

/// Point-set equality by mutual implication of every inequality.
bool same_point_set(const HPolyhedron& a, const HPolyhedron& b);

/// a ⊆ b, decided by implication of every inequality of b over a.
bool is_subset(const HPolyhedron& a, const HPolyhedron& b);

} // namespace closurelab
