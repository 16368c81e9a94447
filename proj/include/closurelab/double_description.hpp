#pragma once

#include <vector>

#include "closurelab/rational.hpp"

namespace closurelab {

/// Generators of a polyhedral cone: cone = span(lines) + cone(rays).
///
/// Canonical form: `lines` is the primitive reduced-row-echelon basis of the
/// lineality space; every ray is orthogonal to the lineality space, primitive,
/// extreme in the pointed part, and the list is sorted lexicographically.
struct ConeGenerators
{
    std::size_t dim = 0;
    std::vector<QVector> lines;
    std::vector<QVector> rays;
};

/// Double description: generators of {z in Q^dim : a.z <= 0 for all a}.
/// Constraints are processed in the given order; adjacency of two rays is
/// decided by the exact rank of their common active constraints.
ConeGenerators cone_generators(const std::vector<QVector>& constraints, std::size_t dim);

/// Orthogonal projection of v onto the complement of span(basis).
QVector project_out(const QVector& v, const std::vector<QVector>& basis);

} // namespace closurelab
