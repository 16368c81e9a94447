#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "closurelab/covering.hpp"
#include "closurelab/polyhedron.hpp"

namespace closurelab {

/// k multiplier rows lambda^1..lambda^k in Q^m_+, each primitive and
/// nonzero. Row j aggregates Q into the valid inequality
/// (lambda^j M) x >= lambda^j d.
struct AggregationSample
{
    std::vector<QVector> multipliers;

    friend bool operator==(const AggregationSample&, const AggregationSample&) = default;
};

std::string to_string(const AggregationSample& s);

/// Primitive vectors of N^m with coordinate sum at most `density`, ordered
/// by coordinate sum and then lexicographically descending (unit vectors
/// e^1, ..., e^m first).
std::vector<QVector> multiplier_rows(std::size_t m, std::size_t density);

/// Number of samples `sample_multipliers` returns, without building them.
std::uint64_t sample_count(std::size_t m, std::size_t k, std::size_t density);

/// Every set of min(k, r) distinct rows of `multiplier_rows(m, density)`
/// (r rows in total), in lexicographic order of row positions. A tuple with
/// a repeated or rescaled row aggregates to a superset of one of these, so
/// dropping it leaves the closure unchanged.
std::vector<AggregationSample> sample_multipliers(std::size_t m, std::size_t k, std::size_t density);

/// Covering instance with one row lambda^j M >= lambda^j d per multiplier
/// row, each rescaled to coprime integers. Multipliers may be any
/// nonnegative rationals. Throws ContractViolation on a length mismatch.
CoveringInstance aggregate(const CoveringInstance& Q, const AggregationSample& sample);

struct AggregatedHull
{
    AggregationSample sample;
    CoveringInstance relaxation;
    HPolyhedron hull;
};

/// Outer approximation of the k-aggregation closure from the density-D
/// sample grid.
///
/// `polyhedron` is the canonical irredundant intersection of every hull in
/// `hulls`. `stabilized` records whether the density-2D grid yields the
/// same point set; it is evidence of exactness, not proof.
struct ClosureApprox
{
    HPolyhedron polyhedron;
    std::vector<AggregatedHull> hulls;
    std::size_t k = 1;
    std::size_t density = 1;
    bool stabilized = false;
};

/// Throws ContractViolation when k or density is zero.
ClosureApprox closure_approx(const CoveringInstance& Q, std::size_t k, std::size_t density);

/// Canonical irredundant intersection of a list of H-polyhedra.
HPolyhedron intersect(std::size_t dim, const std::vector<HPolyhedron>& parts);

enum class CutKind { Sign, HullFacet, Unattributed };

std::string to_string(CutKind kind);

struct CutLabel
{
    Inequality facet;
    CutKind kind = CutKind::Unattributed;
    /// Index into ClosureApprox::hulls for HullFacet.
    std::size_t hull_index = 0;
};

/// Labels every facet of the closure: a nonnegativity constraint, a facet of
/// one sampled aggregated hull (first match in sample order), or neither.
std::vector<CutLabel> classify_cuts(const ClosureApprox& ca);

/// Projection of Q onto its first t coordinates: rows touching a dropped
/// coordinate can always be met by raising it, so they become 0 >= 0; the
/// others keep their first t entries.
CoveringInstance project_instance(const CoveringInstance& Q, std::size_t t);

struct ProjectionReport
{
    bool pass = false;
    HPolyhedron projected_closure;   // projection of the closure of Q
    HPolyhedron closure_of_projection;
    CoveringInstance projected_instance;
};

/// Compares proj_[t] of the closure of Q with the closure of proj_[t] Q.
/// Only single-row instances are accepted, where both closures are exact;
/// otherwise throws ContractViolation. Requires 1 <= t < n.
ProjectionReport check_projection_lemma(const CoveringInstance& Q, std::size_t t, std::size_t k);

/// Worker count for hull computations: CLOSURELAB_THREADS when set to a
/// positive integer, otherwise the hardware concurrency.
std::size_t worker_threads();

} // namespace closurelab
