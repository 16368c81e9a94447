#pragma once

#include <string>
#include <vector>

#include "closurelab/inequality.hpp"
#include "closurelab/polyhedron.hpp"
#include "closurelab/rational.hpp"

namespace closurelab {

/// cone(Omega) for a finite family Omega of candidate inequalities
/// (alpha, beta) in Q^{n+1}. Generators are stored in primitive form with
/// parallel duplicates collapsed to their first occurrence; the zero vector
/// is rejected.
class GeneratedCone
{
  public:
    GeneratedCone(std::size_t n, std::vector<QVector> generators);
    /// Dimension taken from the first generator; the list must be nonempty.
    explicit GeneratedCone(std::vector<QVector> generators);

    /// n, the dimension of the x-space. Generators live in Q^{n+1}.
    std::size_t space_dim() const { return n_; }
    const std::vector<QVector>& generators() const { return generators_; }

    /// (0, ..., 0, 1) is among the generators.
    bool has_unit_last() const;
    /// Copy with (0, ..., 0, 1) appended when it is missing.
    GeneratedCone with_unit_last() const;

  private:
    std::size_t n_;
    std::vector<QVector> generators_;
};

/// Extreme rays, primitive and sorted lexicographically.
struct RaySet
{
    std::vector<QVector> rays;
};

/// Throws NotPointedError naming a line of K when K is not pointed.
RaySet extreme_rays(const GeneratedCone& K);

/// pointed: h.g > 0 for every generator g (`support`).
/// otherwise: `line` is a nonzero v with v and -v both in K.
struct PointednessResult
{
    bool pointed = false;
    QVector support;
    QVector line;
};

PointednessResult is_pointed(const GeneratedCone& K);

struct ClosureResult
{
    HPolyhedron polyhedron;
    bool empty = false;
    bool unit_last_appended = false;
};

/// {x : alpha.x <= beta for every generator}, redundancy-eliminated.
/// (0, ..., 0, 1) is appended when missing and reported.
ClosureResult closure_of(const GeneratedCone& K);

/// valid: `multipliers` over the generators of K.with_unit_last() reproduce
/// (alpha, beta) as written. otherwise: `witness` lies in the closure and
/// violates the inequality.
struct ValidityResult
{
    bool valid = false;
    QVector multipliers;
    QVector witness;
};

/// Throws HypothesisViolation when the closure is empty.
ValidityResult is_valid_for_closure(const GeneratedCone& K, const Inequality& ineq);

struct Theorem1Report
{
    bool pass = false;
    bool closures_equal = false;
    bool pointedness_agrees = false;
    RaySet extreme;
    /// Generators of K (with the unit appended) that are not extreme.
    std::vector<QVector> non_extreme;
    std::string counterexample;
};

/// Rebuilds the closure from the extreme rays alone and checks that the
/// point set is unchanged, and that pointedness agrees with
/// full-dimensionality. Throws HypothesisViolation when the closure is not
/// full-dimensional.
Theorem1Report check_theorem1(const GeneratedCone& K);

/// fii: (alpha, beta) is an extreme ray of cone(K ∪ {(0,...,0,1)}).
/// Otherwise `multipliers` (over the generators of K.with_unit_last(),
/// zero on every generator parallel to the inequality) express the
/// inequality as written through the other rays.
struct FiiResult
{
    bool fii = false;
    QVector multipliers;
};

/// Requires a full-dimensional closure (HypothesisViolation) and a valid
/// inequality (InvalidInequalityError with a witness).
FiiResult is_fii(const GeneratedCone& K, const Inequality& ineq);

} // namespace closurelab
