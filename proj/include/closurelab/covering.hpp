#pragma once

#include <cstdint>
#include <vector>

#include "closurelab/polyhedron.hpp"
#include "closurelab/rational.hpp"

namespace closurelab {

/// {x in R^n_+ : M x >= d} with M and d entrywise nonnegative.
///
/// A row of M that is entirely zero must carry d_i = 0, which keeps the set
/// nonempty with recession cone R^n_+.
class CoveringInstance
{
  public:
    /// Throws ContractViolation naming the offending entry.
    CoveringInstance(QMatrix M, QVector d);

    std::size_t rows() const { return M_.rows(); }
    std::size_t cols() const { return M_.cols(); }
    const QMatrix& matrix() const { return M_; }
    const QVector& demand() const { return d_; }

    bool contains(const QVector& x) const;

    /// The linear relaxation as a <= system: -M x <= -d, -x <= 0.
    HPolyhedron relaxation() const;

    friend bool operator==(const CoveringInstance&, const CoveringInstance&) = default;

  private:
    QMatrix M_;
    QVector d_;
};

using LatticePoint = std::vector<std::int64_t>;

QVector to_qvector(const LatticePoint& p);

/// Antichain of lattice points, sorted lexicographically.
struct MinimalPointSet
{
    std::vector<LatticePoint> points;
};

/// Per-coordinate search bound: B_j = max over rows with M_ij > 0 of
/// ceil(d_i / M_ij), and 0 for a zero column. A feasible point with
/// x_j > B_j stays feasible after decrementing x_j, so every minimal point
/// lies in the box 0 <= x <= B.
std::vector<std::int64_t> enumeration_bounds(const CoveringInstance& Q);

/// Minimal elements of {x in N^n : M x >= d} under componentwise order.
/// Throws ContractViolation when the enumeration box exceeds `max_box`
/// points.
MinimalPointSet minimal_integer_points(const CoveringInstance& Q, std::uint64_t max_box = 50'000'000);

/// conv(Q ∩ Z^n) = conv(minimal points) + R^n_+, as an irredundant
/// canonical H-representation.
HPolyhedron integer_hull(const CoveringInstance& Q);

/// Minimal elements of a finite point set, deduplicated.
MinimalPointSet minimal_elements(std::vector<LatticePoint> points);

/// Whether the down-set generated by `inner` lies inside the down-set
/// generated by `outer`: every point of `inner` is dominated by a point of
/// `outer`.
bool down_set_contains(const std::vector<LatticePoint>& inner, const std::vector<LatticePoint>& outer);

/// a <= b componentwise.
bool dominated_by(const LatticePoint& a, const LatticePoint& b);

} // namespace closurelab
