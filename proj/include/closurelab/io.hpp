#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "closurelab/covering.hpp"
#include "closurelab/polyhedron.hpp"
#include "closurelab/rational.hpp"

namespace closurelab {

/// "x1 - 2 x2 + 3/2 x3"; "0" for the zero vector.
std::string format_linear(const QVector& coefficients);

/// a.x <= b as written, e.g. "x1 + x2 <= 2".
std::string format_le(const Inequality& ineq);

/// The same half-space flipped to >= orientation: "x1 + 2 x2 >= 3".
std::string format_ge(const Inequality& ineq);

/// "(1, 0, 3/2)".
std::string format_point(const QVector& v);
std::string format_point(const LatticePoint& p);

/// Display order for covering-style facets: non-sign facets by ascending
/// >=-form coefficients then rhs, followed by x_j >= 0 in index order.
std::vector<Inequality> covering_display_order(std::vector<Inequality> facets);

/// Parses "c1 x1 + c2 x2 ... <= b" or ">= b" over variables x1..xn.
/// Coefficients are optional rational tokens ("x1", "-x2", "3/2 x1",
/// "2*x3"); repeated variables accumulate. The result is in <= form with
/// the scaling as written (a >= row is negated). Errors carry the 1-based
/// column and the given line number.
Inequality parse_inequality(std::string_view text, std::size_t n, std::size_t line = 1);

enum class InstanceKind { Covering, Cone, HRep, VRep, PointSet };

std::string to_string(InstanceKind kind);

/// A parsed instance document. Exactly the member matching `kind` is
/// populated.
///
/// Format: '#' starts a comment; blank lines are ignored. Header lines
/// "kind <covering|cone|hrep|vrep|pointset>", "n <N>" and an optional
/// "m <M>" (required for covering) precede the payload:
///   covering  one row per line: "M_i1 ... M_in >= d_i"
///   cone      one generator per line: n + 1 rational tokens (alpha, beta)
///   hrep      "a_1 ... a_n <= b" or ">= b"
///   vrep      "V a_1 ... a_n" for a point, "R a_1 ... a_n" for a ray
///   pointset  n integers per line
/// When m is given it must match the number of payload lines.
struct InstanceFile
{
    InstanceKind kind = InstanceKind::Covering;
    std::size_t n = 0;
    std::optional<CoveringInstance> covering;
    std::vector<QVector> generators;
    HPolyhedron hrep;
    VPolyhedron vrep;
    std::vector<LatticePoint> points;
};

/// Throws ParseError with line and column on malformed input and
/// ContractViolation when the data break a type invariant (for example a
/// negative covering entry).
InstanceFile parse_instance(std::string_view text);

/// Reads and parses a file; an unreadable path is a ContractViolation.
InstanceFile read_instance_file(const std::string& path);

/// Serializations accepted by parse_instance.
std::string write_instance(const CoveringInstance& Q);
std::string write_cone_instance(std::size_t n, const std::vector<QVector>& generators);

} // namespace closurelab
