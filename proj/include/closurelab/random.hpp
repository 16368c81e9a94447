#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "closurelab/cone.hpp"
#include "closurelab/covering.hpp"
#include "closurelab/lp.hpp"

namespace closurelab {

/// Seeded source with platform-independent integer draws (the standard
/// distributions are implementation-defined, the engine is not).
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return uniform(0, 1) == 1; }

  private:
    std::mt19937_64 engine_;
};

struct RandomLp
{
    QMatrix A;
    QVector b;
    QVector c;
    Sense sense = Sense::Maximize;
};

/// 1..max_n variables, 1..max_m rows, integer entries in [-bound, bound].
RandomLp random_lp(Rng& rng, std::size_t max_n = 6, std::size_t max_m = 6, long bound = 5);

/// Pointed cone in Q^{n+1}: (0, ..., 0, 1) plus up to max_generators - 1
/// inequalities strictly satisfied at a common integer point, so the
/// closure is full-dimensional.
GeneratedCone random_pointed_cone(Rng& rng, std::size_t n, std::size_t max_generators = 6);

/// Cone containing the line through some (alpha, beta) whose hyperplane
/// passes through a point of the closure; the closure is nonempty and not
/// full-dimensional.
GeneratedCone random_line_cone(Rng& rng, std::size_t n, std::size_t max_generators = 6);

/// 1..max_n columns, 1..max_m rows, integer data in [0, bound]. Rows that
/// come out zero get demand 0.
CoveringInstance random_covering(Rng& rng, std::size_t max_n, std::size_t max_m, long bound);

/// Exactly n columns and m rows.
CoveringInstance random_covering_exact(Rng& rng, std::size_t n, std::size_t m, long bound);

/// `count` points of [0, bound]^n.
std::vector<LatticePoint> random_points(Rng& rng, std::size_t n, std::size_t count, long bound);

} // namespace closurelab
