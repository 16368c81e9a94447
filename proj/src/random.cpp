#include "closurelab/random.hpp"

#include <limits>

namespace closurelab {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi)
{
    return static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

QVector random_nonzero(Rng& rng, std::size_t n, long bound)
{
    QVector v(n);
    while (v.is_zero())
        for (std::size_t j = 0; j < n; ++j)
            v[j] = Rational(rng.uniform(-bound, bound));
    return v;
}

} // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0)
        return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw;
    do
        draw = engine_();
    while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % range);
}

RandomLp random_lp(Rng& rng, std::size_t max_n, std::size_t max_m, long bound)
{
    std::size_t n = pick(rng, 1, max_n);
    std::size_t m = pick(rng, 1, max_m);
    QMatrix A(m, n);
    QVector b(m), c(n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A.at(i, j) = Rational(rng.uniform(-bound, bound));
    for (std::size_t i = 0; i < m; ++i)
        b[i] = Rational(rng.uniform(-bound, bound));
    for (std::size_t j = 0; j < n; ++j)
        c[j] = Rational(rng.uniform(-bound, bound));
    Sense sense = rng.coin() ? Sense::Maximize : Sense::Minimize;
    return RandomLp{std::move(A), std::move(b), std::move(c), sense};
}

GeneratedCone random_pointed_cone(Rng& rng, std::size_t n, std::size_t max_generators)
{
    QVector p(n);
    for (std::size_t j = 0; j < n; ++j)
        p[j] = Rational(rng.uniform(-2, 2));
    std::vector<QVector> gens{QVector::unit(n + 1, n)};
    std::size_t extra = pick(rng, 1, max_generators - 1);
    for (std::size_t g = 0; g < extra; ++g) {
        QVector alpha = random_nonzero(rng, n, 3);
        Rational beta = dot(alpha, p) + Rational(rng.uniform(1, 3));
        gens.push_back(alpha.appended(beta));
    }
    return GeneratedCone(n, gens);
}

GeneratedCone random_line_cone(Rng& rng, std::size_t n, std::size_t max_generators)
{
    QVector p(n);
    for (std::size_t j = 0; j < n; ++j)
        p[j] = Rational(rng.uniform(-2, 2));
    QVector alpha = random_nonzero(rng, n, 3);
    QVector line = alpha.appended(dot(alpha, p));
    std::vector<QVector> gens{line, -line};
    std::size_t extra = pick(rng, 0, max_generators - 2);
    for (std::size_t g = 0; g < extra; ++g) {
        QVector a = random_nonzero(rng, n, 3);
        gens.push_back(a.appended(dot(a, p) + Rational(rng.uniform(0, 3))));
    }
    if (rng.coin())
        gens.push_back(QVector::unit(n + 1, n));
    return GeneratedCone(n, gens);
}

CoveringInstance random_covering_exact(Rng& rng, std::size_t n, std::size_t m, long bound)
{
    QMatrix M(m, n);
    QVector d(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < n; ++j) {
            M.at(i, j) = Rational(rng.uniform(0, bound));
            zero = zero && sgn(M.at(i, j)) == 0;
        }
        d[i] = zero ? Rational(0) : Rational(rng.uniform(0, bound));
    }
    return CoveringInstance(std::move(M), std::move(d));
}

CoveringInstance random_covering(Rng& rng, std::size_t max_n, std::size_t max_m, long bound)
{
    std::size_t n = pick(rng, 1, max_n);
    std::size_t m = pick(rng, 1, max_m);
    return random_covering_exact(rng, n, m, bound);
}

std::vector<LatticePoint> random_points(Rng& rng, std::size_t n, std::size_t count, long bound)
{
    std::vector<LatticePoint> pts(count, LatticePoint(n));
    for (auto& p : pts)
        for (auto& x : p)
            x = rng.uniform(0, bound);
    return pts;
}

} // namespace closurelab
