#include <doctest.h>

#include "closurelab/covering.hpp"
#include "closurelab/errors.hpp"
#include "closurelab/random.hpp"
#include "oracles.hpp"

using namespace closurelab;

namespace {

CoveringInstance instance(std::vector<QVector> rows, QVector d)
{
    std::size_t n = rows.empty() ? 0 : rows[0].size();
    return CoveringInstance(QMatrix::from_rows(std::move(rows), n), std::move(d));
}

std::vector<oracle::Point> brute(const CoveringInstance& Q, std::int64_t pad = 0)
{
    std::vector<std::vector<Rational>> M;
    for (std::size_t i = 0; i < Q.rows(); ++i) {
        auto r = Q.matrix().row(i);
        M.emplace_back(r.begin(), r.end());
    }
    std::vector<Rational> d(Q.demand().begin(), Q.demand().end());
    std::int64_t bound = 0;
    for (auto b : enumeration_bounds(Q))
        bound = std::max(bound, b);
    return oracle::minimal_points(M, d, bound + pad);
}

std::set<QVector> key_set(const HPolyhedron& P)
{
    std::set<QVector> out;
    for (const auto& f : P.inequalities())
        out.insert(f.key());
    return out;
}

Inequality ge(QVector a, Rational b)
{
    return Inequality::at_least(a, b);
}

} // namespace

TEST_CASE("instance validation names the offending entry")
{
    try {
        instance({{1, -2}}, {3});
        FAIL("expected ContractViolation");
    } catch (const ContractViolation& e) {
        CHECK(std::string(e.what()).find("M[1][2] = -2") != std::string::npos);
    }
    CHECK_THROWS_AS(instance({{1, 2}}, {-1}), ContractViolation);
    CHECK_THROWS_AS(instance({{0, 0}}, {1}), ContractViolation);
    CHECK_NOTHROW(instance({{0, 0}}, {0}));
}

TEST_CASE("minimal points examples")
{
    using P = std::vector<LatticePoint>;
    CHECK(minimal_integer_points(instance({{1, 2}}, {3})).points == P{{0, 2}, {1, 1}, {3, 0}});
    CHECK(minimal_integer_points(instance({{2, 3}}, {6})).points == P{{0, 2}, {2, 1}, {3, 0}});
    CHECK(minimal_integer_points(instance({{1}}, {0})).points == P{{0}});
    // zero column: the variable stays at 0
    CHECK(minimal_integer_points(instance({{1, 0}}, {2})).points == P{{2, 0}});
    CHECK(enumeration_bounds(instance({{1, 0}}, {2})) == std::vector<std::int64_t>{2, 0});
    CHECK(minimal_integer_points(instance({{rat(1, 2), rat(1, 3)}}, {1})).points == P{{0, 3}, {1, 2}, {2, 0}});
}

TEST_CASE("integer hull examples")
{
    CHECK(key_set(integer_hull(instance({{1, 2}}, {3})))
          == key_set(HPolyhedron(2, {ge({1, 1}, 2), ge({1, 2}, 3), ge({1, 0}, 0), ge({0, 1}, 0)})));
    CHECK(key_set(integer_hull(instance({{2, 3}}, {6})))
          == key_set(HPolyhedron(2, {ge({2, 3}, 6), ge({1, 0}, 0), ge({0, 1}, 0)})));
    CHECK(key_set(integer_hull(instance({{4, 1}, {2, 5}}, {0, 0})))
          == key_set(HPolyhedron(2, {ge({1, 0}, 0), ge({0, 1}, 0)})));
}

TEST_CASE("minimal_elements and down sets")
{
    using P = std::vector<LatticePoint>;
    CHECK(minimal_elements({{1, 2}, {0, 2}, {3, 0}}).points == P{{0, 2}, {3, 0}});
    CHECK(minimal_elements({{1, 1}}).points == P{{1, 1}});
    CHECK(minimal_elements({{1, 1}, {1, 1}}).points == P{{1, 1}});
    CHECK(down_set_contains({{1, 0}, {0, 1}}, {{1, 1}}));
    CHECK_FALSE(down_set_contains({{2, 0}}, {{1, 1}}));
    CHECK(down_set_contains({}, {{1, 1}}));
}

TEST_CASE("property: minimal_elements matches quadratic dominance")
{
    Rng rng(13);
    for (int i = 0; i < 10; ++i) {
        auto pts = random_points(rng, 3, 100, 5);
        std::vector<LatticePoint> expected;
        for (const auto& a : pts) {
            bool minimal = true;
            for (const auto& b : pts)
                if (b != a && oracle::dominated(b, a))
                    minimal = false;
            if (minimal)
                expected.push_back(a);
        }
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        CHECK(minimal_elements(pts).points == expected);
    }
}

TEST_CASE("property: down_set_contains matches box enumeration")
{
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        auto e1 = random_points(rng, 2, static_cast<std::size_t>(rng.uniform(0, 3)), 4);
        auto e2 = random_points(rng, 2, static_cast<std::size_t>(rng.uniform(0, 3)), 4);
        CHECK(down_set_contains(e1, e2) == oracle::down_set_contains(e1, e2, 2, 4));
    }
}

TEST_CASE("property: covering hulls over random instances")
{
    Rng rng(19);
    for (int i = 0; i < 40; ++i) {
        CoveringInstance Q = random_covering(rng, 3, 3, 5);
        const std::size_t n = Q.cols();
        auto mins = minimal_integer_points(Q).points;

        // matches brute force, and enlarging the box changes nothing
        CHECK(mins == brute(Q));
        CHECK(mins == brute(Q, 2));

        // antichain
        for (const auto& a : mins)
            for (const auto& b : mins)
                if (a != b)
                    CHECK_FALSE(dominated_by(a, b));

        HPolyhedron hull = integer_hull(Q);
        for (const auto& f : hull.inequalities()) {
            QVector geq = -f.key();
            for (const auto& v : geq)
                CHECK(v >= 0);
        }
        VPolyhedron V = h_to_v(hull);
        std::vector<QVector> units;
        for (std::size_t j = 0; j < n; ++j)
            units.push_back(QVector::unit(n, j));
        std::sort(units.begin(), units.end());
        CHECK(V.rays == units);

        // sandwich: hull inside the relaxation, minimal points in the hull
        CHECK(is_subset(hull, Q.relaxation()));
        for (const auto& p : mins)
            CHECK(hull.contains(to_qvector(p)));

        // hull facets against the brute-force facet oracle
        std::vector<std::vector<Rational>> pts, rays;
        for (const auto& p : mins)
            pts.emplace_back(p.begin(), p.end());
        for (const auto& u : units)
            rays.emplace_back(u.begin(), u.end());
        std::set<QVector> brute_facets;
        for (const auto& f : oracle::facets(pts, rays, n))
            brute_facets.insert(QVector(f));
        CHECK(key_set(hull) == brute_facets);
    }
}

TEST_CASE("property: every feasible box point dominates a minimal point")
{
    Rng rng(23);
    for (int i = 0; i < 20; ++i) {
        CoveringInstance Q = random_covering(rng, 2, 3, 4);
        auto mins = minimal_integer_points(Q).points;
        auto bound = enumeration_bounds(Q);
        std::int64_t top = 0;
        for (auto b : bound)
            top = std::max(top, b + 1);
        LatticePoint x(Q.cols(), 0);
        while (true) {
            if (Q.contains(to_qvector(x)))
                CHECK(std::any_of(mins.begin(), mins.end(), [&](const LatticePoint& p) { return dominated_by(p, x); }));
            std::size_t j = 0;
            while (j < x.size() && x[j] == top)
                x[j++] = 0;
            if (j == x.size())
                break;
            ++x[j];
        }
    }
}

TEST_CASE("enumeration box limit")
{
    CHECK_THROWS_AS(minimal_integer_points(instance({{1, 1, 1}}, {1000}), 1000), ContractViolation);
}
