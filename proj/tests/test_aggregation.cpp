#include <doctest.h>

#include <cstdlib>

#include "closurelab/aggregation.hpp"
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

Inequality ge(QVector a, Rational b)
{
    return Inequality::at_least(a, b);
}

std::set<QVector> key_set(const HPolyhedron& P)
{
    std::set<QVector> out;
    for (const auto& f : P.inequalities())
        out.insert(f.key());
    return out;
}

HPolyhedron from_keys(std::size_t n, const std::set<std::vector<Rational>>& keys)
{
    HPolyhedron P(n);
    for (const auto& k : keys)
        P.add(Inequality::from_vector(QVector(k)));
    return P;
}

CoveringInstance two_row()
{
    return instance({{1, 2}, {2, 1}}, {3, 3});
}

} // namespace

TEST_CASE("sample grids")
{
    using S = std::vector<AggregationSample>;
    CHECK(sample_multipliers(2, 1, 1) == S{{{{1, 0}}}, {{{0, 1}}}});
    CHECK(sample_multipliers(2, 1, 2) == S{{{{1, 0}}}, {{{0, 1}}}, {{{1, 1}}}});
    CHECK(sample_multipliers(2, 2, 1) == S{{{{1, 0}, {0, 1}}}});
    CHECK(sample_count(2, 1, 8) == sample_multipliers(2, 1, 8).size());
    CHECK(sample_count(3, 2, 3) == sample_multipliers(3, 2, 3).size());
    CHECK(sample_multipliers(1, 3, 5) == S{{{{1}}}});
    // rows with coordinate sum <= D up to scaling are exactly the primitive ones
    auto rows = multiplier_rows(2, 8);
    CHECK(rows.size() == 23);
    for (const auto& r : rows)
        CHECK(primitive(r) == r);
}

TEST_CASE("aggregate examples")
{
    CoveringInstance Q = two_row();
    CHECK(aggregate(Q, {{{1, 0}}}) == instance({{1, 2}}, {3}));
    CHECK(aggregate(Q, {{{1, 1}}}) == instance({{1, 1}}, {2}));
    CHECK(aggregate(Q, {{{rat(1, 2), rat(1, 2)}}}) == instance({{1, 1}}, {2}));
    CHECK(aggregate(Q, {{{0, 0}}}) == instance({{0, 0}}, {0}));
    CHECK_THROWS_AS(aggregate(Q, {{{1, 0, 0}}}), ContractViolation);
    CHECK_THROWS_AS(aggregate(Q, {{{-1, 1}}}), ContractViolation);
}

TEST_CASE("single-row closure is the integer hull")
{
    CoveringInstance Q = instance({{1, 2}}, {3});
    for (std::size_t k : {1, 2, 3}) {
        for (std::size_t D : {1, 3}) {
            ClosureApprox ca = closure_approx(Q, k, D);
            CHECK(ca.stabilized);
            CHECK(key_set(ca.polyhedron)
                  == key_set(HPolyhedron(2, {ge({1, 1}, 2), ge({1, 2}, 3), ge({1, 0}, 0), ge({0, 1}, 0)})));
        }
    }
    CHECK_THROWS_AS(closure_approx(Q, 0, 1), ContractViolation);
    CHECK_THROWS_AS(closure_approx(Q, 1, 0), ContractViolation);
}

TEST_CASE("classification")
{
    ClosureApprox ca = closure_approx(instance({{1, 2}}, {3}), 1, 4);
    for (const auto& label : classify_cuts(ca)) {
        if (label.facet.is_sign_constraint()) {
            CHECK(label.kind == CutKind::Sign);
        } else {
            CHECK(label.kind == CutKind::HullFacet);
            CHECK(ca.hulls[label.hull_index].sample.multipliers == std::vector<QVector>{{1}});
        }
    }
    ClosureApprox zero = closure_approx(instance({{1, 2}, {3, 0}}, {0, 0}), 1, 2);
    auto labels = classify_cuts(zero);
    CHECK(labels.size() == 2);
    for (const auto& label : labels)
        CHECK(label.kind == CutKind::Sign);
}

TEST_CASE("two-row instance against the exhaustive grid")
{
    CoveringInstance Q = two_row();
    ClosureApprox ca = closure_approx(Q, 1, 8);
    auto grid = oracle::grid_closure({{1, 2}, {2, 1}}, {3, 3}, 8);
    CHECK(same_point_set(ca.polyhedron, from_keys(2, grid)));
    CHECK(key_set(ca.polyhedron) == key_set(integer_hull(Q)));
    for (const auto& label : classify_cuts(ca))
        CHECK(label.kind != CutKind::Unattributed);
}

TEST_CASE("projection check examples")
{
    auto r1 = check_projection_lemma(instance({{1, 2}}, {3}), 1, 1);
    CHECK(r1.pass);
    CHECK(key_set(r1.closure_of_projection) == key_set(HPolyhedron(1, {ge({1}, 0)})));

    auto r2 = check_projection_lemma(instance({{2, 0}}, {3}), 1, 1);
    CHECK(r2.pass);
    CHECK(key_set(r2.projected_closure) == key_set(HPolyhedron(1, {ge({1}, 2)})));

    auto r3 = check_projection_lemma(instance({{1, 1, 1}}, {2}), 2, 2);
    CHECK(r3.pass);
    CHECK(key_set(r3.projected_closure) == key_set(HPolyhedron(2, {ge({1, 0}, 0), ge({0, 1}, 0)})));

    CHECK_THROWS_AS(check_projection_lemma(two_row(), 1, 1), ContractViolation);
    CHECK_THROWS_AS(check_projection_lemma(instance({{1, 2}}, {3}), 2, 1), ContractViolation);
    CHECK(project_instance(instance({{1, 2}, {1, 0}}, {3, 1}), 1) == instance({{0}, {1}}, {0, 1}));
}

TEST_CASE("property: sandwich, monotonicity in D and k")
{
    Rng rng(29);
    for (int i = 0; i < 6; ++i) {
        CoveringInstance Q = random_covering_exact(rng, 2, 2, 4);
        ClosureApprox c1 = closure_approx(Q, 1, 2);
        ClosureApprox c2 = closure_approx(Q, 1, 4);
        ClosureApprox k2 = closure_approx(Q, 2, 2);
        HPolyhedron hull = integer_hull(Q);
        CHECK(is_subset(hull, c1.polyhedron));
        for (const auto& h : c1.hulls)
            CHECK(is_subset(c1.polyhedron, h.hull));
        CHECK(is_subset(c2.polyhedron, c1.polyhedron));
        CHECK(is_subset(k2.polyhedron, c1.polyhedron));
        // with k = m the identity sample is present, so the closure is the hull
        CHECK(same_point_set(k2.polyhedron, hull));
    }
}

TEST_CASE("property: attribution on stabilized runs")
{
    Rng rng(31);
    for (int i = 0; i < 6; ++i) {
        CoveringInstance Q = random_covering_exact(rng, 3, 2, 3);
        ClosureApprox ca = closure_approx(Q, 1, 2);
        if (!ca.stabilized)
            continue;
        for (const auto& label : classify_cuts(ca)) {
            CHECK(label.kind != CutKind::Unattributed);
            if (label.kind == CutKind::HullFacet)
                CHECK(is_facet_defining(ca.hulls[label.hull_index].hull, label.facet));
        }
    }
}

TEST_CASE("thread count does not change the result")
{
    CoveringInstance Q = instance({{1, 3}, {4, 1}}, {4, 5});
    setenv("CLOSURELAB_THREADS", "1", 1);
    ClosureApprox serial = closure_approx(Q, 1, 4);
    setenv("CLOSURELAB_THREADS", "3", 1);
    ClosureApprox parallel = closure_approx(Q, 1, 4);
    unsetenv("CLOSURELAB_THREADS");
    CHECK(serial.polyhedron.inequalities() == parallel.polyhedron.inequalities());
    CHECK(serial.stabilized == parallel.stabilized);
}
