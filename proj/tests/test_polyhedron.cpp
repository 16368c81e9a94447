#include <doctest.h>

#include "closurelab/errors.hpp"
#include "closurelab/polyhedron.hpp"
#include "closurelab/random.hpp"
#include "oracles.hpp"

using namespace closurelab;

namespace {

Inequality le(QVector a, Rational b)
{
    return Inequality(std::move(a), std::move(b));
}

Inequality ge(QVector a, Rational b)
{
    return Inequality::at_least(a, b);
}

HPolyhedron unit_square()
{
    return HPolyhedron(2, {le({1, 0}, 1), le({0, 1}, 1), le({-1, 0}, 0), le({0, -1}, 0)});
}

HPolyhedron covering_hull()
{
    return HPolyhedron(2, {ge({1, 1}, 2), ge({1, 2}, 3), ge({1, 0}, 0), ge({0, 1}, 0)});
}

std::vector<QVector> sorted(std::vector<QVector> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::set<QVector> key_set(const HPolyhedron& P)
{
    std::set<QVector> out;
    for (const auto& f : P.inequalities())
        out.insert(f.key());
    return out;
}

std::set<QVector> oracle_vertices(const HPolyhedron& P)
{
    std::vector<oracle::Row> rows;
    for (const auto& f : P.inequalities())
        rows.push_back({std::vector<Rational>(f.normal().begin(), f.normal().end()), f.rhs()});
    std::set<QVector> out;
    for (const auto& v : oracle::vertices(rows, P.dim()))
        out.insert(QVector(v));
    return out;
}

HPolyhedron random_polytope(Rng& rng, std::size_t n, std::size_t extra)
{
    // box [-3, 3]^n plus random cuts through a neighbourhood of the origin
    HPolyhedron P(n);
    for (std::size_t j = 0; j < n; ++j) {
        P.add(le(QVector::unit(n, j), 3));
        P.add(le(-QVector::unit(n, j), 3));
    }
    for (std::size_t i = 0; i < extra; ++i) {
        QVector a(n);
        while (a.is_zero())
            for (auto& x : a)
                x = rng.uniform(-3, 3);
        P.add(le(a, rng.uniform(1, 4)));
    }
    return P;
}

} // namespace

TEST_CASE("inequality canonical form and identity")
{
    Inequality a = le({2, 4}, 6);
    Inequality b = le({rat(1, 3), rat(2, 3)}, 1);
    CHECK(a == b);
    CHECK(a.key() == QVector{1, 2, 3});
    CHECK(a.normal() == QVector{2, 4}); // scaling kept as written
    CHECK(ge({1, 0}, 0).is_sign_constraint());
    CHECK_FALSE(le({-2, 0}, 1).is_sign_constraint());
    CHECK(le({0, 0}, 1).is_trivial());
    CHECK(le({0, 0}, -1).is_contradiction());
}

TEST_CASE("h_to_v examples")
{
    auto sq = h_to_v(unit_square());
    CHECK(sq.vertices == sorted({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(sq.rays.empty());

    auto orthant = h_to_v(HPolyhedron(2, {ge({1, 0}, 0), ge({0, 1}, 0)}));
    CHECK(orthant.vertices == std::vector<QVector>{{0, 0}});
    CHECK(orthant.rays == sorted({{1, 0}, {0, 1}}));

    auto hull = h_to_v(covering_hull());
    CHECK(hull.vertices == sorted({{0, 2}, {1, 1}, {3, 0}}));
    CHECK(hull.rays == sorted({{1, 0}, {0, 1}}));
    std::set<QVector> from_oracle = oracle_vertices(covering_hull());
    CHECK(std::set<QVector>(hull.vertices.begin(), hull.vertices.end()) == from_oracle);

    CHECK(h_to_v(HPolyhedron(1, {le({1}, -1), le({-1}, 0)})).empty());
}

TEST_CASE("v_to_h examples")
{
    VPolyhedron V{2, {{0, 2}, {1, 1}, {3, 0}}, {{1, 0}, {0, 1}}};
    CHECK(key_set(v_to_h(V)) == key_set(covering_hull()));

    VPolyhedron corner{2, {{0, 0}}, {{1, 0}, {0, 1}}};
    CHECK(key_set(v_to_h(corner)) == key_set(HPolyhedron(2, {ge({1, 0}, 0), ge({0, 1}, 0)})));

    VPolyhedron segment{2, {{0, 0}, {1, 0}}, {}};
    HPolyhedron expected(2, {le({0, 1}, 0), le({0, -1}, 0), le({1, 0}, 1), le({-1, 0}, 0)});
    CHECK(key_set(v_to_h(segment)) == key_set(expected));

    CHECK_THROWS_AS(v_to_h(VPolyhedron{2, {}, {}}), ContractViolation);
}

TEST_CASE("remove_redundant examples")
{
    auto r1 = remove_redundant(HPolyhedron(2, {le({1, 0}, 1), le({0, 1}, 1), le({1, 1}, 3)}));
    CHECK(r1.consistent);
    CHECK(key_set(r1.polyhedron) == key_set(HPolyhedron(2, {le({1, 0}, 1), le({0, 1}, 1)})));

    auto r2 = remove_redundant(HPolyhedron(1, {le({1}, 1), le({1}, 2)}));
    CHECK(key_set(r2.polyhedron) == key_set(HPolyhedron(1, {le({1}, 1)})));

    auto r3 = remove_redundant(HPolyhedron(2, {le({-1, 2}, 7), le({1, 2}, 7), le({0, 1}, rat(7, 2))}));
    CHECK(key_set(r3.polyhedron) == key_set(HPolyhedron(2, {le({-1, 2}, 7), le({1, 2}, 7)})));

    auto bad = remove_redundant(HPolyhedron(1, {le({1}, -1), le({-1}, 0)}));
    CHECK_FALSE(bad.consistent);
}

TEST_CASE("check_implication examples")
{
    auto yes = check_implication({le({1, 2}, 4), le({1, 0}, 2)}, le({1, 1}, 3));
    REQUIRE(yes.implied);
    CHECK(yes.multipliers == QVector{rat(1, 2), rat(1, 2)});
    CHECK(yes.slack == 0);

    auto no = check_implication({le({1}, 1)}, le({1}, 0));
    REQUIRE_FALSE(no.implied);
    CHECK(no.witness[0] > 0);
    CHECK(no.witness[0] <= 1);

    auto slack = check_implication({le({-1, 0}, 0), le({0, -1}, 0)}, le({-1, -1}, 5));
    REQUIRE(slack.implied);
    CHECK(slack.multipliers == QVector{1, 1});
    CHECK(slack.slack == 5);

    CHECK_THROWS_AS(check_implication({le({1}, -1), le({-1}, 0)}, le({1}, 0)), InconsistentSystemError);
}

TEST_CASE("dimension examples")
{
    CHECK(dimension(unit_square()) == 2);
    CHECK(dimension(HPolyhedron(2, {le({1, 0}, 0), le({-1, 0}, 0)})) == 1);
    CHECK(dimension(HPolyhedron(1, {le({1}, -1), le({-1}, 0)})) == -1);
    CHECK(dimension(HPolyhedron(3, {le({1, 1, 1}, 1), le({-1, -1, -1}, -1), le({1, 0, 0}, 0), le({-1, 0, 0}, 0)})) == 1);
    CHECK(dimension(HPolyhedron(2)) == 2);
}

TEST_CASE("is_facet_defining examples")
{
    CHECK(is_facet_defining(unit_square(), le({1, 0}, 1)));
    CHECK_FALSE(is_facet_defining(unit_square(), le({1, 1}, 2)));
    CHECK(is_facet_defining(covering_hull(), ge({1, 2}, 3)));
    CHECK_THROWS_AS(is_facet_defining(unit_square(), le({1, 0}, rat(1, 2))), InvalidInequalityError);
    CHECK_THROWS_AS(is_facet_defining(HPolyhedron(2, {le({1, 0}, 0), le({-1, 0}, 0)}), le({0, 1}, 1)),
                    HypothesisViolation);
}

TEST_CASE("fourier_motzkin_project examples")
{
    auto p1 = fourier_motzkin_project(HPolyhedron(2, {le({1, 1}, 2), le({1, -1}, 0)}), {0});
    CHECK(key_set(p1) == key_set(HPolyhedron(1, {le({1}, 1)})));

    auto p2 = fourier_motzkin_project(HPolyhedron(2, {ge({1, 1}, 2), ge({1, 0}, 0), ge({0, 1}, 0)}), {0});
    CHECK(key_set(p2) == key_set(HPolyhedron(1, {ge({1}, 0)})));

    auto p3 = fourier_motzkin_project(covering_hull(), {0, 1});
    CHECK(same_point_set(p3, covering_hull()));
    CHECK(key_set(p3) == key_set(covering_hull()));

    auto empty = fourier_motzkin_project(HPolyhedron(2, {le({1, 0}, -1), le({-1, 0}, 0)}), {1});
    CHECK(is_empty(empty));
}

TEST_CASE("property: h_to_v and v_to_h round-trip against the brute-force oracles")
{
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        std::size_t n = 2 + static_cast<std::size_t>(i % 2);
        HPolyhedron P = random_polytope(rng, n, static_cast<std::size_t>(rng.uniform(1, 4)));
        VPolyhedron V = h_to_v(P);
        CHECK(std::set<QVector>(V.vertices.begin(), V.vertices.end()) == oracle_vertices(P));
        HPolyhedron back = v_to_h(V);
        CHECK(same_point_set(back, P));
        for (const auto& v : V.vertices)
            CHECK(back.contains(v));

        std::vector<std::vector<Rational>> pts;
        for (const auto& v : V.vertices)
            pts.emplace_back(v.begin(), v.end());
        std::set<QVector> brute;
        for (const auto& f : oracle::facets(pts, {}, n))
            brute.insert(QVector(f));
        CHECK(key_set(back) == brute);
    }
}

TEST_CASE("property: redundancy removal keeps the set and leaves only facets")
{
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        std::size_t n = 2 + static_cast<std::size_t>(i % 3);
        HPolyhedron P = random_polytope(rng, n, static_cast<std::size_t>(rng.uniform(0, 8 - 2 * static_cast<long>(n) + 2)));
        RedundancyResult r = remove_redundant(P);
        REQUIRE(r.consistent);
        CHECK(same_point_set(r.polyhedron, P));
        const auto& kept = r.polyhedron.inequalities();
        for (std::size_t k = 0; k < kept.size(); ++k) {
            std::vector<Inequality> rest = kept;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            CHECK_FALSE(check_implication(rest, kept[k]).implied);
            CHECK(is_facet_defining(P, kept[k]));
        }
        // every facet-defining inequality of P survives
        for (const auto& f : P.inequalities())
            if (is_facet_defining(P, f))
                CHECK(std::find(kept.begin(), kept.end(), f) != kept.end());
    }
}

TEST_CASE("property: projection contains exactly the shadows of P on a grid")
{
    Rng rng(5);
    for (int i = 0; i < 8; ++i) {
        HPolyhedron P = random_polytope(rng, 3, 3);
        HPolyhedron proj = fourier_motzkin_project(P, {0, 2});
        for (long a = -8; a <= 8; ++a) {
            for (long b = -8; b <= 8; ++b) {
                QVector y{rat(a, 2), rat(b, 2)};
                // y has a lift iff {x2 : (y1, x2, y3) in P} is nonempty
                HPolyhedron fibre(1);
                for (const auto& f : P.inequalities())
                    fibre.add(le({f.normal()[1]}, f.rhs() - f.normal()[0] * y[0] - f.normal()[2] * y[1]));
                CHECK(proj.contains(y) == !is_empty(fibre));
            }
        }
    }
}

TEST_CASE("dimension-checked construction")
{
    HPolyhedron P(2);
    CHECK_THROWS_AS(P.add(le({1}, 1)), ContractViolation);
}
