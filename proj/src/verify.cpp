#include "closurelab/verify.hpp"

#include <algorithm>
#include <functional>

#include "closurelab/aggregation.hpp"
#include "closurelab/errors.hpp"
#include "closurelab/io.hpp"
#include "closurelab/random.hpp"

namespace closurelab {

namespace {

// Records a failure, keeping the counterexample with the shortest dump.
struct Recorder
{
    SuiteReport& report;

    void check(bool ok, const std::function<std::string()>& dump)
    {
        ++report.checks;
        if (ok)
            return;
        ++report.failures;
        std::string text = dump();
        if (report.counterexample.empty() || text.size() < report.counterexample.size())
            report.counterexample = text;
    }
};

std::string dump_lp(const RandomLp& lp)
{
    std::string out = std::string(lp.sense == Sense::Maximize ? "max " : "min ") + format_linear(lp.c) + "\n";
    for (std::size_t i = 0; i < lp.A.rows(); ++i)
        out += format_le(Inequality(lp.A.row(i), lp.b[i])) + "\n";
    return out;
}

std::string dump_cone(const GeneratedCone& K)
{
    return write_cone_instance(K.space_dim(), K.generators());
}

void farkas_suite(SuiteReport& r, Rng& rng)
{
    Recorder rec{r};
    for (int i = 0; i < 200; ++i, ++r.cases) {
        RandomLp lp = random_lp(rng);
        LpResult res = solve_lp(lp.A, lp.b, lp.c, lp.sense);
        auto problem = audit(res, lp.A, lp.b, lp.c, lp.sense);
        rec.check(!problem, [&] { return dump_lp(lp) + "audit: " + problem.value_or("") + "\n"; });
    }
}

void cone_suite(SuiteReport& r, Rng& rng)
{
    Recorder rec{r};
    for (int i = 0; i < 30; ++i, ++r.cases) {
        GeneratedCone K = random_pointed_cone(rng, 2 + static_cast<std::size_t>(i % 2));
        Theorem1Report t = check_theorem1(K);
        rec.check(t.pass, [&] { return dump_cone(K) + t.counterexample + "\n"; });
        const GeneratedCone augmented = K.with_unit_last();
        const auto& gens = augmented.generators();
        for (const auto& ray : t.extreme.rays) {
            bool found = std::any_of(gens.begin(), gens.end(), [&](const QVector& g) { return positively_parallel(g, ray); });
            rec.check(found, [&] { return dump_cone(K) + "extreme ray " + format_point(ray) + " is not a generator\n"; });
        }
    }
    for (int i = 0; i < 10; ++i, ++r.cases) {
        GeneratedCone K = random_line_cone(rng, 2 + static_cast<std::size_t>(i % 2));
        PointednessResult p = is_pointed(K);
        rec.check(!p.pointed, [&] { return dump_cone(K) + "reported pointed\n"; });
        if (!p.pointed) {
            bool both = cone_membership(K.generators(), p.line).member
                        && cone_membership(K.generators(), -p.line).member;
            rec.check(both && !p.line.is_zero(), [&] { return dump_cone(K) + "bad line " + format_point(p.line) + "\n"; });
        }
        ClosureResult c = closure_of(K);
        rec.check(!c.empty && dimension(c.polyhedron) < static_cast<int>(K.space_dim()),
                  [&] { return dump_cone(K) + "closure should be nonempty and lower-dimensional\n"; });
    }
}

std::vector<LatticePoint> brute_minimal(const CoveringInstance& Q)
{
    std::vector<std::int64_t> bound = enumeration_bounds(Q);
    std::vector<LatticePoint> feasible;
    LatticePoint x(Q.cols(), 0);
    while (true) {
        if (Q.contains(to_qvector(x)))
            feasible.push_back(x);
        std::size_t j = 0;
        while (j < x.size() && x[j] == bound[j])
            x[j++] = 0;
        if (j == x.size())
            break;
        ++x[j];
    }
    std::vector<LatticePoint> minimal;
    for (const auto& a : feasible) {
        bool dominated = std::any_of(feasible.begin(), feasible.end(),
                                     [&](const LatticePoint& b) { return b != a && dominated_by(b, a); });
        if (!dominated)
            minimal.push_back(a);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

void covering_suite(SuiteReport& r, Rng& rng)
{
    Recorder rec{r};
    for (int i = 0; i < 30; ++i, ++r.cases) {
        CoveringInstance Q = random_covering(rng, 3, 3, 5);
        auto mins = minimal_integer_points(Q).points;
        rec.check(mins == brute_minimal(Q), [&] { return write_instance(Q) + "minimal points differ from brute force\n"; });
        HPolyhedron hull = integer_hull(Q);
        for (const auto& f : hull.inequalities()) {
            QVector ge = -f.key();
            bool nonneg = std::all_of(ge.begin(), ge.end(), [](const Rational& v) { return sgn(v) >= 0; });
            rec.check(nonneg, [&] { return write_instance(Q) + "facet " + format_ge(f) + " has a negative entry\n"; });
        }
        VPolyhedron v = h_to_v(hull);
        std::vector<QVector> units;
        for (std::size_t j = 0; j < Q.cols(); ++j)
            units.push_back(QVector::unit(Q.cols(), j));
        std::sort(units.begin(), units.end());
        std::vector<QVector> rays = v.rays;
        std::sort(rays.begin(), rays.end());
        rec.check(rays == units, [&] { return write_instance(Q) + "hull rays are not the unit vectors\n"; });
    }
}

void aggregation_suite(SuiteReport& r, Rng& rng)
{
    Recorder rec{r};
    for (int i = 0; i < 5; ++i, ++r.cases) {
        CoveringInstance Q = random_covering_exact(rng, static_cast<std::size_t>(rng.uniform(1, 3)), 1, 5);
        ClosureApprox ca = closure_approx(Q, 1, 1);
        rec.check(ca.stabilized && same_point_set(ca.polyhedron, integer_hull(Q)),
                  [&] { return write_instance(Q) + "single-row closure differs from the integer hull\n"; });
    }
    for (int i = 0; i < 3; ++i, ++r.cases) {
        CoveringInstance Q = random_covering_exact(rng, 2, 2, 3);
        ClosureApprox ca = closure_approx(Q, 1, 2);
        // the closure sits between the integer hull and the relaxation
        rec.check(is_subset(integer_hull(Q), ca.polyhedron) && is_subset(ca.polyhedron, Q.relaxation()),
                  [&] { return write_instance(Q) + "closure is not sandwiched\n"; });
    }
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"farkas", "cone", "covering", "aggregation"};
    return names;
}

std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed)
{
    std::vector<std::string> wanted;
    if (name == "all")
        wanted = suite_names();
    else if (std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end())
        wanted = {name};
    else
        throw ContractViolation("unknown suite '" + name + "'");

    std::vector<SuiteReport> reports;
    for (const auto& s : wanted) {
        SuiteReport r;
        r.name = s;
        r.seed = seed;
        Rng rng(seed);
        if (s == "farkas")
            farkas_suite(r, rng);
        else if (s == "cone")
            cone_suite(r, rng);
        else if (s == "covering")
            covering_suite(r, rng);
        else
            aggregation_suite(r, rng);
        reports.push_back(std::move(r));
    }
    return reports;
}

} // namespace closurelab
