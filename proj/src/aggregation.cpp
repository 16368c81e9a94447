#include "closurelab/aggregation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

#include "closurelab/errors.hpp"

namespace closurelab {

namespace {

// All vectors of N^m with coordinate sum s, lexicographically descending.
void compositions(std::size_t m, long s, std::vector<long>& cur, std::vector<std::vector<long>>& out)
{
    if (cur.size() + 1 == m) {
        cur.push_back(s);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long first = s; first >= 0; --first) {
        cur.push_back(first);
        compositions(m, s - first, cur, out);
        cur.pop_back();
    }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r)
{
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > UINT64_MAX)
            return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(acc);
}

AggregatedHull build_hull(const CoveringInstance& Q, const AggregationSample& s)
{
    CoveringInstance agg = aggregate(Q, s);
    HPolyhedron hull = integer_hull(agg);
    return AggregatedHull{s, std::move(agg), std::move(hull)};
}

// Hulls for every sample, computed on worker threads and stored by index so
// the result does not depend on scheduling.
std::vector<AggregatedHull> build_hulls(const CoveringInstance& Q, const std::vector<AggregationSample>& samples)
{
    std::vector<std::optional<AggregatedHull>> slots(samples.size());
    std::vector<std::exception_ptr> errors(samples.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < samples.size(); i = next++) {
            try {
                slots[i] = build_hull(Q, samples[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::size_t count = std::min(worker_threads(), samples.size());
    if (count <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < count; ++t)
            pool.emplace_back(work);
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<AggregatedHull> hulls;
    hulls.reserve(slots.size());
    for (auto& s : slots)
        hulls.push_back(std::move(*s));
    return hulls;
}

HPolyhedron intersect_hulls(std::size_t dim, const std::vector<const AggregatedHull*>& hulls)
{
    std::vector<HPolyhedron> parts;
    parts.reserve(hulls.size());
    for (const auto* h : hulls)
        parts.push_back(h->hull);
    return intersect(dim, parts);
}

} // namespace

std::string to_string(const AggregationSample& s)
{
    std::string out = "{";
    for (std::size_t j = 0; j < s.multipliers.size(); ++j) {
        if (j > 0)
            out += ", ";
        out += "(" + to_string(s.multipliers[j], ", ") + ")";
    }
    return out + "}";
}

std::vector<QVector> multiplier_rows(std::size_t m, std::size_t density)
{
    std::vector<QVector> rows;
    if (m == 0)
        return rows;
    for (std::size_t s = 1; s <= density; ++s) {
        std::vector<std::vector<long>> comps;
        std::vector<long> cur;
        compositions(m, static_cast<long>(s), cur, comps);
        for (const auto& c : comps) {
            long g = 0;
            for (long v : c)
                g = std::gcd(g, v);
            if (g != 1)
                continue;
            QVector row(m);
            for (std::size_t i = 0; i < m; ++i)
                row[i] = Rational(c[i]);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::uint64_t sample_count(std::size_t m, std::size_t k, std::size_t density)
{
    std::size_t r = multiplier_rows(m, density).size();
    return binomial(r, std::min(k, r));
}

std::vector<AggregationSample> sample_multipliers(std::size_t m, std::size_t k, std::size_t density)
{
    std::vector<QVector> rows = multiplier_rows(m, density);
    std::size_t size = std::min(k, rows.size());
    std::vector<AggregationSample> samples;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        AggregationSample s;
        for (std::size_t i : idx)
            s.multipliers.push_back(rows[i]);
        samples.push_back(std::move(s));
        // next combination in lexicographic order
        std::size_t pos = size;
        while (pos > 0 && idx[pos - 1] == rows.size() - size + pos - 1)
            --pos;
        if (pos == 0)
            break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return samples;
}

CoveringInstance aggregate(const CoveringInstance& Q, const AggregationSample& sample)
{
    const std::size_t n = Q.cols();
    std::vector<QVector> rows;
    QVector demand(sample.multipliers.size());
    for (std::size_t j = 0; j < sample.multipliers.size(); ++j) {
        const QVector& lambda = sample.multipliers[j];
        if (lambda.size() != Q.rows())
            throw ContractViolation("multiplier row has " + std::to_string(lambda.size()) + " entries, expected "
                                    + std::to_string(Q.rows()));
        for (const auto& v : lambda)
            if (sgn(v) < 0)
                throw ContractViolation("multiplier entries must be nonnegative, got " + to_string(v));
        QVector row = Q.matrix().left_multiply(lambda);
        QVector full = row.appended(dot(lambda, Q.demand()));
        if (!full.is_zero())
            full = primitive(full);
        rows.push_back(full.head(n));
        demand[j] = full[n];
    }
    return CoveringInstance(QMatrix::from_rows(rows, n), demand);
}

HPolyhedron intersect(std::size_t dim, const std::vector<HPolyhedron>& parts)
{
    std::vector<Inequality> all;
    for (const auto& p : parts) {
        if (p.dim() != dim)
            throw ContractViolation("cannot intersect polyhedra of different dimension");
        all.insert(all.end(), p.inequalities().begin(), p.inequalities().end());
    }
    RedundancyResult r = remove_redundant(HPolyhedron(dim, unique_canonical(all)));
    if (!r.consistent)
        return HPolyhedron(dim, {Inequality(QVector(dim), Rational(-1))});
    return r.polyhedron.canonical();
}

ClosureApprox closure_approx(const CoveringInstance& Q, std::size_t k, std::size_t density)
{
    if (k == 0)
        throw ContractViolation("k must be at least 1");
    if (density == 0)
        throw ContractViolation("density must be at least 1");
    std::vector<AggregationSample> base = sample_multipliers(Q.rows(), k, density);
    std::vector<AggregationSample> finer = sample_multipliers(Q.rows(), k, 2 * density);

    // One hull per distinct sample across both grids.
    std::vector<AggregationSample> all = base;
    std::map<std::vector<QVector>, std::size_t> index;
    for (std::size_t i = 0; i < base.size(); ++i)
        index.emplace(base[i].multipliers, i);
    for (const auto& s : finer)
        if (index.emplace(s.multipliers, all.size()).second)
            all.push_back(s);
    std::vector<AggregatedHull> hulls = build_hulls(Q, all);

    std::vector<const AggregatedHull*> coarse, fine;
    for (std::size_t i = 0; i < base.size(); ++i)
        coarse.push_back(&hulls[i]);
    for (const auto& s : finer)
        fine.push_back(&hulls[index.at(s.multipliers)]);

    ClosureApprox out;
    out.k = k;
    out.density = density;
    out.polyhedron = intersect_hulls(Q.cols(), coarse);
    out.stabilized = same_point_set(out.polyhedron, intersect_hulls(Q.cols(), fine));
    hulls.erase(hulls.begin() + static_cast<std::ptrdiff_t>(base.size()), hulls.end());
    out.hulls = std::move(hulls);
    return out;
}

std::string to_string(CutKind kind)
{
    switch (kind) {
    case CutKind::Sign:
        return "SIGN";
    case CutKind::HullFacet:
        return "HULL_FACET";
    case CutKind::Unattributed:
        return "UNATTRIBUTED";
    }
    return "UNATTRIBUTED";
}

std::vector<CutLabel> classify_cuts(const ClosureApprox& ca)
{
    std::vector<CutLabel> labels;
    for (const auto& f : ca.polyhedron.inequalities()) {
        CutLabel label{f, CutKind::Unattributed, 0};
        if (f.is_sign_constraint()) {
            label.kind = CutKind::Sign;
        } else {
            for (std::size_t h = 0; h < ca.hulls.size(); ++h) {
                const auto& ineqs = ca.hulls[h].hull.inequalities();
                bool listed = std::any_of(ineqs.begin(), ineqs.end(), [&](const Inequality& g) { return g == f; });
                if (listed && is_facet_defining(ca.hulls[h].hull, f)) {
                    label.kind = CutKind::HullFacet;
                    label.hull_index = h;
                    break;
                }
            }
        }
        labels.push_back(std::move(label));
    }
    return labels;
}

CoveringInstance project_instance(const CoveringInstance& Q, std::size_t t)
{
    if (t > Q.cols())
        throw ContractViolation("projection onto " + std::to_string(t) + " of " + std::to_string(Q.cols())
                                + " coordinates");
    std::vector<QVector> rows;
    QVector demand(Q.rows());
    for (std::size_t i = 0; i < Q.rows(); ++i) {
        QVector row = Q.matrix().row(i);
        bool touches_dropped = false;
        for (std::size_t j = t; j < Q.cols(); ++j)
            if (sgn(row[j]) > 0)
                touches_dropped = true;
        if (touches_dropped) {
            rows.push_back(QVector(t));
        } else {
            rows.push_back(row.head(t));
            demand[i] = Q.demand()[i];
        }
    }
    return CoveringInstance(QMatrix::from_rows(rows, t), demand);
}

ProjectionReport check_projection_lemma(const CoveringInstance& Q, std::size_t t, std::size_t k)
{
    if (Q.rows() != 1)
        throw ContractViolation("projection check needs a single-row instance, got "
                                + std::to_string(Q.rows()) + " rows");
    if (t < 1 || t >= Q.cols())
        throw ContractViolation("projection target t must satisfy 1 <= t < n");
    ClosureApprox full = closure_approx(Q, k, 1);
    std::vector<std::size_t> keep(t);
    std::iota(keep.begin(), keep.end(), 0);
    HPolyhedron lhs = fourier_motzkin_project(full.polyhedron, keep).canonical();
    CoveringInstance Qp = project_instance(Q, t);
    HPolyhedron rhs = closure_approx(Qp, k, 1).polyhedron;
    bool pass = same_point_set(lhs, rhs);
    return ProjectionReport{pass, std::move(lhs), std::move(rhs), std::move(Qp)};
}

std::size_t worker_threads()
{
    if (const char* env = std::getenv("CLOSURELAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace closurelab
