#include "closurelab/double_description.hpp"

#include <algorithm>
#include <set>

#include "closurelab/errors.hpp"

namespace closurelab {

namespace {

struct TrackedRay
{
    QVector ray;
    std::vector<bool> active;  // active[i]: constraint i holds with equality
};

bool adjacent(const TrackedRay& p, const TrackedRay& q, const std::vector<QVector>& processed,
              std::size_t target_rank)
{
    std::vector<QVector> common;
    // the constraint being processed has no flag yet
    for (std::size_t i = 0; i < p.active.size(); ++i) {
        if (p.active[i] && q.active[i]) {
            common.push_back(processed[i]);
        }
    }
    if (common.size() < target_rank) {
        return false;
    }
    return rank(std::move(common)) == target_rank;
}

} // namespace

QVector project_out(const QVector& v, const std::vector<QVector>& basis)
{
    const auto k = basis.size();
    if (k == 0) {
        return v;
    }
    // Solve G c = B v with G the Gram matrix of the basis.
    std::vector<QVector> aug(k, QVector(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            aug[i][j] = dot(basis[i], basis[j]);
        }
        aug[i][k] = dot(basis[i], v);
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && sgn(aug[p][c]) == 0) {
            ++p;
        }
        if (p == k) {
            throw InternalError("project_out: basis is linearly dependent");
        }
        std::swap(aug[c], aug[p]);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == c || sgn(aug[i][c]) == 0) {
                continue;
            }
            const Rational f = aug[i][c] / aug[c][c];
            for (std::size_t j = c; j <= k; ++j) {
                aug[i][j] -= f * aug[c][j];
            }
        }
    }
    QVector out = v;
    for (std::size_t i = 0; i < k; ++i) {
        out = out - (aug[i][k] / aug[i][i]) * basis[i];
    }
    return out;
}

ConeGenerators cone_generators(const std::vector<QVector>& constraints, std::size_t dim)
{
    for (const auto& a : constraints) {
        if (a.size() != dim) {
            throw ContractViolation("cone_generators: constraint of dimension " + std::to_string(a.size()) +
                                    " in ambient dimension " + std::to_string(dim));
        }
    }
    std::vector<QVector> lines;
    for (std::size_t j = 0; j < dim; ++j) {
        lines.push_back(QVector::unit(dim, j));
    }
    std::vector<TrackedRay> rays;
    std::vector<QVector> processed;
    processed.reserve(constraints.size());

    for (const auto& a : constraints) {
        const auto k = processed.size();
        processed.push_back(a);

        auto pivot = std::find_if(lines.begin(), lines.end(), [&](const QVector& l) { return sgn(dot(a, l)) != 0; });
        if (pivot != lines.end()) {
            QVector l = *pivot;
            lines.erase(pivot);
            Rational al = dot(a, l);
            if (sgn(al) > 0) {
                l = -l;
                al = -al;
            }
            for (auto& other : lines) {
                const Rational v = dot(a, other);
                if (sgn(v) != 0) {
                    other = primitive(other - (v / al) * l);
                }
            }
            for (auto& r : rays) {
                const Rational v = dot(a, r.ray);
                if (sgn(v) != 0) {
                    r.ray = primitive(r.ray - (v / al) * l);
                }
                r.active.push_back(true);
            }
            TrackedRay fresh{primitive(l), std::vector<bool>(k + 1, true)};
            fresh.active[k] = false;
            rays.push_back(std::move(fresh));
            continue;
        }

        std::vector<Rational> value(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(a, rays[i].ray);
            const int s = sgn(value[i]);
            if (s > 0) {
                pos.push_back(i);
            } else if (s < 0) {
                neg.push_back(i);
            }
        }
        if (pos.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i) {
                rays[i].active.push_back(sgn(value[i]) == 0);
            }
            continue;
        }
        const auto pointed_rank = dim - lines.size();
        std::vector<TrackedRay> next;
        if (pointed_rank >= 2) {
            const auto target_rank = pointed_rank - 2;
            for (auto p : pos) {
                for (auto q : neg) {
                    if (!adjacent(rays[p], rays[q], processed, target_rank)) {
                        continue;
                    }
                    // value[p] > 0 > value[q]; the combination lies on a.z = 0.
                    QVector w = primitive(value[p] * rays[q].ray - value[q] * rays[p].ray);
                    std::vector<bool> active(k + 1);
                    for (std::size_t i = 0; i < k; ++i) {
                        active[i] = rays[p].active[i] && rays[q].active[i];
                    }
                    active[k] = true;
                    next.push_back({std::move(w), std::move(active)});
                }
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const int s = sgn(value[i]);
            if (s > 0) {
                continue;
            }
            rays[i].active.push_back(s == 0);
            next.push_back(std::move(rays[i]));
        }
        rays = std::move(next);
    }

    ConeGenerators out;
    out.dim = dim;
    out.lines = row_basis(lines);
    std::set<QVector> unique;
    for (const auto& r : rays) {
        auto projected = project_out(r.ray, out.lines);
        if (!projected.is_zero()) {
            unique.insert(primitive(projected));
        }
    }
    out.rays.assign(unique.begin(), unique.end());
    return out;
}

} // namespace closurelab
