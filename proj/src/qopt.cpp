#include "mcfc/qopt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

namespace mcfc {

namespace {

std::vector<double> weight_matrix(const PatternFunction& phi) {
    const int r = phi.parts();
    std::vector<double> w(static_cast<std::size_t>(r) * r, 0.0);
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            const int sz = phi.list_size(i, j);
            const double v = sz >= 2 ? std::log2(static_cast<double>(sz)) : 0.0;
            w[i * r + j] = v;
            w[j * r + i] = v;
        }
    }
    return w;
}

// Gaussian elimination with partial pivoting; false on a (near-)singular
// system.
bool solve_dense(std::vector<double> a, std::vector<double> b, std::vector<double>& x) {
    const int n = static_cast<int>(b.size());
    double scale = 1e-30;
    for (double v : a) scale = std::max(scale, std::abs(v));
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) pivot = row;
        }
        if (std::abs(a[pivot * n + col]) < 1e-10 * scale) return false;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a[col * n + j], a[pivot * n + j]);
            std::swap(b[col], b[pivot]);
        }
        for (int row = col + 1; row < n; ++row) {
            const double f = a[row * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a[row * n + j] -= f * a[col * n + j];
            b[row] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (int row = n - 1; row >= 0; --row) {
        double sum = b[row];
        for (int j = row + 1; j < n; ++j) sum -= a[row * n + j] * x[j];
        x[row] = sum / a[row * n + row];
    }
    return true;
}

double binomial_points(int m, int dims) {
    // C(m + dims - 1, dims - 1) as double, saturating
    double v = 1.0;
    for (int i = 1; i <= dims - 1; ++i) v *= static_cast<double>(m + i) / i;
    return v;
}

// Exhaustive maximum of q over the grid restricted to the given parts.
// Walks compositions of `resolution` over the support.
GridOptimum face_grid_best(const PatternFunction& phi, const std::vector<int>& support,
                           int resolution) {
    const int r = phi.parts();
    const int dims = static_cast<int>(support.size());
    std::vector<double> alpha(r, 0.0);
    std::vector<int> ticks(dims, 0);
    GridOptimum best;
    best.alpha = WeightVector{std::vector<double>(r, 0.0)};
    best.q_value = -1.0;

    std::function<void(int, int)> walk = [&](int pos, int rest) {
        if (pos == dims - 1) {
            ticks[pos] = rest;
            for (int d = 0; d < dims; ++d) {
                alpha[support[d]] = static_cast<double>(ticks[d]) / resolution;
            }
            WeightVector w{alpha};
            const double q = evaluate_q(phi, w);
            if (q > best.q_value) {
                best.q_value = q;
                best.alpha = std::move(w);
            }
            return;
        }
        for (int take = 0; take <= rest; ++take) {
            ticks[pos] = take;
            walk(pos + 1, rest - take);
        }
    };
    walk(0, resolution);
    return best;
}

struct Candidate {
    std::vector<double> alpha;
    AlphaOptimum::Certificate certificate;
    double kkt_residual;
};

}  // namespace

const char* certificate_name(AlphaOptimum::Certificate c) {
    switch (c) {
        case AlphaOptimum::Certificate::interior_stationary: return "interior-stationary";
        case AlphaOptimum::Certificate::vertex: return "vertex";
        case AlphaOptimum::Certificate::boundary_face: return "boundary-face";
        case AlphaOptimum::Certificate::fallback_grid: return "fallback-grid";
    }
    return "?";
}

AlphaOptimum optimize_alpha(const PatternFunction& phi) {
    const int r = phi.parts();
    if (r > 20) throw structural_error("support enumeration is exhaustive only up to r = 20");
    const auto w = weight_matrix(phi);

    AlphaOptimum best;
    best.alpha = WeightVector{[&] {
        std::vector<double> e(r, 0.0);
        e[0] = 1.0;
        return e;
    }()};
    best.q_value = 0.0;
    best.support = {0};
    best.certificate = AlphaOptimum::Certificate::vertex;

    auto consider = [&](const Candidate& cand) {
        std::vector<double> clamped = cand.alpha;
        for (double& v : clamped) {
            if (v < 0.0) v = 0.0;
        }
        const double sum = std::accumulate(clamped.begin(), clamped.end(), 0.0);
        if (sum <= 0.0) return;
        for (double& v : clamped) v /= sum;
        WeightVector alpha{clamped};
        const double q = evaluate_q(phi, alpha);
        if (q > best.q_value + kQTieTolerance) {
            std::vector<int> support;
            for (int i = 0; i < r; ++i) {
                if (clamped[i] > kSimplexTolerance) support.push_back(i);
            }
            AlphaOptimum::Certificate cert = cand.certificate;
            if (cert == AlphaOptimum::Certificate::interior_stationary &&
                static_cast<int>(support.size()) < r) {
                cert = AlphaOptimum::Certificate::boundary_face;
            }
            if (support.size() == 1) cert = AlphaOptimum::Certificate::vertex;
            best = AlphaOptimum{std::move(alpha), q, std::move(support), cert,
                                cand.kkt_residual};
        }
    };

    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << r); ++mask) {
        std::vector<int> support;
        for (int i = 0; i < r; ++i) {
            if (mask >> i & 1) support.push_back(i);
        }
        const int m = static_cast<int>(support.size());
        if (m == 1) continue;  // vertices all evaluate to q = 0, covered by init

        // bordered system: (Wx)_i - lambda = 0 on S, sum_S x = 1
        std::vector<double> a((m + 1) * (m + 1), 0.0);
        std::vector<double> b(m + 1, 0.0);
        for (int row = 0; row < m; ++row) {
            for (int col = 0; col < m; ++col) {
                a[row * (m + 1) + col] = w[support[row] * r + support[col]];
            }
            a[row * (m + 1) + m] = -1.0;
        }
        for (int col = 0; col < m; ++col) a[m * (m + 1) + col] = 1.0;
        b[m] = 1.0;

        std::vector<double> x;
        if (!solve_dense(std::move(a), std::move(b), x)) {
            // tied weights make the system singular; never skip the face
            // silently, scan it on a grid instead
            int resolution = 120;
            while (resolution > 1 && binomial_points(resolution, m) > 2e7) resolution /= 2;
            auto grid = face_grid_best(phi, support, resolution);
            consider({grid.alpha.entries, AlphaOptimum::Certificate::fallback_grid, 0.0});
            continue;
        }
        const double lambda = x[m];
        if (std::any_of(x.begin(), x.end() - 1,
                        [](double v) { return v < -kSimplexTolerance; })) {
            continue;  // stationary point outside the face
        }
        std::vector<double> alpha(r, 0.0);
        for (int d = 0; d < m; ++d) alpha[support[d]] = x[d];
        double residual = 0.0;
        for (int d = 0; d < m; ++d) {
            double row = 0.0;
            for (int j = 0; j < r; ++j) row += w[support[d] * r + j] * alpha[j];
            residual = std::max(residual, std::abs(row - lambda));
        }
        consider({std::move(alpha),
                  m == r ? AlphaOptimum::Certificate::interior_stationary
                         : AlphaOptimum::Certificate::boundary_face,
                  residual});
    }

    // coarse full-simplex grid as a safety net against linear-algebra slips
    int check = 1;
    while (check < 60 && binomial_points(check + 1, r) <= 20000) ++check;
    auto grid = grid_oracle(phi, check);
    if (grid.q_value > best.q_value + kQTieTolerance) {
        Candidate cand{grid.alpha.entries, AlphaOptimum::Certificate::fallback_grid, 0.0};
        consider(cand);
    }
    return best;
}

GridOptimum grid_oracle(const PatternFunction& phi, int resolution, std::uint64_t budget) {
    if (resolution < 1) throw structural_error("grid resolution must be >= 1");
    const int r = phi.parts();
    const double points = binomial_points(resolution, r);
    if (points > static_cast<double>(budget)) {
        throw budget_exhausted(budget, BigInt(0), "grid too fine for the budget");
    }
    std::vector<int> all(r);
    std::iota(all.begin(), all.end(), 0);
    return face_grid_best(phi, all, resolution);
}

QSolveReport solve_Q(const ColourSpec& spec, int t, int rmax, std::uint64_t budget) {
    spec.validate();
    if (t < 0 || t > 2) throw structural_error("t must be in {0,1,2}");
    if (rmax < 1) throw structural_error("rmax must be >= 1");

    QSolveReport report;
    report.spec = spec;
    report.t = t;
    report.rmax_requested = rmax;
    const auto limit = ramsey_limit(spec);
    report.rmax = rmax;
    report.cap_source = "user";
    if (limit.value - 1 < report.rmax) {
        report.rmax = static_cast<int>(limit.value - 1);
        report.cap_source = "ramsey-limit";
    }
    // canonicalisation minimises over the full part-permutation group
    if (report.rmax > 8) {
        report.rmax = 8;
        report.cap_source = "canonicalisation-limit";
    }
    if (spec.uniform()) report.lp_bound = lp_profile_bound(spec);

    std::uint64_t used = 0;
    for (int r = 1; r <= report.rmax; ++r) {
        PatternStream stream =
            enumerate_patterns(spec, r, t, budget > used ? budget - used : 0);
        used += stream.nodes;

        const int count = static_cast<int>(stream.classes.size());
        std::vector<AlphaOptimum> optima(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (int i = 0; i < count; ++i) {
            optima[i] = optimize_alpha(stream.classes[i].pattern);
        }

        // classes arrive sorted by canonical code, so first-wins ties give
        // the (smaller r, smaller code) rule
        for (int i = 0; i < count; ++i) {
            QBest candidate{r, stream.classes[i], optima[i]};
            auto it = report.per_r.find(r);
            if (it == report.per_r.end() ||
                candidate.optimum.q_value > it->second.optimum.q_value + kQTieTolerance) {
                report.per_r.insert_or_assign(it == report.per_r.end() ? report.per_r.end() : it,
                                              r, candidate);
            }
            if (!report.best ||
                candidate.optimum.q_value > report.best->optimum.q_value + kQTieTolerance) {
                report.best = std::move(candidate);
            }
        }
        if (stream.truncated) {
            report.status = QSolveReport::Status::budget_truncated;
            break;
        }
    }
    report.nodes = used;
    return report;
}

double lp_profile_bound(const ColourSpec& spec) {
    spec.validate();
    if (!spec.uniform()) {
        throw unsupported_spec_error("the profile bound is proved only for uniform k");
    }
    const int s = spec.colours();
    const int k = spec.k.front();
    const double cap = s * (1.0 - 1.0 / (k - 1));

    // vertices of {d >= 0, sum d <= 1, sum ell*d <= cap} have at most two
    // non-zero coordinates
    double best = 0.0;
    for (int ell = 1; ell <= s; ++ell) {
        const double d = std::min(1.0, cap / ell);
        best = std::max(best, d * std::log2(static_cast<double>(ell)));
    }
    for (int e1 = 1; e1 <= s; ++e1) {
        for (int e2 = e1 + 1; e2 <= s; ++e2) {
            const double d2 = (cap - e1) / (e2 - e1);
            const double d1 = 1.0 - d2;
            if (d1 < 0.0 || d2 < 0.0) continue;
            best = std::max(best, d1 * std::log2(static_cast<double>(e1)) +
                                      d2 * std::log2(static_cast<double>(e2)));
        }
    }
    return best;
}

std::optional<StabilityResult> stability_distance(const PartitionShape& shape,
                                                  const QSolveReport& report,
                                                  double eta_window) {
    const int r = static_cast<int>(shape.parts.size());
    const auto it = report.per_r.find(r);
    if (it == report.per_r.end() || !report.best) return std::nullopt;
    if (it->second.optimum.q_value < report.best->optimum.q_value - eta_window) {
        return std::nullopt;
    }

    const int n = shape.n();
    std::vector<double> target(shape.parts.size());
    for (std::size_t i = 0; i < shape.parts.size(); ++i) {
        target[i] = static_cast<double>(shape.parts[i]) / n;
    }
    std::vector<double> candidate = it->second.optimum.alpha.entries;
    // min over part permutations of the l1 distance = sorted-order distance
    std::sort(target.begin(), target.end(), std::greater<>());
    std::sort(candidate.begin(), candidate.end(), std::greater<>());
    double distance = 0.0;
    for (int i = 0; i < r; ++i) distance += std::abs(target[i] - candidate[i]);
    return StabilityResult{distance, it->second};
}

}  // namespace mcfc
