#pragma once

// The reduction recipe behind a weighted polytope: assemble the projection
// matrix A with columns m_i y_i, its saturated integer kernel, the
// component group of the reduced torus, and the reduction level.
//
// Sign bookkeeping, fixed once and verified by the vertex-preimage tests:
// a point alpha of the polytope corresponds to s_i = <alpha, m_i y_i> -
// m_i eta_i >= 0, and s then satisfies kernel_basis^T s = level with
// level = kernel_basis^T (-eta_scaled). With this choice the level-set
// equations have solutions in the closed positive orthant, strictly
// positive off the active facets of each vertex.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/normal_form.hpp"
#include "toric/orbifold.hpp"
#include "toric/weighted_polytope.hpp"

namespace toric {

struct DelzantData {
    int n = 0;                          // torus dimension
    int N = 0;                          // facet count
    IntMat A;                           // n x N, columns m_i y_i
    IntMat kernel_basis;                // N x (N-n), Hermite-canonical
    FiniteAbelianGroup component_group; // pi_0 of the reduced-by group
    RatVec eta_scaled;                  // (m_1 eta_1, ..., m_N eta_N)
    RatVec level;                       // kernel_basis^T (-eta_scaled)
};

inline DelzantData build_delzant(const WeightedPolytope& w) {
    int n = w.dim();
    int nf = static_cast<int>(w.facet_count());

    DelzantData d;
    d.n = n;
    d.N = nf;
    d.A = IntMat(static_cast<std::size_t>(n), static_cast<std::size_t>(nf));
    d.eta_scaled.resize(static_cast<std::size_t>(nf));
    for (int i = 0; i < nf; ++i) {
        const HalfSpace& f = w.base.facets[static_cast<std::size_t>(i)];
        for (int r = 0; r < n; ++r)
            d.A(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) =
                f.normal[static_cast<std::size_t>(r)] * w.labels[static_cast<std::size_t>(i)];
        d.eta_scaled[static_cast<std::size_t>(i)] =
            f.offset * Rat(w.labels[static_cast<std::size_t>(i)]);
    }

    if (rank(d.A) != static_cast<std::size_t>(n))
        throw input_error("action not effective / polytope degenerate");

    d.kernel_basis = kernel_lattice(d.A);
    // pi_0(K) is the torsion of Z^n / A Z^N; full rank means the cokernel
    // is all torsion, so the Smith diagonal has no zeros to reject
    d.component_group = group_from_diagonal(smith_normal_form(d.A).d);

    d.level.resize(d.kernel_basis.cols);
    for (std::size_t r = 0; r < d.kernel_basis.cols; ++r) {
        Rat s = 0;
        for (std::size_t j = 0; j < d.kernel_basis.rows; ++j)
            s += Rat(d.kernel_basis(j, r)) * d.eta_scaled[j];
        d.level[r] = -s;
    }
    return d;
}

/// The reduced image {alpha : <alpha, m_i y_i> >= m_i eta_i} must coincide
/// with the polytope facet by facet; each inequality is the m_i-rescaling of
/// the original one. False indicates an internal bug, never a bad input.
inline bool recompute_image(const DelzantData& d, const WeightedPolytope& w) {
    if (d.N != static_cast<int>(w.facet_count()) || d.n != w.dim()) return false;
    for (int i = 0; i < d.N; ++i) {
        HalfSpace h = normalize_half_space(d.A.col(static_cast<std::size_t>(i)),
                                           d.eta_scaled[static_cast<std::size_t>(i)]);
        if (!(h == w.base.facets[static_cast<std::size_t>(i)])) return false;
    }
    return true;
}

/// Squared moduli |z_j|^2 of a point in the reduction over a vertex: zero
/// on the vertex's active facets, and the unique solution of the level-set
/// equations elsewhere. Solutions must come out strictly positive.
struct VertexPreimage {
    int vertex = -1;
    RatVec squared_moduli;  // length N, zeros exactly on the active set
};

inline VertexPreimage vertex_preimage(const DelzantData& d, const WeightedPolytope& w,
                                      int vertex) {
    const auto& active = w.base.vertex_facets[static_cast<std::size_t>(vertex)];
    if (active.size() != static_cast<std::size_t>(d.n))
        throw input_error("polytope is not simple");

    std::vector<int> free;
    for (int j = 0; j < d.N; ++j)
        if (!std::binary_search(active.begin(), active.end(), j)) free.push_back(j);
    std::size_t k = d.kernel_basis.cols;
    if (free.size() != k) throw internal_error("construction inconsistency");

    RatMat m(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            m(r, c) = Rat(d.kernel_basis(static_cast<std::size_t>(free[c]), r));
    auto sol = solve_square(m, d.level);
    if (!sol) throw internal_error("construction inconsistency");

    VertexPreimage out;
    out.vertex = vertex;
    out.squared_moduli.assign(static_cast<std::size_t>(d.N), Rat(0));
    for (std::size_t c = 0; c < k; ++c) {
        if ((*sol)[c] <= 0) throw internal_error("construction inconsistency");
        out.squared_moduli[static_cast<std::size_t>(free[c])] = (*sol)[c];
    }
    return out;
}

struct MomentSampleReport {
    int requested = 0;
    int accepted = 0;
    double tol = 0.0;
    double max_violation = 0.0;        // max over samples of eta_i - <beta, y_i>
    double max_vertex_roundtrip = 0.0; // exact vertex preimages mapped back
    bool pass = false;
};

namespace detail {

inline double to_double(const Rat& q) { return q.template convert_to<double>(); }

/// Gaussian elimination with partial pivoting; sizes here are tiny.
inline std::vector<double> solve_double(std::vector<std::vector<double>> m,
                                        std::vector<double> b) {
    std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
        std::swap(m[c], m[p]);
        std::swap(b[c], b[p]);
        for (std::size_t i = c + 1; i < n; ++i) {
            double f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * x[j];
        x[i] = s / m[i][i];
    }
    return x;
}

}  // namespace detail

/// Floating-point sanity check of the reduction: sample points of the level
/// set (through the affine parameterization by the image, rejection-sampled
/// over the bounding box), map each back to the dual space by solving the
/// full-rank moment system in least squares, and measure how far outside
/// the polytope any of them land. The PRNG is mt19937_64 seeded from the
/// argument; doubles are drawn by the usual 53-bit mantissa mapping, so
/// results are reproducible across platforms.
inline MomentSampleReport sample_moment_image(const DelzantData& d, const WeightedPolytope& w,
                                              int count, std::uint64_t seed, double tol) {
    std::size_t n = static_cast<std::size_t>(d.n), nf = static_cast<std::size_t>(d.N);
    MomentSampleReport report;
    report.requested = count;
    report.tol = tol;

    std::vector<std::vector<double>> a(n, std::vector<double>(nf));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < nf; ++j) a[r][j] = detail::to_double(Rat(d.A(r, j)));
    std::vector<double> eta(nf);
    for (std::size_t j = 0; j < nf; ++j) eta[j] = detail::to_double(d.eta_scaled[j]);

    // normal-equation matrix A A^T for the least-squares pullback
    std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0.0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t j = 0; j < nf; ++j) gram[r][c] += a[r][j] * a[c][j];

    auto pull_back = [&](const std::vector<double>& s) {
        std::vector<double> rhs(n, 0.0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t j = 0; j < nf; ++j) rhs[r] += a[r][j] * (s[j] + eta[j]);
        return detail::solve_double(gram, rhs);
    };
    auto violation = [&](const std::vector<double>& beta) {
        double worst = -1e300;
        for (std::size_t i = 0; i < nf; ++i) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                lhs += beta[j] * detail::to_double(Rat(w.base.facets[i].normal[j]));
            double v = detail::to_double(w.base.facets[i].offset) - lhs;
            if (v > worst) worst = v;
        }
        return worst;
    };

    // exact vertex preimages must map back onto the vertices
    for (std::size_t v = 0; v < w.base.vertices.size(); ++v) {
        VertexPreimage pre = vertex_preimage(d, w, static_cast<int>(v));
        std::vector<double> s(nf);
        for (std::size_t j = 0; j < nf; ++j) s[j] = detail::to_double(pre.squared_moduli[j]);
        std::vector<double> beta = pull_back(s);
        for (std::size_t j = 0; j < n; ++j) {
            double err = std::abs(beta[j] - detail::to_double(w.base.vertices[v][j]));
            if (err > report.max_vertex_roundtrip) report.max_vertex_roundtrip = err;
        }
    }

    std::vector<double> lo(n, 1e300), hi(n, -1e300);
    for (const RatVec& v : w.base.vertices)
        for (std::size_t j = 0; j < n; ++j) {
            double x = detail::to_double(v[j]);
            if (x < lo[j]) lo[j] = x;
            if (x > hi[j]) hi[j] = x;
        }

    std::mt19937_64 rng(seed);
    auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    long long attempts = 0;
    const long long max_attempts = 10000 + 200000LL * count;
    double worst = -1e300;
    while (report.accepted < count) {
        if (++attempts > max_attempts)
            throw internal_error("sampling failed: level set appears empty");
        std::vector<double> alpha(n);
        for (std::size_t j = 0; j < n; ++j) alpha[j] = lo[j] + unit() * (hi[j] - lo[j]);
        std::vector<double> s(nf);
        bool feasible = true;
        for (std::size_t i = 0; i < nf && feasible; ++i) {
            double val = -eta[i];
            for (std::size_t j = 0; j < n; ++j) val += a[j][i] * alpha[j];
            s[i] = val;
            if (val < 0) feasible = false;
        }
        if (!feasible) continue;
        ++report.accepted;
        double v = violation(pull_back(s));
        if (v > worst) worst = v;
    }
    report.max_violation = report.accepted > 0 ? worst : 0.0;
    report.pass = report.max_violation <= tol && report.max_vertex_roundtrip <= tol;
    return report;
}

}  // namespace toric
