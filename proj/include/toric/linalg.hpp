#pragma once

// Exact rational elimination: solving, inversion, rank. Pivoting is by first
// nonzero entry; with exact arithmetic there is no numerical pivoting concern.

#include <optional>

#include "toric/lattice.hpp"

namespace toric {

/// Rank over the rationals (destroys its copy of the input).
inline std::size_t rank(RatMat a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t p = r;
        while (p < a.rows && a(p, c) == 0) ++p;
        if (p == a.rows) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < a.rows; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const IntMat& a) { return rank(to_rat(a)); }

/// Unique solution of a square system, or nullopt when singular.
inline std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    if (a.rows != a.cols || b.size() != a.rows) throw input_error("solve_square shape mismatch");
    std::size_t n = a.rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return std::nullopt;
        a.swap_rows(c, p);
        std::swap(b[c], b[p]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            Rat f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            b[i] -= f * b[c];
        }
    }
    RatVec x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

/// Solution of a (possibly overdetermined) full-column-rank system A x = b.
/// nullopt when inconsistent; throws when A is column-rank-deficient.
inline std::optional<RatVec> solve_full_rank(const RatMat& a, const RatVec& b) {
    if (b.size() != a.rows) throw input_error("solve_full_rank shape mismatch");
    RatMat m(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
        m(i, a.cols) = b[i];
    }
    // forward elimination to echelon form
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < a.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m(p, c) == 0) ++p;
        if (p == m.rows) continue;
        m.swap_rows(r, p);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(r, c);
            for (std::size_t j = c; j <= a.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() != a.cols) throw input_error("solve_full_rank: rank-deficient matrix");
    for (std::size_t i = r; i < m.rows; ++i)
        if (m(i, a.cols) != 0) return std::nullopt;  // inconsistent
    RatVec x(a.cols);
    for (std::size_t i = r; i-- > 0;) {
        std::size_t c = pivot_col[i];
        Rat s = m(i, a.cols);
        for (std::size_t j = c + 1; j < a.cols; ++j) s -= m(i, j) * x[j];
        x[c] = s / m(i, c);
    }
    return x;
}

/// Inverse of a square rational matrix, or nullopt when singular.
inline std::optional<RatMat> inverse(const RatMat& a) {
    if (a.rows != a.cols) throw input_error("inverse of non-square matrix");
    std::size_t n = a.rows;
    RatMat m = a;
    RatMat inv = RatMat::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return std::nullopt;
        m.swap_rows(c, p);
        inv.swap_rows(c, p);
        Rat d = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= d;
            inv(c, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Exact determinant of an integer matrix (Bareiss, fraction-free).
inline Int det(const IntMat& a) {
    if (a.rows != a.cols) throw input_error("determinant of non-square matrix");
    std::size_t n = a.rows;
    if (n == 0) return 1;
    IntMat m = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

inline bool is_integral(const Rat& q) { return denominator(q) == 1; }

inline bool is_integral(const RatVec& v) {
    for (const Rat& q : v)
        if (!is_integral(q)) return false;
    return true;
}

inline std::optional<IntMat> to_int(const RatMat& a) {
    IntMat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (!is_integral(a.e[i])) return std::nullopt;
        r.e[i] = numerator(a.e[i]);
    }
    return r;
}

inline std::optional<IntVec> to_int(const RatVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integral(v[i])) return std::nullopt;
        r[i] = numerator(v[i]);
    }
    return r;
}

/// Integer inverse of a unimodular matrix; throws when |det| != 1.
inline IntMat inverse_unimodular(const IntMat& u) {
    auto inv = inverse(to_rat(u));
    if (!inv) throw input_error("matrix is singular");
    auto ii = to_int(*inv);
    if (!ii) throw input_error("matrix is not unimodular");
    return *ii;
}

}  // namespace toric
