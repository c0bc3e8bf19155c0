#pragma once

// Integer-matrix normal forms and the lattice operations built on them.
//
// Conventions, fixed so outputs are reproducible run to run:
//   - Hermite form is row-style: H = U*A, pivots positive, entries above a
//     pivot reduced into [0, pivot).
//   - Pivot selection everywhere is "nonzero entry of minimal absolute
//     value, ties broken by lowest index" (row-major for Smith form).
//   - Lattice bases (kernels, saturations) are returned in the unique
//     Hermite-canonical basis of the lattice, so they are independent of
//     the elimination path that produced them.

#include "toric/lattice.hpp"
#include "toric/linalg.hpp"

namespace toric {

struct HermiteResult {
    IntMat h;  // row-style Hermite normal form
    IntMat u;  // unimodular, u * a = h
};

inline HermiteResult hermite_normal_form(const IntMat& a) {
    IntMat h = a;
    IntMat u = IntMat::identity(a.rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols && r < h.rows; ++c) {
        // Euclidean sweep: repeatedly pull the minimal-|entry| row up to r
        // and reduce the rows below it, until the column is clear under r.
        bool have_pivot = false;
        while (true) {
            std::size_t p = h.rows;
            for (std::size_t i = r; i < h.rows; ++i) {
                if (h(i, c) == 0) continue;
                if (p == h.rows || boost::multiprecision::abs(h(i, c)) <
                                       boost::multiprecision::abs(h(p, c)))
                    p = i;
            }
            if (p == h.rows) break;  // column clear (or empty below r)
            have_pivot = true;
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            bool clear = true;
            for (std::size_t i = r + 1; i < h.rows; ++i) {
                if (h(i, c) == 0) continue;
                Int q = h(i, c) / h(r, c);  // truncated: |remainder| < |pivot|
                if (q != 0) {
                    h.add_row(i, r, -q);
                    u.add_row(i, r, -q);
                }
                if (h(i, c) != 0) clear = false;
            }
            if (clear) break;
        }
        if (!have_pivot) continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            // floor division puts the entry above the pivot into [0, pivot)
            Int n = h(i, c), d = h(r, c);
            Int q = n / d;
            if (n % d != 0 && n < 0) --q;
            if (q != 0) {
                h.add_row(i, r, -q);
                u.add_row(i, r, -q);
            }
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

struct SmithResult {
    std::vector<Int> d;  // length min(rows, cols); d1 | d2 | ... | dr, then zeros
    IntMat u;            // unimodular
    IntMat v;            // unimodular, u * a * v = diag(d)
};

inline SmithResult smith_normal_form(const IntMat& a) {
    IntMat s = a;
    IntMat u = IntMat::identity(a.rows);
    IntMat v = IntMat::identity(a.cols);
    std::size_t nd = std::min(a.rows, a.cols);

    for (std::size_t t = 0; t < nd; ++t) {
        // minimal-|entry| pivot in the trailing submatrix, row-major ties
        std::size_t pi = s.rows, pj = s.cols;
        for (std::size_t i = t; i < s.rows; ++i)
            for (std::size_t j = t; j < s.cols; ++j) {
                if (s(i, j) == 0) continue;
                if (pi == s.rows || boost::multiprecision::abs(s(i, j)) <
                                        boost::multiprecision::abs(s(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == s.rows) break;  // trailing submatrix is zero
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        while (true) {
            // clear column t below the pivot
            bool column_clear = true;
            for (std::size_t i = t + 1; i < s.rows; ++i) {
                if (s(i, t) == 0) continue;
                Int q = s(i, t) / s(t, t);
                if (q != 0) {
                    s.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                if (s(i, t) != 0) {
                    // remainder is strictly smaller: promote it to pivot
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    column_clear = false;
                }
            }
            if (!column_clear) continue;

            // clear row t right of the pivot
            bool row_clear = true;
            for (std::size_t j = t + 1; j < s.cols; ++j) {
                if (s(t, j) == 0) continue;
                Int q = s(t, j) / s(t, t);
                if (q != 0) {
                    s.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                if (s(t, j) != 0) {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    row_clear = false;
                }
            }
            if (!row_clear) continue;  // column may be dirty again

            // column ops can dirty the column check only via swaps above;
            // verify both are clear before testing divisibility
            bool clear = true;
            for (std::size_t i = t + 1; i < s.rows && clear; ++i)
                if (s(i, t) != 0) clear = false;
            for (std::size_t j = t + 1; j < s.cols && clear; ++j)
                if (s(t, j) != 0) clear = false;
            if (!clear) continue;

            // pivot must divide the whole trailing submatrix
            bool divides = true;
            for (std::size_t i = t + 1; i < s.rows && divides; ++i)
                for (std::size_t j = t + 1; j < s.cols && divides; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        s.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    std::vector<Int> d(nd);
    for (std::size_t i = 0; i < nd; ++i) d[i] = s(i, i);
    return {std::move(d), std::move(u), std::move(v)};
}

/// Hermite-canonical basis of the row lattice spanned by the rows of b.
/// Requires the rows to be linearly independent (then H has no zero rows
/// and is the unique canonical basis of the row lattice).
inline IntMat hnf_basis_of_rows(const IntMat& b) {
    return hermite_normal_form(b).h;
}

/// Columns form the Hermite-canonical Z-basis of {v in Z^cols : a v = 0}.
/// The integer kernel of an integer matrix is saturated by construction.
inline IntMat kernel_lattice(const IntMat& a) {
    SmithResult snf = smith_normal_form(a);
    std::size_t r = 0;
    for (const Int& x : snf.d)
        if (x != 0) ++r;
    std::size_t k = a.cols - r;
    IntMat basis(a.cols, k);
    for (std::size_t j = 0; j < k; ++j)
        basis.set_col(j, snf.v.col(r + j));
    if (k == 0) return basis;
    return hnf_basis_of_rows(basis.transposed()).transposed();
}

/// Columns form a Z-basis of span_Q(columns of b) intersected with Z^rows.
/// Computed as the double integer annihilator; input columns must be
/// linearly independent.
inline IntMat saturate(const IntMat& b) {
    if (rank(b) != b.cols) throw input_error("dependent generators");
    IntMat ann = kernel_lattice(b.transposed());  // rows x (rows - cols)
    if (ann.cols == 0) return IntMat::identity(b.rows);
    return kernel_lattice(ann.transposed());
}

}  // namespace toric
