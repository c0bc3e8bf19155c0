#pragma once

// Exact scalars and dense integer/rational matrices. Everything downstream
// (normal forms, vertex enumeration, group quotients) is built on these, so
// scalars are arbitrary precision throughout: intermediate entries in Smith
// reduction routinely overflow fixed-width integers even for small inputs.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Bad user-supplied data (maps to CLI exit code 2).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A self-consistency check failed (maps to CLI exit code 3).
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rational from a numerator/denominator pair of either sign.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw input_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);  // cpp_rational reduces and canonicalizes 0 -> 0/1
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int t = n / d;
    if (n % d != 0 && n < 0) --t;
    return t;
}

/// "p" when integral, "p/q" otherwise.
inline std::string rat_str(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/// Parses "p" or "p/q" (q > 0 after sign normalization).
inline Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw input_error("malformed rational '" + text + "'");
    }
}

inline std::string vec_str(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

inline std::string vec_str(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

/// Dense row-major matrix over an exact scalar.
template <class T>
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> e;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}
    Mat(std::size_t r, std::size_t c, std::vector<T> entries)
        : rows(r), cols(c), e(std::move(entries)) {
        if (e.size() != rows * cols) throw input_error("matrix entry count mismatch");
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    T& operator()(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e[i * cols + j]; }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && e == o.e;
    }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(e.begin() + i * cols, e.begin() + (i + 1) * cols);
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows);
        for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, const std::vector<T>& c) {
        for (std::size_t i = 0; i < rows; ++i) (*this)(i, j) = c[i];
    }

    Mat transposed() const {
        Mat t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    // row[a] += k * row[b]
    void add_row(std::size_t a, std::size_t b, const T& k) {
        for (std::size_t j = 0; j < cols; ++j) (*this)(a, j) += k * (*this)(b, j);
    }

    void add_col(std::size_t a, std::size_t b, const T& k) {
        for (std::size_t i = 0; i < rows; ++i) (*this)(i, a) += k * (*this)(i, b);
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows; ++i) (*this)(i, j) = -(*this)(i, j);
    }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols != b.rows) throw input_error("matrix product shape mismatch");
    Mat<T> p(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) p(i, j) += aik * b(k, j);
        }
    return p;
}

template <class T>
std::vector<T> operator*(const Mat<T>& a, const std::vector<T>& x) {
    if (a.cols != x.size()) throw input_error("matrix-vector shape mismatch");
    std::vector<T> y(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) y[i] += a(i, j) * x[j];
    return y;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw input_error("dot product size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw input_error("dot product size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw input_error("dot product size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatMat to_rat(const IntMat& a) {
    RatMat r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = Rat(a.e[i]);
    return r;
}

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline Int gcd_all(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

/// v / gcd(v); keeps direction. The zero vector has no primitive multiple.
inline IntVec primitive(const IntVec& v) {
    Int g = gcd_all(v);
    if (g == 0) throw input_error("zero vector has no primitive representative");
    IntVec p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
    return p;
}

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace toric
