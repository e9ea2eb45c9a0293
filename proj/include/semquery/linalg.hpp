#pragma once

// Minimal dense row-major matrix/vector arithmetic for the desk-scale
// models. Everything is double precision; shapes are checked.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "semquery/common.hpp"

namespace semq {

using Vec = std::vector<double>;

struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    Vec row(std::size_t r) const { return Vec(data.begin() + r * cols, data.begin() + (r + 1) * cols); }

    void set_row(std::size_t r, const Vec& v) {
        for (std::size_t c = 0; c < cols; ++c) (*this)(r, c) = v[c];
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

inline void check_shape(bool ok, const std::string& what) {
    if (!ok) throw NumericError("shape mismatch: " + what);
}

inline Mat matmul(const Mat& a, const Mat& b) {
    check_shape(a.cols == b.rows, "matmul");
    Mat out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

inline Mat transpose(const Mat& a) {
    Mat out(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out(j, i) = a(i, j);
    return out;
}

// y = A x
inline Vec matvec(const Mat& a, const Vec& x) {
    check_shape(a.cols == x.size(), "matvec");
    Vec y(a.rows, 0.0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols; ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

// y = A^T x
inline Vec matvec_t(const Mat& a, const Vec& x) {
    check_shape(a.rows == x.size(), "matvec_t");
    Vec y(a.cols, 0.0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double xi = x[i];
        if (xi == 0.0) continue;
        for (std::size_t j = 0; j < a.cols; ++j) y[j] += a(i, j) * xi;
    }
    return y;
}

inline double dot(const Vec& a, const Vec& b) {
    check_shape(a.size() == b.size(), "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& v) { return std::sqrt(dot(v, v)); }

inline Vec add(Vec a, const Vec& b) {
    check_shape(a.size() == b.size(), "add");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec sub(Vec a, const Vec& b) {
    check_shape(a.size() == b.size(), "sub");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec hadamard(Vec a, const Vec& b) {
    check_shape(a.size() == b.size(), "hadamard");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return a;
}

inline Vec scale(Vec a, double c) {
    for (double& v : a) v *= c;
    return a;
}

inline void axpy(Vec& y, double c, const Vec& x) {
    check_shape(y.size() == x.size(), "axpy");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

// G += c * u v^T
inline void add_outer(Mat& g, double c, const Vec& u, const Vec& v) {
    check_shape(g.rows == u.size() && g.cols == v.size(), "add_outer");
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) g(i, j) += c * u[i] * v[j];
}

inline bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline bool all_finite(const Mat& m) { return all_finite(m.data); }

inline Mat uniform_matrix(std::size_t rows, std::size_t cols, double a, double b, Rng& rng) {
    Mat m(rows, cols);
    for (double& v : m.data) v = rng.uniform(a, b);
    return m;
}

}  // namespace semq
