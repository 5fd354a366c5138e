#pragma once
/**
 * @file matrix.hpp
 * @brief Vectors and matrices over octonions with explicit product-order
 *        semantics, plus the Hermitian parameter forms and their
 *        trace/sigma/determinant invariants.
 *
 * Every matrix-vector and matrix-matrix summand multiplies the left
 * factor's entry times the right factor's entry, with no re-association.
 */

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "octo/octonion.hpp"

namespace octo {

struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class OctVector {
  public:
    OctVector() = default;
    explicit OctVector(std::size_t n) : e_(n) {}
    OctVector(std::initializer_list<Octonion> init) : e_(init) {}

    std::size_t size() const { return e_.size(); }
    const Octonion& operator[](std::size_t i) const { return e_[i]; }
    Octonion& operator[](std::size_t i) { return e_[i]; }

    OctVector operator+(const OctVector& o) const {
        require_same(o);
        OctVector r(size());
        for (std::size_t i = 0; i < size(); ++i) r[i] = e_[i] + o[i];
        return r;
    }
    OctVector operator-(const OctVector& o) const {
        require_same(o);
        OctVector r(size());
        for (std::size_t i = 0; i < size(); ++i) r[i] = e_[i] - o[i];
        return r;
    }
    OctVector operator*(double s) const {
        OctVector r(size());
        for (std::size_t i = 0; i < size(); ++i) r[i] = e_[i] * s;
        return r;
    }
    OctVector operator/(double s) const { return *this * (1.0 / s); }

  private:
    void require_same(const OctVector& o) const {
        if (o.size() != size()) throw ShapeMismatch("OctVector: length mismatch");
    }
    std::vector<Octonion> e_;
};

/// Row-major dense octonion matrix.
class OctMatrix {
  public:
    OctMatrix() = default;
    OctMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    OctMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Octonion> init)
        : rows_(rows), cols_(cols), e_(init) {
        if (e_.size() != rows * cols) throw ShapeMismatch("OctMatrix: initializer size");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Octonion& operator()(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }
    Octonion& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    static OctMatrix identity(std::size_t n) {
        OctMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Octonion(1.0);
        return m;
    }

    OctMatrix operator+(const OctMatrix& o) const {
        require_same(o);
        OctMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    OctMatrix operator-(const OctMatrix& o) const {
        require_same(o);
        OctMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }
    OctMatrix operator*(double s) const {
        OctMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
        return r;
    }

  private:
    void require_same(const OctMatrix& o) const {
        if (o.rows_ != rows_ || o.cols_ != cols_)
            throw ShapeMismatch("OctMatrix: shape mismatch");
    }
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Octonion> e_;
};

/// Conjugate transpose.
inline OctMatrix dagger(const OctMatrix& m) {
    OctMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = conj(m(i, j));
    return r;
}

/// Component i = sum_j A_ij v_j, matrix entry on the left of each summand.
inline OctVector matvec(const OctMatrix& a, const OctVector& v) {
    if (a.cols() != v.size()) throw ShapeMismatch("matvec: shapes");
    OctVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Octonion s;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

inline OctVector vec_scale_right(const OctVector& v, const Octonion& lambda) {
    OctVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * lambda;
    return r;
}

inline OctVector vec_scale_left(const Octonion& lambda, const OctVector& v) {
    OctVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = lambda * v[i];
    return r;
}

/// v^dagger w = sum_i conj(v_i) w_i.
inline Octonion inner(const OctVector& v, const OctVector& w) {
    if (v.size() != w.size()) throw ShapeMismatch("inner: lengths");
    Octonion s;
    for (std::size_t i = 0; i < v.size(); ++i) s += conj(v[i]) * w[i];
    return s;
}

/// (v w^dagger)_{ij} = v_i conj(w_j).
inline OctMatrix outer(const OctVector& v, const OctVector& w) {
    if (v.size() != w.size()) throw ShapeMismatch("outer: lengths");
    OctMatrix r(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) r(i, j) = v[i] * conj(w[j]);
    return r;
}

inline OctMatrix matmul(const OctMatrix& a, const OctMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeMismatch("matmul: shapes");
    OctMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t kk = 0; kk < b.cols(); ++kk) {
            Octonion s;
            for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * b(j, kk);
            r(i, kk) = s;
        }
    return r;
}

inline Octonion trace(const OctMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("trace: square required");
    Octonion s;
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
    return s;
}

inline double frobenius_norm(const OctMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += norm_sq(a(i, j));
    return std::sqrt(s);
}

inline double vector_norm(const OctVector& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += norm_sq(v[i]);
    return std::sqrt(s);
}

inline bool is_hermitian(const OctMatrix& a, double tol = 1e-12) {
    if (a.rows() != a.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (norm(a(i, j) - conj(a(j, i))) > tol) return false;
    return true;
}

/// A - (tr A) I.
inline OctMatrix tilde(const OctMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeMismatch("tilde: square required");
    OctMatrix r = a;
    const Octonion t = trace(a);
    for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) = r(i, i) - t;
    return r;
}

/// 2x2 Hermitian matrix [[p, a], [conj(a), m]] with p, m real.
struct Hermitian2Params {
    double p = 0.0;
    double m = 0.0;
    Octonion a;

    OctMatrix to_matrix() const {
        return OctMatrix(2, 2, {Octonion(p), a, conj(a), Octonion(m)});
    }

    static Hermitian2Params from_matrix(const OctMatrix& mat, double tol = 1e-12) {
        if (mat.rows() != 2 || mat.cols() != 2)
            throw ShapeMismatch("Hermitian2Params: 2x2 required");
        if (!is_hermitian(mat, tol))
            throw std::invalid_argument("Hermitian2Params: matrix not Hermitian");
        return {re(mat(0, 0)), re(mat(1, 1)), mat(0, 1)};
    }
};

/// 3x3 Hermitian matrix [[p, a, conj(b)], [conj(a), m, c], [b, conj(c), n]].
struct Hermitian3Params {
    double p = 0.0;
    double m = 0.0;
    double n = 0.0;
    Octonion a, b, c;

    OctMatrix to_matrix() const {
        return OctMatrix(3, 3,
                         {Octonion(p), a, conj(b),
                          conj(a), Octonion(m), c,
                          b, conj(c), Octonion(n)});
    }

    static Hermitian3Params from_matrix(const OctMatrix& mat, double tol = 1e-12) {
        if (mat.rows() != 3 || mat.cols() != 3)
            throw ShapeMismatch("Hermitian3Params: 3x3 required");
        if (!is_hermitian(mat, tol))
            throw std::invalid_argument("Hermitian3Params: matrix not Hermitian");
        return {re(mat(0, 0)), re(mat(1, 1)), re(mat(2, 2)),
                mat(0, 1), mat(2, 0), mat(1, 2)};
    }
};

inline double det2(const Hermitian2Params& h) { return h.p * h.m - norm_sq(h.a); }

struct Invariants3 {
    double tr;
    double sigma;
    double det;
};

/// tr, sigma, det of the 3x3 Hermitian form; both sigma and det are real.
inline Invariants3 invariants3(const Hermitian3Params& h) {
    Invariants3 r{};
    r.tr = h.p + h.m + h.n;
    r.sigma = h.p * h.m + h.p * h.n + h.m * h.n - norm_sq(h.a) - norm_sq(h.b) -
              norm_sq(h.c);
    const Octonion bac = h.b * (h.a * h.c);
    r.det = h.p * h.m * h.n + 2.0 * re(bac) - h.n * norm_sq(h.a) -
            h.m * norm_sq(h.b) - h.p * norm_sq(h.c);
    return r;
}

}  // namespace octo
