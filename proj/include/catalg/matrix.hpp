#pragma once

// Dense matrices over exact scalars, Gaussian elimination over coefficient
// fields, and Smith normal form over ZZ with unimodular transforms.

#include <catalg/poly.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace catalg {

template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t r, size_t c, const T& fill) : rows_(r), cols_(c), a_(r * c, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    std::vector<T> col(size_t j) const {
        std::vector<T> v;
        v.reserve(rows_);
        for (size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    std::vector<T> row(size_t i) const {
        std::vector<T> v(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
        return v;
    }

  private:
    size_t rows_, cols_;
    std::vector<T> a_;
};

template <class T>
Mat<T> mat_identity(size_t n, const T& zero, const T& one) {
    Mat<T> m(n, n, zero);
    for (size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b, const T& zero) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat<T> r(a.rows(), b.cols(), zero);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            for (size_t j = 0; j < b.cols(); ++j) r(i, j) = r(i, j) + aik * b(k, j);
        }
    return r;
}

template <class T>
Mat<T> mat_add(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> r = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

template <class T>
Mat<T> mat_sub(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> r = a;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

template <class T>
Mat<T> mat_transpose(const Mat<T>& a, const T& zero) {
    Mat<T> r(a.cols(), a.rows(), zero);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

template <class T>
std::vector<T> mat_apply(const Mat<T>& a, const std::vector<T>& x, const T& zero) {
    if (a.cols() != x.size()) throw std::invalid_argument("mat_apply: shape mismatch");
    std::vector<T> y(a.rows(), zero);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) y[i] = y[i] + a(i, j) * x[j];
    return y;
}

// Kronecker product with block order (i1,i2),(j1,j2).
template <class T>
Mat<T> mat_kron(const Mat<T>& a, const Mat<T>& b, const T& zero) {
    Mat<T> r(a.rows() * b.rows(), a.cols() * b.cols(), zero);
    for (size_t i1 = 0; i1 < a.rows(); ++i1)
        for (size_t j1 = 0; j1 < a.cols(); ++j1)
            for (size_t i2 = 0; i2 < b.rows(); ++i2)
                for (size_t j2 = 0; j2 < b.cols(); ++j2)
                    r(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
    return r;
}

using MatC = Mat<Coef>;
using MatZ = Mat<Int>;

// ---------------------------------------------------------------------------
// Field linear algebra over Coef (QQ or GF(p)).

// In-place reduced row echelon form; returns pivot columns.
std::vector<size_t> rref(MatC& m);

size_t rank(MatC m);

// Solve A x = b; nullopt if inconsistent.
std::optional<std::vector<Coef>> field_solve(const MatC& a, const std::vector<Coef>& b);

// Basis of { x : A x = 0 }.
std::vector<std::vector<Coef>> field_kernel(const MatC& a);

bool field_in_colspan(const MatC& a, const std::vector<Coef>& v);

// Row space comparison (used for round-trip certificates).
bool same_row_space(const MatC& a, const MatC& b);

// Canonical coordinates on a quotient k^ambient / span(relation vectors).
// The quotient basis is indexed by the non-pivot coordinates of the row
// echelon form of the relation span.
class QuotientBasis {
  public:
    QuotientBasis(size_t ambient, unsigned long p,
                  const std::vector<std::vector<Coef>>& relation_vectors);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return free_.size(); }

    // Reduce an ambient vector modulo the relation span (canonical form).
    std::vector<Coef> reduce(std::vector<Coef> v) const;
    // Coordinates of an ambient vector in the quotient basis.
    std::vector<Coef> coords(const std::vector<Coef>& v) const;
    // Ambient representative of the i-th quotient basis vector.
    std::vector<Coef> lift(size_t i) const;

  private:
    size_t ambient_;
    unsigned long p_;
    MatC echelon_;                 // rref of relation rows
    std::vector<size_t> pivots_;   // pivot column of each echelon row
    std::vector<size_t> free_;     // non-pivot columns = quotient basis
};

// ---------------------------------------------------------------------------
// Smith normal form over ZZ.

struct SmithForm {
    MatZ u, d, v;                   // u * a * v = d
    std::vector<Int> diagonal;      // invariant factors, zeros trailing
    size_t rank = 0;                // number of nonzero diagonal entries
};

SmithForm smith_form(const MatZ& a);

// Solve A x = b over ZZ.
std::optional<std::vector<Int>> integer_solve(const MatZ& a, const std::vector<Int>& b);

// Lattice basis of { x : A x = 0 }.
std::vector<std::vector<Int>> integer_kernel(const MatZ& a);

Int mat_det(const MatZ& a);

// Invariant factors of coker(A : ZZ^cols -> ZZ^rows), i.e. of the quotient
// of ZZ^rows by the column span.  Convention: d1 | d2 | ..., 0 for free
// summands, entries equal to 1 dropped.
std::vector<Int> cokernel_invariants(const MatZ& a);

}  // namespace catalg
