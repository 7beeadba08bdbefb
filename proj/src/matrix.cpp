#include <catalg/matrix.hpp>

#include <algorithm>

namespace catalg {

std::vector<size_t> rref(MatC& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Coef inv = m(r, c).inverse();
        for (size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Coef f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(MatC m) { return rref(m).size(); }

std::optional<std::vector<Coef>> field_solve(const MatC& a, const std::vector<Coef>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("field_solve: shape mismatch");
    unsigned long p = 0;
    if (a.rows() * a.cols() > 0) p = a(0, 0).characteristic();
    else if (!b.empty()) p = b[0].characteristic();
    MatC aug(a.rows(), a.cols() + 1, Coef(0, p));
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<size_t> piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    std::vector<Coef> x(a.cols(), Coef(0, p));
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, a.cols());
    return x;
}

std::vector<std::vector<Coef>> field_kernel(const MatC& a) {
    unsigned long p = a.rows() * a.cols() > 0 ? a(0, 0).characteristic() : 0;
    MatC m = a;
    std::vector<size_t> piv = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : piv) is_pivot[c] = true;
    std::vector<std::vector<Coef>> out;
    for (size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<Coef> x(a.cols(), Coef(0, p));
        x[c] = Coef(1, p);
        for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = -m(k, c);
        out.push_back(std::move(x));
    }
    return out;
}

bool field_in_colspan(const MatC& a, const std::vector<Coef>& v) {
    return field_solve(a, v).has_value();
}

bool same_row_space(const MatC& a, const MatC& b) {
    if (a.cols() != b.cols()) return false;
    MatC ra = a, rb = b;
    rref(ra);
    rref(rb);
    auto nonzero_rows = [](const MatC& m) {
        std::vector<std::vector<Coef>> rows;
        for (size_t i = 0; i < m.rows(); ++i) {
            bool nz = false;
            for (size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero()) { nz = true; break; }
            if (nz) rows.push_back(m.row(i));
        }
        return rows;
    };
    return nonzero_rows(ra) == nonzero_rows(rb);
}

QuotientBasis::QuotientBasis(size_t ambient, unsigned long p,
                             const std::vector<std::vector<Coef>>& relation_vectors)
    : ambient_(ambient), p_(p), echelon_(relation_vectors.size(), ambient, Coef(0, p)) {
    for (size_t i = 0; i < relation_vectors.size(); ++i)
        for (size_t j = 0; j < ambient; ++j) echelon_(i, j) = relation_vectors[i][j];
    pivots_ = rref(echelon_);
    std::vector<bool> is_pivot(ambient, false);
    for (size_t c : pivots_) is_pivot[c] = true;
    for (size_t c = 0; c < ambient; ++c)
        if (!is_pivot[c]) free_.push_back(c);
}

std::vector<Coef> QuotientBasis::reduce(std::vector<Coef> v) const {
    for (size_t k = 0; k < pivots_.size(); ++k) {
        Coef f = v[pivots_[k]];
        if (f.is_zero()) continue;
        for (size_t j = 0; j < ambient_; ++j) v[j] = v[j] - f * echelon_(k, j);
    }
    return v;
}

std::vector<Coef> QuotientBasis::coords(const std::vector<Coef>& v) const {
    std::vector<Coef> red = reduce(v);
    std::vector<Coef> out;
    out.reserve(free_.size());
    for (size_t c : free_) out.push_back(red[c]);
    return out;
}

std::vector<Coef> QuotientBasis::lift(size_t i) const {
    std::vector<Coef> v(ambient_, Coef(0, p_));
    v[free_[i]] = Coef(1, p_);
    return v;
}

// ---------------------------------------------------------------------------

namespace {

void row_op(MatZ& d, MatZ& u, size_t dst, size_t src, const Int& f) {
    for (size_t j = 0; j < d.cols(); ++j) d(dst, j) -= f * d(src, j);
    for (size_t j = 0; j < u.cols(); ++j) u(dst, j) -= f * u(src, j);
}

void col_op(MatZ& d, MatZ& v, size_t dst, size_t src, const Int& f) {
    for (size_t i = 0; i < d.rows(); ++i) d(i, dst) -= f * d(i, src);
    for (size_t i = 0; i < v.rows(); ++i) v(i, dst) -= f * v(i, src);
}

void row_swap(MatZ& d, MatZ& u, size_t a, size_t b) {
    for (size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
    for (size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
}

void col_swap(MatZ& d, MatZ& v, size_t a, size_t b) {
    for (size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
    for (size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
}

void row_negate(MatZ& d, MatZ& u, size_t a) {
    for (size_t j = 0; j < d.cols(); ++j) d(a, j) = -d(a, j);
    for (size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
}

}  // namespace

SmithForm smith_form(const MatZ& a) {
    SmithForm s{a, a, a, {}, 0};
    size_t r = a.rows(), c = a.cols();
    s.u = mat_identity<Int>(r, 0, 1);
    s.v = mat_identity<Int>(c, 0, 1);
    s.d = a;
    MatZ& d = s.d;

    size_t t = 0;
    while (t < r && t < c) {
        // Locate a pivot of minimal absolute value in the trailing block.
        size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (size_t i = t; i < r; ++i)
            for (size_t j = t; j < c; ++j) {
                if (d(i, j) == 0) continue;
                Int v = abs(d(i, j));
                if (!found || v < best) { best = v, pi = i, pj = j, found = true; }
            }
        if (!found) break;
        if (pi != t) row_swap(d, s.u, pi, t);
        if (pj != t) col_swap(d, s.v, pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < r; ++i) {
                if (d(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                row_op(d, s.u, i, t, q);
                if (d(i, t) != 0) {  // remainder became the smaller pivot
                    row_swap(d, s.u, i, t);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < c; ++j) {
                if (d(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                col_op(d, s.v, j, t, q);
                if (d(t, j) != 0) {
                    col_swap(d, s.v, j, t);
                    clean = false;
                }
            }
        }

        // Pivot must divide the rest of the block.
        bool restart = false;
        for (size_t i = t + 1; i < r && !restart; ++i)
            for (size_t j = t + 1; j < c && !restart; ++j)
                if (d(i, j) % d(t, t) != 0) {
                    row_op(d, s.u, t, i, Int(-1));  // add row i to row t
                    restart = true;
                }
        if (restart) continue;

        if (d(t, t) < 0) row_negate(d, s.u, t);
        ++t;
    }

    s.rank = t;
    s.diagonal.assign(std::min(r, c), 0);
    for (size_t i = 0; i < t; ++i) s.diagonal[i] = d(i, i);
    return s;
}

std::optional<std::vector<Int>> integer_solve(const MatZ& a, const std::vector<Int>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("integer_solve: shape mismatch");
    SmithForm s = smith_form(a);
    std::vector<Int> ub = mat_apply<Int>(s.u, b, 0);
    std::vector<Int> z(a.cols(), 0);
    for (size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.d(i, i) != 0) return std::nullopt;
            if (i < a.cols()) z[i] = ub[i] / s.d(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_apply<Int>(s.v, z, 0);
}

std::vector<std::vector<Int>> integer_kernel(const MatZ& a) {
    SmithForm s = smith_form(a);
    std::vector<std::vector<Int>> out;
    for (size_t j = s.rank; j < a.cols(); ++j) out.push_back(s.v.col(j));
    return out;
}

Int mat_det(const MatZ& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("mat_det: square matrix required");
    // Fraction-free via Smith form: determinant up to sign is the product of
    // the invariant factors; recover the sign from the transforms.
    SmithForm s = smith_form(a);
    if (s.rank < a.rows()) return 0;
    Int p = 1;
    for (size_t i = 0; i < a.rows(); ++i) p *= s.d(i, i);
    // det(U) det(A) det(V) = det(D), det(U), det(V) in {1,-1}.
    auto sign_det = [](const MatZ& m) {
        // Unimodular; compute determinant by integer fraction-free elimination.
        MatZ w = m;
        size_t n = w.rows();
        Int det = 1;
        for (size_t t = 0; t < n; ++t) {
            size_t p2 = t;
            while (p2 < n && w(p2, t) == 0) ++p2;
            if (p2 == n) return Int(0);
            if (p2 != t) {
                for (size_t j = 0; j < n; ++j) std::swap(w(p2, j), w(t, j));
                det = -det;
            }
            for (size_t i = t + 1; i < n; ++i) {
                while (w(i, t) != 0) {
                    Int q = w(t, t) / w(i, t);
                    for (size_t j = t; j < n; ++j) w(t, j) -= q * w(i, j);
                    for (size_t j = t; j < n; ++j) std::swap(w(t, j), w(i, j));
                    det = -det;
                }
            }
            det *= w(t, t);
        }
        return det;
    };
    return p / (sign_det(s.u) * sign_det(s.v));
}

std::vector<Int> cokernel_invariants(const MatZ& a) {
    SmithForm s = smith_form(a);
    std::vector<Int> inv;
    for (size_t i = 0; i < s.rank; ++i)
        if (s.d(i, i) != 1) inv.push_back(s.d(i, i));
    for (size_t i = s.rank; i < a.rows(); ++i) inv.push_back(0);
    return inv;
}

}  // namespace catalg
