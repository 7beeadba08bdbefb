#include <catalg/freesym.hpp>

#include <algorithm>
#include <numeric>

namespace catalg {

bool FinCat::validate() const {
    if (identity.size() != static_cast<size_t>(nobjects)) return false;
    for (int x = 0; x < nobjects; ++x) {
        int e = identity[x];
        if (mor[e].first != x || mor[e].second != x) return false;
    }
    size_t nm = mor.size();
    if (comp.size() != nm) return false;
    for (size_t g = 0; g < nm; ++g)
        for (size_t f = 0; f < nm; ++f) {
            bool composable = mor[f].second == mor[g].first;
            int gf = comp[g][f];
            if (composable != (gf >= 0)) return false;
            if (composable &&
                (mor[gf].first != mor[f].first || mor[gf].second != mor[g].second))
                return false;
        }
    // identity laws
    for (size_t f = 0; f < nm; ++f) {
        if (comp[identity[mor[f].second]][f] != static_cast<int>(f)) return false;
        if (comp[f][identity[mor[f].first]] != static_cast<int>(f)) return false;
    }
    // associativity on composable triples
    for (size_t h = 0; h < nm; ++h)
        for (size_t g = 0; g < nm; ++g) {
            if (mor[g].second != mor[h].first) continue;
            for (size_t f = 0; f < nm; ++f) {
                if (mor[f].second != mor[g].first) continue;
                if (comp[h][comp[g][f]] != comp[comp[h][g]][f]) return false;
            }
        }
    return true;
}

FinCat FinCat::one_object() {
    FinCat c;
    c.nobjects = 1;
    c.mor = {{0, 0}};
    c.identity = {0};
    c.comp = {{0}};
    return c;
}

FinCat FinCat::two_objects_one_arrow() {
    FinCat c;
    c.nobjects = 2;
    c.mor = {{0, 0}, {1, 1}, {0, 1}};  // id0, id1, arrow
    c.identity = {0, 1};
    c.comp = {{0, -1, -1}, {-1, 1, 2}, {2, -1, -1}};
    return c;
}

bool smc_valid(const FinCat& c, const SmcMorphism& f) {
    size_t n = f.src.size();
    if (f.dst.size() != n || f.perm.size() != n || f.comps.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (size_t i = 0; i < n; ++i) {
        if (f.perm[i] < 0 || f.perm[i] >= static_cast<int>(n) || hit[f.perm[i]]) return false;
        hit[f.perm[i]] = true;
        const auto& [s, d] = c.mor[f.comps[i]];
        if (s != f.src[i] || d != f.dst[f.perm[i]]) return false;
    }
    return true;
}

SmcMorphism smc_identity(const FinCat& c, const std::vector<int>& objects) {
    SmcMorphism m;
    m.src = m.dst = objects;
    m.perm.resize(objects.size());
    std::iota(m.perm.begin(), m.perm.end(), 0);
    for (int x : objects) m.comps.push_back(c.identity[x]);
    return m;
}

SmcMorphism smc_compose(const FinCat& c, const SmcMorphism& g, const SmcMorphism& f) {
    if (f.dst != g.src) throw std::invalid_argument("smc_compose: type mismatch");
    size_t n = f.src.size();
    SmcMorphism out;
    out.src = f.src;
    out.dst = g.dst;
    out.perm.resize(n);
    out.comps.resize(n);
    for (size_t i = 0; i < n; ++i) {
        out.perm[i] = g.perm[f.perm[i]];
        out.comps[i] = c.comp[g.comps[f.perm[i]]][f.comps[i]];
        if (out.comps[i] < 0) throw std::invalid_argument("smc_compose: non-composable");
    }
    return out;
}

SmcMorphism smc_tensor(const FinCat& c, const SmcMorphism& f, const SmcMorphism& g) {
    (void)c;
    SmcMorphism out;
    out.src = f.src;
    out.src.insert(out.src.end(), g.src.begin(), g.src.end());
    out.dst = f.dst;
    out.dst.insert(out.dst.end(), g.dst.begin(), g.dst.end());
    int n = static_cast<int>(f.src.size());
    out.perm = f.perm;
    for (int p : g.perm) out.perm.push_back(p + n);
    out.comps = f.comps;
    out.comps.insert(out.comps.end(), g.comps.begin(), g.comps.end());
    return out;
}

bool smc_equal(const SmcMorphism& a, const SmcMorphism& b) {
    return a.src == b.src && a.dst == b.dst && a.perm == b.perm && a.comps == b.comps;
}

std::vector<std::vector<int>> perm_groupoid_hom(int n, int m) {
    std::vector<std::vector<int>> out;
    if (n != m) return out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<int> perm_compose(const std::vector<int>& tau, const std::vector<int>& sigma) {
    std::vector<int> out(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i) out[i] = tau[sigma[i]];
    return out;
}

bool functor_valid(const FinCat& c, const MatrixFunctor& f) {
    if (f.dims.size() != static_cast<size_t>(c.nobjects) || f.images.size() != c.mor.size())
        return false;
    for (size_t m = 0; m < c.mor.size(); ++m) {
        const auto& [s, d] = c.mor[m];
        if (f.images[m].rows() != static_cast<size_t>(f.dims[d]) ||
            f.images[m].cols() != static_cast<size_t>(f.dims[s]))
            return false;
    }
    for (int x = 0; x < c.nobjects; ++x) {
        MatC id = mat_identity<Coef>(f.dims[x], Coef(0, 0), Coef(1, 0));
        if (!(f.images[c.identity[x]] == id)) return false;
    }
    for (size_t g = 0; g < c.mor.size(); ++g)
        for (size_t ff = 0; ff < c.mor.size(); ++ff) {
            if (c.comp[g][ff] < 0) continue;
            MatC lhs = f.images[c.comp[g][ff]];
            MatC rhs = mat_mul(f.images[g], f.images[ff], Coef(0, 0));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

MatC factor_permutation_matrix(const std::vector<int>& perm, const std::vector<int>& dims) {
    // Source basis: tuples (a_0..a_{n-1}) with a_i < dims[i], lexicographic.
    // Target slot perm[i] holds the factor of dimension dims[i].
    size_t n = perm.size();
    std::vector<int> tdims(n);
    for (size_t i = 0; i < n; ++i) tdims[perm[i]] = dims[i];
    size_t total = 1;
    for (int d : dims) total *= static_cast<size_t>(d);
    MatC p(total, total, Coef(0, 0));
    std::vector<int> a(n, 0);
    for (size_t col = 0; col < total; ++col) {
        // target tuple: b[perm[i]] = a[i]
        std::vector<int> b(n, 0);
        for (size_t i = 0; i < n; ++i) b[perm[i]] = a[i];
        size_t row = 0;
        for (size_t j = 0; j < n; ++j) row = row * tdims[j] + b[j];
        p(row, col) = Coef(1, 0);
        // next source tuple
        for (size_t i = n; i-- > 0;) {
            if (++a[i] < dims[i]) break;
            a[i] = 0;
        }
    }
    return p;
}

MatC extend_functor(const FinCat& c, const MatrixFunctor& f, const SmcMorphism& m) {
    (void)c;
    size_t n = m.src.size();
    // Kronecker product of the component images in slot order ...
    MatC k(1, 1, Coef(1, 0));
    std::vector<int> img_dims(n);
    for (size_t i = 0; i < n; ++i) {
        k = mat_kron(k, f.images[m.comps[i]], Coef(0, 0));
        img_dims[i] = f.dims[m.dst[m.perm[i]]];
    }
    // ... then permute the target factors into their slots.
    MatC p = factor_permutation_matrix(m.perm, img_dims);
    return mat_mul(p, k, Coef(0, 0));
}

}  // namespace catalg
