#include <catalg/bracket.hpp>

namespace catalg {

BracketSpace::BracketSpace(int symbols) : symbols_(symbols) {
    pair_lookup_.assign(symbols, std::vector<size_t>(symbols, SIZE_MAX));
    for (int x = 0; x < symbols; ++x)
        for (int y = 0; y < symbols; ++y) {
            if (x == y) continue;
            pair_lookup_[x][y] = pairs_.size();
            pairs_.emplace_back(x, y);
        }
    // All ordered 4-tuples of distinct symbols.
    for (int w = 0; w < symbols; ++w)
        for (int x = 0; x < symbols; ++x)
            for (int y = 0; y < symbols; ++y)
                for (int z = 0; z < symbols; ++z) {
                    if (w == x || w == y || w == z || x == y || x == z || y == z) continue;
                    instances_.push_back(Instance{{w, x, y, z}});
                }
}

size_t BracketSpace::pair_index(int x, int y) const {
    size_t i = pair_lookup_[x][y];
    if (i == SIZE_MAX) throw std::invalid_argument("bracket <x,x> does not exist");
    return i;
}

std::vector<Rat> BracketSpace::instance_vector(int w, int x, int y, int z) const {
    std::vector<Rat> v(dim(), Rat(0));
    v[pair_index(w, x)] += 1;
    v[pair_index(y, z)] += 1;
    v[pair_index(w, y)] -= 1;
    v[pair_index(x, z)] -= 1;
    return v;
}

MatC BracketSpace::instance_matrix() const {
    MatC m(dim(), instances_.size(), Coef(0, 0));
    for (size_t c = 0; c < instances_.size(); ++c) {
        const auto& t = instances_[c].tuple;
        auto v = instance_vector(t[0], t[1], t[2], t[3]);
        for (size_t i = 0; i < v.size(); ++i) m(i, c) = Coef(v[i]);
    }
    return m;
}

BracketCertificate paper_bracket_certificate() {
    // Symbols a,b,c,d,e = 0..4.  The six unit-coefficient rule instances
    // whose sum telescopes to <e,d> - <d,e>.
    const int a = 0, b = 1, c = 2, d = 3, e = 4;
    BracketSpace space(5);
    std::array<std::array<int, 4>, 6> picks = {{{a, b, c, e},
                                                {b, c, a, e},
                                                {a, b, e, d},
                                                {a, d, b, e},
                                                {b, a, c, d},
                                                {a, c, b, d}}};
    BracketCertificate cert;
    std::vector<Rat> sum(space.dim(), Rat(0));
    for (const auto& t : picks) {
        auto v = space.instance_vector(t[0], t[1], t[2], t[3]);
        for (size_t i = 0; i < v.size(); ++i) sum[i] += v[i];
        // locate the instance index
        for (size_t k = 0; k < space.instances().size(); ++k)
            if (space.instances()[k].tuple == std::array<int, 4>{t[0], t[1], t[2], t[3]}) {
                cert.coefficients.emplace_back(k, Rat(1));
                break;
            }
    }
    std::vector<Rat> target(space.dim(), Rat(0));
    target[space.pair_index(e, d)] += 1;
    target[space.pair_index(d, e)] -= 1;
    cert.verified = (sum == target);
    cert.solvable_over_q = cert.verified;
    cert.integer_certificate = cert.verified;  // all coefficients are 1
    return cert;
}

BracketCertificate bracket_solve(const BracketSpace& space, const std::vector<Rat>& target) {
    BracketCertificate cert;
    MatC m = space.instance_matrix();
    std::vector<Coef> b;
    for (const Rat& q : target) b.emplace_back(q);
    auto sol = field_solve(m, b);
    if (!sol) return cert;
    cert.solvable_over_q = true;
    for (size_t i = 0; i < sol->size(); ++i)
        if (!(*sol)[i].is_zero()) cert.coefficients.emplace_back(i, (*sol)[i].value());

    // Integer-coefficient certificate via an exact integer solve.
    Int den = 1;
    for (const Rat& q : target) den = lcm(den, q.get_den());
    MatZ zi(space.dim(), space.instances().size(), 0);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) zi(i, j) = m(i, j).value().get_num();
    std::vector<Int> tz;
    bool integral = true;
    for (const Rat& q : target) {
        if (q.get_den() != 1) integral = false;
        tz.push_back(q.get_num());
    }
    if (integral) {
        auto isol = integer_solve(zi, tz);
        if (isol) {
            cert.integer_certificate = true;
            cert.coefficients.clear();
            for (size_t i = 0; i < isol->size(); ++i)
                if ((*isol)[i] != 0) cert.coefficients.emplace_back(i, Rat((*isol)[i]));
        }
    }

    // Verify whichever combination we return.
    std::vector<Rat> sum(space.dim(), Rat(0));
    for (auto& [idx, coef] : cert.coefficients) {
        const auto& t = space.instances()[idx].tuple;
        auto v = space.instance_vector(t[0], t[1], t[2], t[3]);
        for (size_t i = 0; i < v.size(); ++i) sum[i] += coef * v[i];
    }
    cert.verified = (sum == target);
    return cert;
}

}  // namespace catalg
