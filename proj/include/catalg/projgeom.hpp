#pragma once

// Koszul complexes with contractions, Segre/Veronese/Pluecker relation
// generators with forward/backward constructions and round-trip
// certificates, and the Rees presentation of the (s,t) blow-up.
// Everything is over QQ.

#include <catalg/matrix.hpp>
#include <catalg/sympow.hpp>

namespace catalg {

// A surjection QQ^n ->> QQ given by a nonzero covector.
struct LineQuotient {
    std::vector<Rat> s;
    bool nonzero() const {
        for (auto& q : s)
            if (q != 0) return true;
        return false;
    }
};

struct KoszulReport {
    std::vector<size_t> dims;  // dims[p] = dim Lambda^p = C(n,p)
    std::vector<MatC> d;       // d[p] : Lambda^{p+1} -> Lambda^p
    bool d_squared_zero = false;
    std::vector<size_t> homology;  // H_p, p = 0..pmax
    bool exact = false;
    bool has_contraction = false;
    bool contraction_ok = false;  // d t + t d = id at every degree
};

// pmax defaults to n; a contraction is built whenever s != 0 (normalizing a
// coordinate with nonzero value).
KoszulReport koszul_complex(const LineQuotient& s, int pmax = -1);

// A deduplicated set of homogeneous degree-2 relations in named coordinates.
// Canonical form: trailing (degrevlex-smallest) coefficient 1; printed with
// terms ascending, which reproduces the classical displays.
struct QuadricSet {
    std::vector<std::string> names;
    std::vector<Polynomial> quadrics;

    std::vector<std::string> printed() const;
};

QuadricSet segre_relations(int n1, int n2);
QuadricSet veronese_relations(int n, int d);
QuadricSet plucker_relations(int n, int d);

// Degree-2 kernel comparison: do the quadrics span exactly the kernel of
// the corresponding coordinate map?
bool segre_relations_complete(int n1, int n2);
bool veronese_relations_complete(int n, int d);
bool plucker_relations_complete(int n, int d);

struct RoundTrip {
    bool forward_satisfies_relations = false;
    bool backward_accepted = false;   // input satisfied the relations
    bool recovered = false;           // reconstruction matches up to scalar
    std::vector<Rat> recovered_1, recovered_2;  // normalized factors (Segre)
};

RoundTrip segre_roundtrip(const LineQuotient& s1, const LineQuotient& s2);
// Backward-only entry point: a covector on the n1*n2 coordinates.
RoundTrip segre_backward(int n1, int n2, const std::vector<Rat>& s);

RoundTrip veronese_roundtrip(const LineQuotient& s, int d);
RoundTrip veronese_backward(int n, int d, const std::vector<Rat>& t);

struct PluckerRoundTrip {
    bool rank_ok = false;
    bool forward_satisfies_relations = false;
    bool backward_accepted = false;
    bool rank_recovered = false;   // cokernel has rank d
    bool minors_match = false;     // Lambda^d(t') proportional to s
    bool row_space_match = false;  // only for the full round trip
};

PluckerRoundTrip plucker_roundtrip(const MatC& t, int d);
PluckerRoundTrip plucker_backward(int n, int d, const std::vector<Rat>& s);

struct ReesReport {
    // per bidegree (a, n), 1 <= a, n <= bound:
    // kernel dimension, dimension of (sV - tU) * monomials, and equality
    struct Cell {
        int a, n;
        size_t kernel_dim, generated_dim;
        bool equal;
    };
    std::vector<Cell> cells;
    bool all_equal = true;
};

ReesReport rees_presentation(int degree_bound);

}  // namespace catalg
