#pragma once

// The bracket space: formal QQ-linear combinations of two-slot brackets
// <x,y> over a finite symbol set, with the remaining slots symmetric (so a
// bracket is determined by the ordered pair of displayed symbols, which must
// be distinct).  The rewriting rule
//     <a,b> + <c,d> = <a,c> + <b,d>
// generates a subspace of relations; certificates express a target vector
// as an integral or rational combination of rule instances.

#include <catalg/matrix.hpp>

#include <array>
#include <string>

namespace catalg {

class BracketSpace {
  public:
    explicit BracketSpace(int symbols);

    int symbols() const { return symbols_; }
    size_t dim() const { return pairs_.size(); }

    size_t pair_index(int x, int y) const;
    std::pair<int, int> pair_at(size_t idx) const { return pairs_[idx]; }

    // Rule instance for an ordered 4-tuple (w,x,y,z) of distinct symbols:
    //   +<w,x> + <y,z> - <w,y> - <x,z>.
    std::vector<Rat> instance_vector(int w, int x, int y, int z) const;

    struct Instance {
        std::array<int, 4> tuple;
    };
    const std::vector<Instance>& instances() const { return instances_; }

    // Matrix whose columns are all rule instances.
    MatC instance_matrix() const;

  private:
    int symbols_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::vector<size_t>> pair_lookup_;
    std::vector<Instance> instances_;
};

struct BracketCertificate {
    bool solvable_over_q = false;
    bool integer_certificate = false;
    // Coefficients per instance (sparse: instance index -> coefficient).
    std::vector<std::pair<size_t, Rat>> coefficients;
    bool verified = false;
};

// Target <e,d> - <d,e> over five symbols a..e; returns the unit-coefficient
// six-instance combination and verifies it by direct expansion.
BracketCertificate paper_bracket_certificate();

// General solve: express target in the instance span (exact over QQ); also
// reports whether an integer-coefficient solution exists.
BracketCertificate bracket_solve(const BracketSpace& space, const std::vector<Rat>& target);

}  // namespace catalg
