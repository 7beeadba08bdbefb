#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <catalg/monadkit.hpp>

using namespace catalg;

namespace {

// right-zero semigroup with adjoined unit: x*y = y on {a, b}; unit = 0
TheoryPtr noncomm_mset() {
    return mset_theory({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, "rz2");
}

// multiplicative monoid ({1, 0}, *)
TheoryPtr comm_mset() { return mset_theory({{0, 1}, {1, 1}}, "mult2"); }

}  // namespace

TEST_CASE("derived strength and d for pointed sets: basepoint absorbs") {
    TheoryPtr th = pointed_theory();
    // d(x, *) = * for every x
    for (int x = 0; x < 3; ++x) {
        TE star = {3};  // star of T([3])
        TE dx = th->d(3, 3, th->eta(3, x), star);
        CHECK(dx == TE{9});  // star of T([9])
    }
}

TEST_CASE("d on singletons for the power-set theory") {
    TheoryPtr th = suplattice_theory();
    TE u = th->eta(2, 1), v = th->eta(3, 2);
    CHECK(th->d(2, 3, u, v) == TE{5});  // {(1,2)} with pair index 1*3+2
}

TEST_CASE("d for modn is the bilinear expansion") {
    TheoryPtr th = modn_theory(2);
    TE u = {1, 1};  // x0 + x1
    TE v = {1, 0};  // y0
    TE expected = {1, 0, 1, 0};
    CHECK(th->d(2, 2, u, v) == expected);
    // brute table vs the two Remark-6.3.2 composites
    for (long long i = 0; i < th->free_count(2); ++i)
        for (long long j = 0; j < th->free_count(2); ++j) {
            TE a = th->elem_at(2, i), b = th->elem_at(2, j);
            CHECK(d_composite_costrength_first(*th, 2, 2, a, b) == th->d(2, 2, a, b));
            CHECK(d_composite_strength_first(*th, 2, 2, a, b) == th->d(2, 2, a, b));
        }
}

TEST_CASE("monad laws pass for the built-in theories at size 2") {
    for (TheoryPtr th : {pointed_theory(), suplattice_theory(), semilattice_theory(),
                         modn_theory(2), comm_mset()}) {
        LawReport rep = check_monad_laws(th, 2);
        INFO(th->name(), ": ", rep.witness);
        CHECK(rep.all());
    }
    // the laws hold vacuously on empty inputs
    LawReport rep0 = check_monad_laws(pointed_theory(), 0);
    CHECK(rep0.all());
}

TEST_CASE("noncommutative monoid fails the symmetry square with a witness") {
    LawReport rep = check_monad_laws(noncomm_mset(), 2);
    CHECK_FALSE(rep.d_symmetric);
    CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("algebra validity") {
    CHECK(algebra_valid(pointed_algebra(3)));
    CHECK(algebra_valid(chain_lattice(suplattice_theory(), 3)));
    CHECK(algebra_valid(vee_semilattice(semilattice_theory())));
    CHECK(algebra_valid(modn_cyclic(modn_theory(6), 3)));
    // an invalid lattice action: constant map that is not sup
    FiniteAlgebra bad;
    bad.th = suplattice_theory();
    bad.size = 2;
    bad.act = [](const TE&) { return 1; };
    CHECK_FALSE(algebra_valid(bad));
}

TEST_CASE("bihom: smash projection is a bihomomorphism") {
    FiniteAlgebra a = pointed_algebra(3), b = pointed_algebra(3);
    TensorResult t = tensor_algebras(a, b);
    // the universal pairing itself, as a table into the tensor algebra
    std::vector<int> f(a.size * b.size);
    for (int x = 0; x < a.size; ++x)
        for (int y = 0; y < b.size; ++y) f[x * b.size + y] = t.pair_map[x][y];
    BihomReport rep = is_bihom(f, a, b, t.algebra);
    CHECK(rep.single_square);
    CHECK(rep.per_variable);
    CHECK(rep.criteria_agree);
}

TEST_CASE("bihom: the first projection is not a bihomomorphism") {
    FiniteAlgebra a = pointed_algebra(2), b = pointed_algebra(3);
    std::vector<int> f(a.size * b.size);
    for (int x = 0; x < a.size; ++x)
        for (int y = 0; y < b.size; ++y) f[x * b.size + y] = x;
    BihomReport rep = is_bihom(f, a, b, a);
    CHECK_FALSE(rep.single_square);
    CHECK(rep.criteria_agree);
}

TEST_CASE("bihom: constant-to-basepoint is a bihomomorphism") {
    FiniteAlgebra a = pointed_algebra(2), b = pointed_algebra(3);
    std::vector<int> f(a.size * b.size, 0);
    BihomReport rep = is_bihom(f, a, b, a);
    CHECK(rep.single_square);
    CHECK(rep.criteria_agree);
}

TEST_CASE("pointed tensor is the smash product: (|A|-1)(|B|-1)+1") {
    for (int xa = 2; xa <= 4; ++xa)
        for (int xb = 2; xb <= 4; ++xb) {
            TensorResult t = tensor_algebras(pointed_algebra(xa), pointed_algebra(xb));
            CHECK(t.algebra.size == (xa - 1) * (xb - 1) + 1);
            CHECK(t.well_defined);
            CHECK(t.engine == "generic");
        }
}

TEST_CASE("modn tensor: Z/2 (x) Z/3 over Z/6 is trivial") {
    TheoryPtr th = modn_theory(6);
    TensorResult t = tensor_algebras(modn_cyclic(th, 2), modn_cyclic(th, 3));
    CHECK(t.algebra.size == 1);
    CHECK(t.well_defined);
}

TEST_CASE("modn tensor agrees with the generic engine on Z/2 (x) Z/2") {
    TheoryPtr th = modn_theory(2);
    FiniteAlgebra a = modn_cyclic(th, 2), b = modn_cyclic(th, 2);
    TensorResult t = tensor_algebras(a, b);  // generic (free count = 16)
    CHECK(t.engine == "generic");
    CHECK(t.algebra.size == 2);
    UniversalReport u = verify_universal(a, b, modn_cyclic(th, 2));
    CHECK(u.bihom_count == 2);
    CHECK(u.hom_count == 2);
    CHECK(u.bijection);
}

TEST_CASE("A (x) free(1) = A") {
    for (TheoryPtr th : {pointed_theory(), suplattice_theory()}) {
        FiniteAlgebra f1 = free_algebra(th, 1);
        FiniteAlgebra a =
            th->name() == "pointed" ? pointed_algebra(3) : chain_lattice(th, 3);
        TensorResult t = tensor_algebras(a, f1);
        CHECK(t.algebra.size == a.size);
        // the map x |-> x (x) eta(0) is the canonical bijection
        std::set<int> image;
        for (int x = 0; x < a.size; ++x)
            image.insert(t.pair_map[x][th->index_of(1, th->eta(1, 0))]);
        CHECK(image.size() == static_cast<size_t>(a.size));
    }
}

TEST_CASE("free tensor law F(X) (x) F(Y) = F(X x Y)") {
    for (TheoryPtr th : {pointed_theory(), suplattice_theory(), semilattice_theory(),
                         modn_theory(2), comm_mset()}) {
        for (int nx = 1; nx <= 2; ++nx)
            for (int ny = 1; ny <= 2; ++ny) {
                size_t lhs = 0, rhs = 0;
                INFO(th->name(), " nx=", nx, " ny=", ny);
                CHECK(verify_free_tensor(th, nx, ny, &lhs, &rhs));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("free tensor law at |X| = |Y| = 3 via the specialized engines") {
    size_t lhs = 0, rhs = 0;
    CHECK(verify_free_tensor(suplattice_theory(), 3, 3, &lhs, &rhs));
    CHECK(lhs == 512);
    CHECK(rhs == 512);
    CHECK(verify_free_tensor(modn_theory(2), 3, 3, &lhs, &rhs));
    CHECK(lhs == 512);
    CHECK(verify_free_tensor(semilattice_theory(), 3, 3, &lhs, &rhs));
    CHECK(lhs == 511);
}

TEST_CASE("powerset(X) (x) powerset(Y) = powerset(X x Y) at |X| = |Y| = 2") {
    size_t lhs = 0, rhs = 0;
    CHECK(verify_free_tensor(suplattice_theory(), 2, 2, &lhs, &rhs));
    CHECK(lhs == 16);
    CHECK(rhs == 16);
}

TEST_CASE("structure isomorphisms: symmetry and associativity") {
    // pointed sets
    StructureReport p = verify_structure_isos(pointed_theory(), 2, 2, pointed_algebra(3),
                                              pointed_algebra(2), pointed_algebra(3));
    CHECK(p.free_tensor);
    CHECK(p.symmetry);
    CHECK(p.associativity);

    // Z/4, Z/2, Z/2 over modn(4): both parenthesizations agree
    TheoryPtr m4 = modn_theory(4);
    StructureReport m = verify_structure_isos(m4, 1, 1, modn_cyclic(m4, 4),
                                              modn_cyclic(m4, 2), modn_cyclic(m4, 2));
    CHECK(m.symmetry);
    CHECK(m.associativity);

    // small sup-lattices
    TheoryPtr sl = suplattice_theory();
    StructureReport s = verify_structure_isos(sl, 1, 2, chain_lattice(sl, 2),
                                              chain_lattice(sl, 2), chain_lattice(sl, 2));
    CHECK(s.free_tensor);
    CHECK(s.symmetry);
    CHECK(s.associativity);
}

TEST_CASE("verify_universal for pointed sets and the trivial target") {
    FiniteAlgebra a = pointed_algebra(2), b = pointed_algebra(2);
    UniversalReport rep = verify_universal(a, b, pointed_algebra(3));
    CHECK(rep.bijection);
    UniversalReport triv = verify_universal(a, b, pointed_algebra(1));
    CHECK(triv.bihom_count == 1);
    CHECK(triv.hom_count == 1);
    CHECK(triv.bijection);
}

TEST_CASE("congruence minimality witnessed by the factorization counts") {
    // For each built-in theory with small carriers the canonical pairing
    // factors bijectively, which certifies that the closure is no coarser
    // and no finer than the universal one.
    TheoryPtr sl = suplattice_theory();
    UniversalReport rep =
        verify_universal(chain_lattice(sl, 2), chain_lattice(sl, 2), chain_lattice(sl, 3));
    CHECK(rep.bijection);
    TheoryPtr se = semilattice_theory();
    UniversalReport rep2 = verify_universal(chain_semilattice(se, 2), vee_semilattice(se),
                                            chain_semilattice(se, 2));
    CHECK(rep2.bijection);
}

TEST_CASE("enumerate_algebras finds the expected families") {
    CHECK(enumerate_algebras(pointed_theory(), 3).size() == 3);
    auto supl3 = enumerate_algebras(suplattice_theory(), 3);
    // labeled carriers: 1 + 2 + 3! chains (every sup-lattice with at most
    // three elements is a chain, in any labeling)
    CHECK(supl3.size() == 9);
    auto semi3 = enumerate_algebras(semilattice_theory(), 3);
    // size 1, size 2 (chain), size 3: chain and the vee
    CHECK(semi3.size() >= 4);
    auto mod6 = enumerate_algebras(modn_theory(6), 3);
    CHECK(mod6.size() == 3);  // trivial, Z/2, Z/3
    for (auto& alg : mod6) CHECK(algebra_valid(alg));
}
