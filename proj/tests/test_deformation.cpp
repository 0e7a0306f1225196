#include "testutil.hpp"

#include <doctest.h>

using namespace jjtest;

namespace {

LinearMap z_e1_to_e2(Field f) {
    Matrix z(f, 3, 3);
    z.at(1, 0) = Scalar::one(f);
    return LinearMap(std::move(z));
}

}  // namespace

TEST_CASE("deformation generators on the b2 context") {
    JJRelRB ctx = make_b2_ctx(Q());
    CHECK(generates_rb_deformation(ctx, LinearMap::zero(Q(), 3, 3)));
    CHECK(generates_rb_deformation(ctx, ctx.t));  // Z = T always works
    CHECK(generates_rb_deformation(ctx, z_e1_to_e2(Q())));  // stays inside the family (a2 = t)

    // Z(e1) = e1 fails: Z is not itself an operator
    Matrix bad(Q(), 3, 3);
    bad.at(0, 0) = Scalar::one(Q());
    Check c = generates_rb_deformation(ctx, LinearMap(bad));
    CHECK(!c);
    CHECK(c.condition == "generator_rb");
}

TEST_CASE("generator conditions equal the coefficient-wise pencil condition") {
    Rng rng(91);
    JJRelRB ctx = make_b2_ctx(F5());
    for (int trial = 0; trial < 40; ++trial) {
        LinearMap z(rng.matrix(F5(), 3, 3));
        bool gen = bool(generates_rb_deformation(ctx, z));
        bool pencil = true;
        for (long t : {1L, 2L, 3L, 4L}) {
            LinearMap tt(ctx.t.matrix() + z.matrix().scaled(Scalar::integer(t, F5())));
            if (!is_relative_rb(JJRelRB(ctx.rep, tt))) pencil = false;
        }
        // degree-2 polynomial in t vanishing at 4 nonzero points and t=0 vanishes
        CHECK(gen == pencil);
    }
}

TEST_CASE("pre-JJ deformation generators") {
    PreJJRelRB ctx = make_tprime_ctx(Q(), 0, 1);
    CHECK(generates_rb_deformation(ctx, LinearMap::zero(Q(), 2, 2)));
    CHECK(generates_rb_deformation(ctx, ctx.t));
    // J = T'_{0,1} direction within the family: T + tJ = T'_{0,1+t}... need the
    // (2b, b) direction itself
    Matrix dir(Q(), 2, 2);
    dir.at(0, 0) = Scalar::integer(2, Q());
    dir.at(1, 1) = Scalar::one(Q());
    CHECK(generates_rb_deformation(ctx, LinearMap(dir)));
}

TEST_CASE("equivalence of linear deformations") {
    JJRelRB ctx = make_b2_ctx(Q());
    Vec zero_x(Q(), 3);
    LinearMap j0 = LinearMap::zero(Q(), 3, 3);
    CHECK(deformation_equivalence(ctx, j0, j0, zero_x));

    // J1 = 0 and J2 = -d(e1) are equivalent via x = e1
    Vec e1 = Vec::basis(Q(), 3, 0);
    LinearMap j2 = LinearMap(-element_coboundary(ctx, e1).matrix());
    CHECK(deformation_equivalence(ctx, j0, j2, e1));

    // necessary condition (41): J2 - J1 must be -d(x)
    LinearMap jbad = LinearMap(j2.matrix() + ctx.t.matrix());
    Check c = deformation_equivalence(ctx, j0, jbad, e1);
    CHECK(!c);
    CHECK(c.condition == "cond_41");
}

TEST_CASE("Nijenhuis elements of the b2 context") {
    JJRelRB ctx = make_b2_ctx(Q());
    CHECK(is_nijenhuis_element(ctx, Vec(Q(), 3)));          // x = 0
    CHECK(is_nijenhuis_element(ctx, Vec::basis(Q(), 3, 1)));  // e2 kills everything
    CHECK(is_nijenhuis_element(ctx, Vec::basis(Q(), 3, 0)));  // e1, by direct expansion
}

TEST_CASE("a failing Nijenhuis-element condition is detected") {
    // On A4x (with the left multiplications as action data), x = e4 breaks the
    // morphism condition: (e4*e1)*e1 + (e1*e4)*e1 - (e1*e1)*e4 = 2e4.
    FDAlgebra a4x = make_a4x(Q());
    std::vector<Matrix> lmats;
    for (std::size_t i = 0; i < 4; ++i) lmats.push_back(a4x.left_mult(a4x.basis(i)).matrix());
    JJRelRB ctx(Representation(a4x, 4, lmats), LinearMap::zero(Q(), 4, 4));
    REQUIRE(is_relative_rb(ctx));  // T = 0 is always an operator
    CHECK(!is_nijenhuis_element(ctx, Vec::basis(Q(), 4, 3)));
    CHECK_THROWS_AS(trivial_deformation(ctx, Vec::basis(Q(), 4, 3), Scalar::one(Q())),
                    const precondition_error&);
}

TEST_CASE("trivial deformations: conjugation route equals coboundary route") {
    JJRelRB ctx = make_b2_ctx(Q());
    Vec e1 = Vec::basis(Q(), 3, 0), e2 = Vec::basis(Q(), 3, 1);

    CHECK(trivial_deformation(ctx, e1, Scalar::zero(Q())) == ctx.t);  // t = 0

    // x = e1, t = 1: J maps e1 -> e2, so T_t is the (1,1,0) family member
    LinearMap t1 = trivial_deformation(ctx, e1, Scalar::one(Q()));
    Matrix expect = ctx.t.matrix();
    expect.at(1, 0) = Scalar::one(Q());
    CHECK(t1 == LinearMap(expect));
    CHECK(is_relative_rb(JJRelRB(ctx.rep, t1)));

    // x = e2: J = 0, T_t = T for all t
    for (long num : {1L, -1L, 2L})
        CHECK(trivial_deformation(ctx, e2, Scalar::integer(num, Q())) == ctx.t);
}

TEST_CASE("trivial deformation reports singular conjugators") {
    // over F5 pick x, t with Id + t L_x singular: L_x nilpotent here, so use
    // a context on the zero algebra where rho(x) can be arranged... simpler:
    // the A3 b2 context has L_x strictly nilpotent, Id + tL_x always invertible;
    // exercise the error path via is_nijenhuis_element over F5 exhaustion instead.
    JJRelRB ctx = make_b2_ctx(F5());
    auto elements = search::enumerate_nijenhuis_elements(ctx);
    CHECK(elements.size() >= 3);
    for (const Vec& x : elements)
        for (long t : {1L, 2L, 3L}) {
            Matrix phi = Matrix::identity(F5(), 3) +
                         ctx.alg().left_mult(x).matrix().scaled(Scalar::integer(t, F5()));
            if (rank(phi) == 3) {
                LinearMap tt = trivial_deformation(ctx, x, Scalar::integer(t, F5()));
                CHECK(is_relative_rb(JJRelRB(ctx.rep, tt)));
            } else {
                CHECK_THROWS_AS(trivial_deformation(ctx, x, Scalar::integer(t, F5())),
                                const singular_matrix_error&);
            }
        }
}

TEST_CASE("multiplication deformations") {
    FDAlgebra a3 = make_a3(Q());
    Tensor zero_psi(Q(), {3, 3, 3});
    CHECK(generates_mult_deformation(a3, zero_psi));
    CHECK(generates_mult_deformation(a3, a3.structure()));  // psi = * rescales

    // psi = delta1(N) for a Nijenhuis N
    LinearMap n2(Matrix::identity(Q(), 3).scaled(Scalar::integer(2, Q())));
    REQUIRE(is_nijenhuis_operator(a3, n2));
    Tensor psi = nijenhuis_coboundary(a3, n2);
    CHECK(generates_mult_deformation(a3, psi));

    // non-symmetric psi fails
    Tensor bad(Q(), {3, 3, 3});
    bad.at({0, 1, 0}) = Scalar::one(Q());
    Check c = generates_mult_deformation(a3, bad);
    CHECK(!c);
    CHECK(c.condition == "psi_symmetric");
}

TEST_CASE("equivalence and triviality of multiplication deformations") {
    FDAlgebra a3 = make_a3(Q());
    Tensor zero_psi(Q(), {3, 3, 3});
    CHECK(mult_deformation_equivalence(a3, zero_psi, zero_psi, LinearMap::zero(Q(), 3, 3)));

    // psi = delta1(N) is trivial: equivalent to zero via N itself
    LinearMap n2(Matrix::identity(Q(), 3).scaled(Scalar::integer(2, Q())));
    Tensor psi = nijenhuis_coboundary(a3, n2);
    CHECK(mult_deformation_equivalence(a3, zero_psi, psi, n2));

    // psi2 - psi1 not a coboundary of the given N
    Check c = mult_deformation_equivalence(a3, zero_psi, a3.structure(),
                                           LinearMap::zero(Q(), 3, 3));
    CHECK(!c);
    CHECK(c.condition == "equiv_coboundary");
}

TEST_CASE("Nijenhuis operators") {
    FDAlgebra a3 = make_a3(Q());
    CHECK(is_nijenhuis_operator(a3, LinearMap::identity(Q(), 3)));
    CHECK(is_nijenhuis_operator(a3, LinearMap::zero(Q(), 3, 3)));
    CHECK(is_nijenhuis_operator(a3,
                                LinearMap(Matrix::identity(Q(), 3).scaled(Scalar::integer(2, Q())))));
    Matrix d(Q(), 3, 3);
    d.at(0, 0) = Scalar::one(Q());
    d.at(1, 1) = Scalar::integer(2, Q());
    d.at(2, 2) = Scalar::one(Q());
    CHECK(!is_nijenhuis_operator(a3, LinearMap(d)));
}

TEST_CASE("deformed algebra A_N") {
    FDAlgebra a3 = make_a3(Q());
    CHECK(deformed_algebra(a3, LinearMap::identity(Q(), 3), StructureKind::jacobi_jordan) == a3);
    CHECK(deformed_algebra(a3, LinearMap::zero(Q(), 3, 3), StructureKind::jacobi_jordan)
              .structure()
              .is_zero());
    LinearMap n2(Matrix::identity(Q(), 3).scaled(Scalar::integer(2, Q())));
    FDAlgebra an = deformed_algebra(a3, n2, StructureKind::jacobi_jordan);
    // *_N = 2 *, and N is a morphism A_N -> A
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(an.product_of_basis(i, j) ==
                  a3.product_of_basis(i, j).scaled(Scalar::integer(2, Q())));
    CHECK(is_algebra_morphism(n2, an, a3));

    Matrix d(Q(), 3, 3);
    d.at(0, 0) = Scalar::one(Q());
    d.at(1, 1) = Scalar::integer(2, Q());
    d.at(2, 2) = Scalar::one(Q());
    CHECK_THROWS_AS(deformed_algebra(a3, LinearMap(d), StructureKind::jacobi_jordan),
                    const precondition_error&);
}

TEST_CASE("N_T block operator") {
    // T0 with lambda = 1: (a+v) -> -v, Nijenhuis trivially
    Representation reg = regular_representation(make_a3(Q()));
    NTResult nt0 = build_nt(reg, LinearMap::zero(Q(), 3, 3), Scalar::one(Q()));
    CHECK(is_nijenhuis_operator(nt0.semidirect, nt0.nt));
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(nt0.nt.apply(Vec::basis(Q(), 6, i)).is_zero());
        CHECK(nt0.nt.apply(Vec::basis(Q(), 6, 3 + i)) == -Vec::basis(Q(), 6, 3 + i));
    }

    // P2 T'01 with lambda = 0 (and the other two pinned cases)
    PreJJRelRB pctx = make_tprime_ctx(Q(), 0, 1);
    for (long lam : {0L, 1L, -1L}) {
        NTResult nt = build_nt(pctx.rep, pctx.t, Scalar::integer(lam, Q()));
        CHECK(is_nijenhuis_operator(nt.semidirect, nt.nt));
    }

    // non-operator T: N_T fails the Nijenhuis identity
    Matrix bad(Q(), 3, 3);
    bad.at(0, 0) = Scalar::one(Q());
    NTResult ntbad = build_nt(reg, LinearMap(bad), Scalar::zero(Q()));
    CHECK(!is_nijenhuis_operator(ntbad.semidirect, ntbad.nt));
}

TEST_CASE("N_T equivalence on random maps") {
    Rng rng(103);
    Representation reg5 = regular_representation(make_a3(F5()));
    BiRepresentation breg5 = regular_birepresentation(make_p2(F5()));
    for (int trial = 0; trial < 25; ++trial) {
        LinearMap t(rng.matrix(F5(), 3, 3));
        bool rb = bool(is_relative_rb(JJRelRB(reg5, t)));
        for (long lam : {0L, 1L, -1L}) {
            NTResult nt = build_nt(reg5, t, Scalar::integer(lam, F5()));
            CHECK(is_nijenhuis_operator(nt.semidirect, nt.nt) == rb);
        }
        LinearMap pt(rng.matrix(F5(), 2, 2));
        bool prb = bool(is_relative_rb(PreJJRelRB(breg5, pt)));
        for (long lam : {0L, 1L, -1L}) {
            NTResult nt = build_nt(breg5, pt, Scalar::integer(lam, F5()));
            CHECK(is_nijenhuis_operator(nt.semidirect, nt.nt) == prb);
        }
    }
}

TEST_CASE("induced product deformations") {
    JJRelRB ctx = make_b2_ctx(Q());
    Tensor psi0 = induced_product_deformation(ctx, LinearMap::zero(Q(), 3, 3));
    CHECK(psi0.is_zero());

    // Z = T reproduces *_T itself
    Tensor psit = induced_product_deformation(ctx, ctx.t);
    CHECK(psit == induced_structures(ctx).v_alg.structure());

    // Z: e1 -> e2 gives the zero deformation (e2 acts trivially)
    Tensor psiz = induced_product_deformation(ctx, z_e1_to_e2(Q()));
    CHECK(psiz.is_zero());

    // the deformed product is a valid linear deformation of (V, *_T):
    // check the structure of *_T + t psi for several t (coefficient-wise exact)
    PreJJRelRB pctx = make_tprime_ctx(Q(), 0, 1);
    Matrix dir(Q(), 2, 2);
    dir.at(0, 0) = Scalar::integer(2, Q());
    dir.at(1, 1) = Scalar::one(Q());
    Tensor omega = induced_product_deformation(pctx, LinearMap(dir));
    FDAlgebra vt = induced_structures(pctx).v_alg;
    for (long t : {-2L, -1L, 1L, 2L, 5L}) {
        Tensor deformed = vt.structure() + omega.scaled(Scalar::integer(t, Q()));
        FDAlgebra alg_t(Q(), 2, deformed, {}, true);
        CHECK(check_structure(alg_t, StructureKind::left_prejj));
    }
}

TEST_CASE("composition with a Nijenhuis operator") {
    PreJJRelRB ctx = make_tprime_ctx(Q(), 0, 1);
    CHECK(rb_nijenhuis_composition(ctx, LinearMap::identity(Q(), 2)));
    CHECK(rb_nijenhuis_composition(ctx, LinearMap::zero(Q(), 2, 2)));
    LinearMap n2(Matrix::identity(Q(), 2).scaled(Scalar::integer(2, Q())));
    CHECK(rb_nijenhuis_composition(ctx, n2));
    // 2 T'_{0,1} = T'_{0,2} stays in the family
    CHECK(is_relative_rb(PreJJRelRB(ctx.rep, n2.compose(ctx.t))));

    JJRelRB jctx = make_b2_ctx(Q());
    CHECK(rb_nijenhuis_composition(jctx, LinearMap::identity(Q(), 3)));
    CHECK(rb_nijenhuis_composition(jctx, LinearMap::zero(Q(), 3, 3)));
}

TEST_CASE("weight -1 Rota-Baxter and Nijenhuis are different predicates") {
    // N = 2 Id on P2 is Nijenhuis but not a weight -1 Rota-Baxter operator
    FDAlgebra p2 = make_p2(Q());
    LinearMap n2(Matrix::identity(Q(), 2).scaled(Scalar::integer(2, Q())));
    CHECK(is_nijenhuis_operator(p2, n2));
    CHECK(!is_rota_baxter_weight(p2, n2, Scalar::integer(-1, Q())));
    // they agree on N = Id and N = 0
    CHECK(is_rota_baxter_weight(p2, LinearMap::identity(Q(), 2), Scalar::integer(-1, Q())));
    CHECK(is_rota_baxter_weight(p2, LinearMap::zero(Q(), 2, 2), Scalar::integer(-1, Q())));
}
