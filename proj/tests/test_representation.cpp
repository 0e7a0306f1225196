#include "testutil.hpp"

#include <doctest.h>

using namespace jjtest;

namespace {

// rho1: e1 -> E21, e2 -> 0, e3 -> E21; a valid representation of A3 on a
// 2-dimensional space.
std::vector<Matrix> a3_dim2_rep(Field f) {
    Matrix e21(f, 2, 2);
    e21.at(1, 0) = Scalar::one(f);
    return {e21, Matrix(f, 2, 2), e21};
}

}  // namespace

TEST_CASE("representation validity") {
    Representation reg = regular_representation(make_a3(Q()));
    CHECK(is_representation(reg));
    CHECK(is_representation(zero_representation(make_a3(Q()), 4)));

    // rho(e1) = Id on a 1-dim space fails: rho(e1*e1) = 0 != -2 rho(e1)^2
    Matrix id1 = Matrix::identity(Q(), 1);
    Representation bad(make_a3(Q()), 1, {id1, Matrix(Q(), 1, 1), Matrix(Q(), 1, 1)});
    Check c = is_representation(bad);
    CHECK(!c);
    CHECK(c.where == std::vector<std::size_t>{0, 0});

    CHECK(is_representation(Representation(make_a3(Q()), 2, a3_dim2_rep(Q()))));
}

TEST_CASE("regular representation of A3 acts as the table says") {
    Representation reg = regular_representation(make_a3(Q()));
    CHECK(reg.rho[0].col(0) == make_a3(Q()).basis(1));  // rho(e1): e1 -> e2
    CHECK(reg.rho[0].col(1).is_zero());
    CHECK(reg.rho[0].col(2).is_zero());
    Representation zreg = regular_representation(FDAlgebra::zero(Q(), 3));
    for (const Matrix& m : zreg.rho) CHECK(m.is_zero());
}

TEST_CASE("birepresentation validity") {
    BiRepresentation breg = regular_birepresentation(make_p2(Q()));
    CHECK(is_birepresentation(breg));
    // rho(e1) = R(e1) = mu(e1) on P2: e1 -> e2, the only nonzero product
    CHECK(breg.rho[0] == breg.mu[0]);
    CHECK(breg.rho[0].col(0) == make_p2(Q()).basis(1));

    CHECK(is_birepresentation(zero_birepresentation(make_p2(Q()), 3)));

    // mu(e1) = Id breaks equation (8) at (e1, e1)
    BiRepresentation bad = breg;
    bad.mu[0] = Matrix::identity(Q(), 2);
    Check c = is_birepresentation(bad);
    CHECK(!c);
    CHECK(c.condition == "birepresentation_mu");
    CHECK(c.where == std::vector<std::size_t>{0, 0});
}

TEST_CASE("pullback representations") {
    FDAlgebra a3 = make_a3(Q());
    Representation reg = regular_representation(a3);
    Representation viaid = pullback_representation(LinearMap::identity(Q(), 3), a3, a3);
    CHECK(viaid.rho == reg.rho);

    Representation via0 = pullback_representation(LinearMap::zero(Q(), 3, 3), a3, a3);
    for (const Matrix& m : via0.rho) CHECK(m.is_zero());

    Matrix sw(Q(), 3, 3);
    sw.at(0, 2) = sw.at(1, 1) = sw.at(2, 0) = Scalar::one(Q());
    Representation conj = pullback_representation(LinearMap(sw), a3, a3);
    CHECK(is_representation(conj));
    CHECK(conj.rho != reg.rho);

    Matrix notmor = Matrix::identity(Q(), 3).scaled(Scalar::integer(2, Q()));
    CHECK_THROWS_AS(pullback_representation(LinearMap(notmor), a3, a3),
                    const precondition_error&);
}

TEST_CASE("dual representation") {
    Representation z = zero_representation(make_a3(Q()), 2);
    for (const Matrix& m : dual_representation(z).rho) CHECK(m.is_zero());

    Representation reg = regular_representation(make_a3(Q()));
    Representation dual = dual_representation(reg);
    CHECK(is_representation(dual));
    CHECK(dual_representation(dual).rho == reg.rho);  // double transpose
}

TEST_CASE("sum representation of a birepresentation") {
    BiRepresentation z = zero_birepresentation(make_p2(Q()), 2);
    for (const Matrix& m : sum_representation(z).rho) CHECK(m.is_zero());

    BiRepresentation breg = regular_birepresentation(make_p2(Q()));
    Representation sum = sum_representation(breg);
    CHECK(sum.alg == sub_adjacent(make_p2(Q())));
    CHECK(is_representation(sum));
    for (std::size_t i = 0; i < 2; ++i) CHECK(sum.rho[i] == breg.rho[i] + breg.mu[i]);

    // rho = mu means the sum doubles
    BiRepresentation twice(make_p2(Q()), 2, breg.rho, breg.rho);
    if (is_birepresentation(twice))
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(sum_representation(twice).rho[i] ==
                  breg.rho[i].scaled(Scalar::integer(2, Q())));
}

TEST_CASE("semidirect products") {
    Representation reg = regular_representation(make_a3(Q()));
    FDAlgebra sd = semidirect_product(reg);
    CHECK(sd.dim() == 6);
    CHECK(check_structure(sd, StructureKind::jacobi_jordan));

    // zero action: direct sum with an abelian summand
    FDAlgebra sd0 = semidirect_product(zero_representation(make_a3(Q()), 2));
    CHECK(sd0.dim() == 5);
    for (std::size_t k = 3; k < 5; ++k)
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(sd0.product_of_basis(k, j).is_zero());
            CHECK(sd0.product_of_basis(j, k).is_zero());
        }

    // invalid action data gives a non-Jacobi-Jordan product (Prop. is iff)
    Matrix id1 = Matrix::identity(Q(), 1);
    Representation bad(make_a3(Q()), 1, {id1, Matrix(Q(), 1, 1), Matrix(Q(), 1, 1)});
    CHECK(!check_structure(semidirect_product(bad), StructureKind::jacobi_jordan));

    BiRepresentation breg = regular_birepresentation(make_p2(Q()));
    FDAlgebra psd = semidirect_product(breg);
    CHECK(psd.dim() == 4);
    CHECK(check_structure(psd, StructureKind::left_prejj));
}

TEST_CASE("semidirect equivalence on random action data") {
    Rng rng(101);
    FDAlgebra a3f = make_a3(F5());
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Matrix> rho;
        for (int i = 0; i < 3; ++i) rho.push_back(rng.matrix(F5(), 2, 2));
        Representation r(a3f, 2, rho);
        CHECK(bool(is_representation(r)) ==
              bool(check_structure(semidirect_product(r), StructureKind::jacobi_jordan)));
    }
    FDAlgebra p2f = make_p2(F5());
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Matrix> rho, mu;
        for (int i = 0; i < 2; ++i) {
            rho.push_back(rng.matrix(F5(), 2, 2));
            mu.push_back(rng.matrix(F5(), 2, 2));
        }
        BiRepresentation r(p2f, 2, rho, mu);
        CHECK(bool(is_birepresentation(r)) ==
              bool(check_structure(semidirect_product(r), StructureKind::left_prejj)));
    }
}

TEST_CASE("extended representations") {
    Representation z = zero_representation(make_a3(Q()), 2);
    Representation ez = extended_representation(z);
    CHECK(ez.v_dim == 5);
    CHECK(is_representation(ez));
    // regular block on A, zero on V
    CHECK(ez.rho[0].at(1, 0) == Scalar::one(Q()));
    for (std::size_t r = 3; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) CHECK(ez.rho[0].at(r, c).is_zero());

    Representation ereg = extended_representation(regular_representation(make_a3(Q())));
    CHECK(is_representation(ereg));

    BiRepresentation ebreg = extended_birepresentation(regular_birepresentation(make_p2(Q())));
    CHECK(is_birepresentation(ebreg));
}

TEST_CASE("matched pairs of Jacobi-Jordan algebras") {
    FDAlgebra a3 = make_a3(Q());
    FDAlgebra z2 = FDAlgebra::zero(Q(), 2);
    JJMatchedPair mp{a3, z2, a3_dim2_rep(Q()),
                     {Matrix(Q(), 3, 3), Matrix(Q(), 3, 3)}};
    CHECK(is_matched_pair(mp));
    FDAlgebra bc = bicrossed_product(mp);
    CHECK(check_structure(bc, StructureKind::jacobi_jordan));

    JJMatchedPair zz{FDAlgebra::zero(Q(), 2), FDAlgebra::zero(Q(), 3),
                     std::vector<Matrix>(2, Matrix(Q(), 3, 3)),
                     std::vector<Matrix>(3, Matrix(Q(), 2, 2))};
    CHECK(is_matched_pair(zz));

    // (A3, A3, regular, regular): the bicrossed product is the oracle
    Representation reg = regular_representation(a3);
    JJMatchedPair selfpair{a3, a3, reg.rho, reg.rho};
    CHECK(bool(is_matched_pair(selfpair)) ==
          bool(check_structure(bicrossed_product(selfpair), StructureKind::jacobi_jordan)));
}

TEST_CASE("bicrossed product with zero second action equals the semidirect product") {
    FDAlgebra a3 = make_a3(Q());
    JJMatchedPair mp{a3, FDAlgebra::zero(Q(), 2), a3_dim2_rep(Q()),
                     {Matrix(Q(), 3, 3), Matrix(Q(), 3, 3)}};
    Representation r(a3, 2, a3_dim2_rep(Q()));
    CHECK(bicrossed_product(mp) == semidirect_product(r));

    // all actions zero: direct product
    JJMatchedPair direct{a3, a3, std::vector<Matrix>(3, Matrix(Q(), 3, 3)),
                         std::vector<Matrix>(3, Matrix(Q(), 3, 3))};
    FDAlgebra d = bicrossed_product(direct);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(d.product_of_basis(i, 3 + j).is_zero());
            Vec top = d.product_of_basis(i, j);
            for (std::size_t k = 3; k < 6; ++k) CHECK(top[k].is_zero());
        }
}

TEST_CASE("pre-JJ matched pair and its sub-adjacent matched pair") {
    FDAlgebra p2 = make_p2(Q());
    FDAlgebra z1 = FDAlgebra::zero(Q(), 1);
    PreJJMatchedPair mp{p2,
                        z1,
                        std::vector<Matrix>(2, Matrix(Q(), 1, 1)),
                        std::vector<Matrix>(2, Matrix(Q(), 1, 1)),
                        std::vector<Matrix>(1, Matrix(Q(), 2, 2)),
                        std::vector<Matrix>(1, Matrix(Q(), 2, 2))};
    CHECK(is_matched_pair(mp));
    FDAlgebra bc = bicrossed_product(mp);
    CHECK(bc.dim() == 3);
    CHECK(check_structure(bc, StructureKind::left_prejj));

    JJMatchedPair sub = matched_pair_subadjacent(mp);
    CHECK(is_matched_pair(sub));

    // diagram property: sub_adjacent(bicrossed(mp)) == bicrossed(subadjacent(mp))
    CHECK(sub_adjacent(bc) == bicrossed_product(sub));
}

TEST_CASE("pre-JJ semidirect product as a matched pair, diagram property") {
    // (P2, Z_2, (L, R), zeros) is a matched pair; its bicrossed product is the
    // semidirect product of P2 with its regular birepresentation.
    FDAlgebra p2 = make_p2(Q());
    BiRepresentation breg = regular_birepresentation(p2);
    PreJJMatchedPair mp{p2,
                        FDAlgebra::zero(Q(), 2),
                        breg.rho,
                        breg.mu,
                        std::vector<Matrix>(2, Matrix(Q(), 2, 2)),
                        std::vector<Matrix>(2, Matrix(Q(), 2, 2))};
    REQUIRE(is_matched_pair(mp));
    CHECK(bicrossed_product(mp) == semidirect_product(breg));
    CHECK(sub_adjacent(bicrossed_product(mp)) ==
          bicrossed_product(matched_pair_subadjacent(mp)));
}

TEST_CASE("matched pair equivalence on random data over F5") {
    Rng rng(202);
    FDAlgebra a3f = make_a3(F5());
    FDAlgebra z2f = FDAlgebra::zero(F5(), 2);
    for (int trial = 0; trial < 25; ++trial) {
        JJMatchedPair mp{a3f, z2f,
                         {rng.matrix(F5(), 2, 2), rng.matrix(F5(), 2, 2), rng.matrix(F5(), 2, 2)},
                         {rng.matrix(F5(), 3, 3), rng.matrix(F5(), 3, 3)}};
        CHECK(bool(is_matched_pair(mp)) ==
              bool(check_structure(bicrossed_product(mp), StructureKind::jacobi_jordan)));
    }
}
