#include "testutil.hpp"

#include <doctest.h>

using namespace jjtest;

TEST_CASE("A3 products") {
    FDAlgebra a3 = make_a3(Q());
    Vec e1 = a3.basis(0), e2 = a3.basis(1), e3 = a3.basis(2);
    CHECK(a3.multiply(e1, e1) == e2);
    CHECK(a3.multiply(e1, e3).is_zero());
    // bilinearity: (2e1 + e3)*e1 = 2e2
    Vec x = e1.scaled(Scalar::integer(2, Q())) + e3;
    CHECK(a3.multiply(x, e1) == e2.scaled(Scalar::integer(2, Q())));
}

TEST_CASE("left and right multiplication operators") {
    FDAlgebra a3 = make_a3(Q());
    CHECK(a3.left_mult(a3.basis(1)).matrix().is_zero());  // e2 * A3 = 0
    Rng rng(3);
    Vec x = rng.vec(Q(), 3);
    CHECK(a3.left_mult(x) == a3.right_mult(x));  // commutative table

    FDAlgebra p2 = make_p2(Q());
    LinearMap r1 = p2.right_mult(p2.basis(0));
    CHECK(r1.apply(p2.basis(0)) == p2.basis(1));  // e1 . e1 = e2
    CHECK(r1.apply(p2.basis(1)).is_zero());
}

TEST_CASE("jacobian values") {
    FDAlgebra a3 = make_a3(Q());
    CHECK(a3.jacobian(a3.basis(0), a3.basis(0), a3.basis(2)).is_zero());
    FDAlgebra z4 = FDAlgebra::zero(Q(), 4);
    Rng rng(5);
    CHECK(z4.jacobian(rng.vec(Q(), 4), rng.vec(Q(), 4), rng.vec(Q(), 4)).is_zero());
    // the documented discrepancy: J(e1,e1,e4) = 2e4 on A4x over Q
    FDAlgebra a4x = make_a4x(Q());
    Vec j = a4x.jacobian(a4x.basis(0), a4x.basis(0), a4x.basis(3));
    CHECK(j == a4x.basis(3).scaled(Scalar::integer(2, Q())));
}

TEST_CASE("jacobian is invariant under cyclic permutation") {
    Rng rng(17);
    FDAlgebra a4x = make_a4x(Q());
    for (int i = 0; i < 25; ++i) {
        Vec x = rng.vec(Q(), 4), y = rng.vec(Q(), 4), z = rng.vec(Q(), 4);
        Vec j = a4x.jacobian(x, y, z);
        CHECK(j == a4x.jacobian(y, z, x));
        CHECK(j == a4x.jacobian(z, x, y));
    }
}

TEST_CASE("anti-associator values") {
    FDAlgebra p2 = make_p2(Q());
    CHECK(p2.anti_associator(p2.basis(0), p2.basis(0), p2.basis(0)).is_zero());
    Rng rng(9);
    Vec zero(Q(), 2);
    CHECK(p2.anti_associator(rng.vec(Q(), 2), rng.vec(Q(), 2), zero).is_zero());
}

TEST_CASE("structure checks with witnesses") {
    CHECK(check_structure(make_a3(Q()), StructureKind::jacobi_jordan));
    CHECK(check_structure(make_p2(Q()), StructureKind::left_prejj));

    Check c = check_structure(make_a4x(Q()), StructureKind::jacobi_jordan);
    CHECK(!c);
    CHECK(c.condition == "jacobi");
    CHECK(c.where == std::vector<std::size_t>{0, 0, 3});
    CHECK(c.value == "2e4");

    Field f2 = Field::prime(2);
    CHECK(check_structure(make_a4x(f2, true), StructureKind::jacobi_jordan));
}

TEST_CASE("jacobi_jordan check implies vanishing jacobian on random vectors") {
    Rng rng(23);
    for (Field f : {Q(), F5()}) {
        FDAlgebra a3 = make_a3(f);
        REQUIRE(check_structure(a3, StructureKind::jacobi_jordan));
        for (int i = 0; i < 100; ++i)
            CHECK(a3.jacobian(rng.vec(f, 3), rng.vec(f, 3), rng.vec(f, 3)).is_zero());
    }
}

TEST_CASE("left pre-JJ is equivalent to the sub-adjacent product identity") {
    // Aasso(x,y,z) + Aasso(y,x,z) = 0  <=>  (x*y).z = -x.(y.z) - y.(x.z)
    FDAlgebra p2 = make_p2(Q());
    FDAlgebra sub = sub_adjacent(p2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                Vec lhs = p2.multiply(sub.product_of_basis(i, j), p2.basis(k));
                Vec rhs = -p2.multiply(p2.basis(i), p2.product_of_basis(j, k)) -
                          p2.multiply(p2.basis(j), p2.product_of_basis(i, k));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("sub-adjacent algebra") {
    FDAlgebra p2 = make_p2(Q());
    FDAlgebra sub = sub_adjacent(p2);
    CHECK(sub.product_of_basis(0, 0) == p2.basis(1).scaled(Scalar::integer(2, Q())));
    CHECK(check_structure(sub, StructureKind::jacobi_jordan));

    FDAlgebra z3 = FDAlgebra::zero(Q(), 3);
    CHECK(sub_adjacent(z3) == z3);

    // commutative left pre-JJ: product doubles
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(sub.product_of_basis(i, j) ==
                  p2.product_of_basis(i, j).scaled(Scalar::integer(2, Q())));

    // not a pre-JJ algebra -> error
    CHECK_THROWS_AS(sub_adjacent(make_a4x(Q())), const precondition_error&);
}

TEST_CASE("tensor product with a commutative associative algebra") {
    FDAlgebra a3 = make_a3(Q());
    // 1-dim unital: u*u = u -> isomorphic copy of A3
    Tensor cu(Q(), {1, 1, 1});
    cu.at({0, 0, 0}) = Scalar::one(Q());
    FDAlgebra unital(Q(), 1, std::move(cu));
    FDAlgebra t1 = tensor_product_jj(a3, unital);
    CHECK(t1.dim() == 3);
    CHECK(t1.structure() == a3.structure());

    // 1-dim zero algebra -> everything vanishes
    FDAlgebra z1 = FDAlgebra::zero(Q(), 1);
    FDAlgebra t2 = tensor_product_jj(a3, z1);
    CHECK(t2.structure().is_zero());

    // dimension check with a 2-dim factor
    Tensor cl(Q(), {2, 2, 2});
    cl.at({0, 0, 0}) = Scalar::one(Q());
    cl.at({0, 1, 1}) = Scalar::one(Q());
    cl.at({1, 0, 1}) = Scalar::one(Q());
    FDAlgebra l2(Q(), 2, std::move(cl));  // unital: e1 = unit, e2*e2 = 0
    REQUIRE(check_structure(l2, StructureKind::comm_assoc));
    FDAlgebra t3 = tensor_product_jj(a3, l2);
    CHECK(t3.dim() == 6);
    CHECK(check_structure(t3, StructureKind::jacobi_jordan));

    // A3 happens to be commutative associative as well (all triple products
    // vanish), so it is admissible on both sides
    CHECK(check_structure(a3, StructureKind::comm_assoc));
    CHECK(check_structure(tensor_product_jj(a3, a3), StructureKind::jacobi_jordan));

    // A4x is neither Jacobi-Jordan nor associative
    FDAlgebra a4x = make_a4x(Q());
    CHECK_THROWS_AS(tensor_product_jj(a3, a4x), const precondition_error&);
    CHECK_THROWS_AS(tensor_product_jj(a4x, a3), const precondition_error&);
}

TEST_CASE("algebra morphisms") {
    FDAlgebra a3 = make_a3(Q());
    CHECK(is_algebra_morphism(LinearMap::identity(Q(), 3), a3, a3));
    CHECK(is_algebra_morphism(LinearMap::zero(Q(), 3, 3), a3, a3));
    // swap e1 <-> e3, fix e2: the table is symmetric under it
    Matrix sw(Q(), 3, 3);
    sw.at(0, 2) = sw.at(1, 1) = sw.at(2, 0) = Scalar::one(Q());
    CHECK(is_algebra_morphism(LinearMap(sw), a3, a3));
    // scaling by 2 is not a morphism (unless the product vanishes)
    CHECK(!is_algebra_morphism(LinearMap(Matrix::identity(Q(), 3).scaled(Scalar::integer(2, Q()))),
                               a3, a3));
}

TEST_CASE("Rota-Baxter operators of weight lambda") {
    FDAlgebra a3 = make_a3(Q());
    Scalar zero = Scalar::zero(Q());
    CHECK(is_rota_baxter_weight(a3, LinearMap::zero(Q(), 3, 3), zero));
    CHECK(is_rota_baxter_weight(a3, LinearMap::zero(Q(), 3, 3), Scalar::integer(7, Q())));

    Matrix r(Q(), 3, 3);
    r.at(1, 0) = Scalar::one(Q());  // e1 -> e2
    CHECK(is_rota_baxter_weight(a3, LinearMap(r), zero));

    Matrix r2(Q(), 3, 3);
    r2.at(2, 0) = Scalar::one(Q());  // e1 -> e3
    Check c = is_rota_baxter_weight(a3, LinearMap(r2), zero);
    CHECK(!c);
    CHECK(c.where == std::vector<std::size_t>{0, 0});
}

TEST_CASE("characteristic 2 and 3 are gated") {
    CHECK_THROWS_AS(make_a4x(Field::prime(2)), const precondition_error&);
    CHECK_THROWS_AS(FDAlgebra::zero(Field::prime(3), 2), const precondition_error&);
    CHECK_NOTHROW(FDAlgebra::zero(Field::prime(3), 2, true));
    CHECK_NOTHROW(FDAlgebra::zero(Field::prime(5), 2));
}

TEST_CASE("degenerate dimensions") {
    FDAlgebra z0 = FDAlgebra::zero(Q(), 0);
    CHECK(check_structure(z0, StructureKind::jacobi_jordan));
    CHECK(check_structure(z0, StructureKind::left_prejj));
    FDAlgebra z1 = FDAlgebra::zero(Q(), 1);
    CHECK(z1.multiply(z1.basis(0), z1.basis(0)).is_zero());
}
