#include "testutil.hpp"

#include <doctest.h>

using namespace jjtest;

TEST_CASE("scalar arithmetic over Q is canonical") {
    Scalar a = Scalar::fraction(2, 4);
    CHECK(a.str() == "1/2");
    CHECK((a + a).is_one());
    CHECK((a - a).is_zero());
    Scalar b = Scalar::fraction(-3, -6);
    CHECK(b.str() == "1/2");  // positive denominator, reduced
    CHECK(Scalar::fraction(1, -2).str() == "-1/2");
    CHECK((a * Scalar::integer(4, Q())).str() == "2");
    CHECK(a.inverse().str() == "2");
}

TEST_CASE("scalar arithmetic in F_p") {
    Field f7 = Field::prime(7);
    Scalar a = Scalar::integer(5, f7), b = Scalar::integer(4, f7);
    CHECK((a + b).res() == 2);
    CHECK((a * b).res() == 6);
    CHECK((a - b).res() == 1);
    CHECK((-a).res() == 2);
    CHECK(a.inverse().res() == 3);  // 5*3 = 15 = 1 mod 7
    CHECK((Scalar::integer(-1, f7)).res() == 6);
    CHECK_THROWS_AS(Scalar::zero(f7).inverse(), const error&);
    CHECK_THROWS_AS(Field::prime(6), const error&);
}

TEST_CASE("field mismatch is rejected") {
    Scalar a = Scalar::one(Q()), b = Scalar::one(F5());
    CHECK_THROWS_AS(a + b, const field_mismatch_error&);
    CHECK_THROWS_AS((void)(a == b), const field_mismatch_error&);
}

TEST_CASE("Q to F_p reduction") {
    Scalar half = Scalar::fraction(1, 2);
    CHECK(half.to_field(F5()).res() == 3);  // 2*3 = 1 mod 5
    Scalar fifth = Scalar::fraction(1, 5);
    CHECK_THROWS_AS(fifth.to_field(F5()), const field_mismatch_error&);
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::from_rows(Q(), {{1, 0}, {0, 0}})) == 1);
    CHECK(rank(Matrix(Q(), 3, 3)) == 0);
    CHECK(rank(Matrix::from_rows(Q(), {{1, 2}, {2, 4}})) == 1);  // row 2 = 2 row 1
}

TEST_CASE("kernel basis follows the RREF free-column convention") {
    std::vector<Vec> k = kernel_basis(Matrix::from_rows(Q(), {{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == Scalar::integer(-1, Q()));
    CHECK(k[0][1] == Scalar::one(Q()));

    CHECK(kernel_basis(Matrix::identity(Q(), 2)).empty());

    Matrix m = Matrix::from_rows(Q(), {{1, 2}, {2, 4}});
    std::vector<Vec> k2 = kernel_basis(m);
    REQUIRE(k2.size() == 1);
    CHECK(m.apply(k2[0]).is_zero());  // independent oracle: multiply back
}

TEST_CASE("inverse examples") {
    CHECK(inverse(Matrix::identity(Q(), 3)) == Matrix::identity(Q(), 3));

    Matrix m2(F5(), 1, 1);
    m2.at(0, 0) = Scalar::integer(2, F5());
    CHECK(inverse(m2).at(0, 0).res() == 3);  // 2*3 = 1 mod 5

    Matrix m3 = Matrix::from_rows(Q(), {{1, 1}, {0, 1}});
    Matrix inv = inverse(m3);
    CHECK(inv == Matrix::from_rows(Q(), {{1, -1}, {0, 1}}));
    CHECK(m3 * inv == Matrix::identity(Q(), 2));
    CHECK(inv * m3 == Matrix::identity(Q(), 2));

    CHECK_THROWS_AS(inverse(Matrix(Q(), 2, 2)), const singular_matrix_error&);
}

TEST_CASE("rank + nullity and inverse round trip on random matrices") {
    Rng rng(11);
    for (Field f : {Q(), F5()}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng.gen() % 4, c = 1 + rng.gen() % 4;
            Matrix m = rng.matrix(f, r, c);
            std::vector<Vec> k = kernel_basis(m);
            CHECK(rank(m) + k.size() == c);
            for (const Vec& v : k) CHECK(m.apply(v).is_zero());

            Matrix s = rng.matrix(f, 3, 3);
            if (rank(s) == 3) {
                Matrix inv = inverse(s);
                CHECK(s * inv == Matrix::identity(f, 3));
                CHECK(inv * s == Matrix::identity(f, 3));
            } else {
                CHECK_THROWS_AS(inverse(s), const singular_matrix_error&);
            }
        }
    }
}

TEST_CASE("determinism: identical inputs give identical kernels") {
    Rng rng(7);
    Matrix m = rng.matrix(F5(), 4, 5);
    std::vector<Vec> k1 = kernel_basis(m), k2 = kernel_basis(m);
    REQUIRE(k1.size() == k2.size());
    for (std::size_t i = 0; i < k1.size(); ++i) CHECK(k1[i] == k2[i]);
}

TEST_CASE("solve reports inconsistent systems") {
    Matrix m = Matrix::from_rows(Q(), {{1, 2}, {2, 4}});
    Vec good(Q(), 2), bad(Q(), 2);
    good[0] = Scalar::one(Q());
    good[1] = Scalar::integer(2, Q());
    bad[0] = Scalar::one(Q());
    bad[1] = Scalar::integer(3, Q());
    auto sol = solve(m, good);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == good);
    CHECK(!solve(m, bad).has_value());
}

TEST_CASE("tensor flat order is lexicographic") {
    Tensor t(Q(), {2, 3, 2});
    CHECK(t.flat_size() == 12);
    CHECK(t.flat_index({1, 2, 1}) == 11);
    CHECK(t.flat_index({0, 1, 0}) == 2);
    CHECK_THROWS_AS(t.flat_index({0, 3, 0}), const dimension_error&);
}

TEST_CASE("exact arithmetic survives denominator blowup") {
    // repeated conjugation-style products on rationals with growing denominators
    Matrix m = Matrix::from_rows(Q(), {{1, 1}, {0, 1}});
    m.at(0, 1) = Scalar::fraction(1, 3);
    Matrix acc = Matrix::identity(Q(), 2);
    for (int i = 0; i < 20; ++i) acc = acc * m;
    CHECK(acc.at(0, 1) == Scalar::fraction(20, 3));
}
