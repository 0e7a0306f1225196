#pragma once

// Shared fixtures and deterministic random generators for the test suites.

#include "jjalg/cohomology.hpp"
#include "jjalg/deformation.hpp"
#include "jjalg/search.hpp"

#include <random>

namespace jjtest {

using namespace jjalg;

// e1*e1 = e2 = e3*e3
inline FDAlgebra make_a3(Field f) {
    Tensor c(f, {3, 3, 3});
    c.at({0, 0, 1}) = Scalar::one(f);
    c.at({2, 2, 1}) = Scalar::one(f);
    return FDAlgebra(f, 3, std::move(c));
}

// e1*e1 = e2, e1*e4 = e4*e1 = e4 (fails Jacobi unless char = 2)
inline FDAlgebra make_a4x(Field f, bool allow_small_char = false) {
    Tensor c(f, {4, 4, 4});
    c.at({0, 0, 1}) = Scalar::one(f);
    c.at({0, 3, 3}) = Scalar::one(f);
    c.at({3, 0, 3}) = Scalar::one(f);
    return FDAlgebra(f, 4, std::move(c), {}, allow_small_char);
}

// e1.e1 = e2 (left pre-Jacobi-Jordan)
inline FDAlgebra make_p2(Field f) {
    Tensor c(f, {2, 2, 2});
    c.at({0, 0, 1}) = Scalar::one(f);
    return FDAlgebra(f, 2, std::move(c));
}

// T(e2) = e2, T(e3) = 2e3 over A3 with the regular representation
inline JJRelRB make_b2_ctx(Field f) {
    Matrix t(f, 3, 3);
    t.at(1, 1) = Scalar::one(f);
    t.at(2, 2) = Scalar::integer(2, f);
    return JJRelRB(regular_representation(make_a3(f)), LinearMap(std::move(t)));
}

// T(e1) = e2 over A3 with the regular representation
inline JJRelRB make_a2_ctx(Field f) {
    Matrix t(f, 3, 3);
    t.at(1, 0) = Scalar::one(f);
    return JJRelRB(regular_representation(make_a3(f)), LinearMap(std::move(t)));
}

// T'_{y,b} = [[2b, 0], [y, b]] over P2 with the regular birepresentation
inline PreJJRelRB make_tprime_ctx(Field f, long y, long b) {
    Matrix t(f, 2, 2);
    t.at(0, 0) = Scalar::integer(2 * b, f);
    t.at(1, 0) = Scalar::integer(y, f);
    t.at(1, 1) = Scalar::integer(b, f);
    return PreJJRelRB(regular_birepresentation(make_p2(f)), LinearMap(std::move(t)));
}

// T_{y,b} = [[0, 0], [y, b]]
inline PreJJRelRB make_t_ctx(Field f, long y, long b) {
    Matrix t(f, 2, 2);
    t.at(1, 0) = Scalar::integer(y, f);
    t.at(1, 1) = Scalar::integer(b, f);
    return PreJJRelRB(regular_birepresentation(make_p2(f)), LinearMap(std::move(t)));
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    Scalar scalar(Field f) {
        if (f.is_rational()) {
            long num = static_cast<long>(gen() % 9) - 4;
            long den = static_cast<long>(gen() % 3) + 1;
            return Scalar::fraction(num, den);
        }
        return Scalar::integer(static_cast<long>(gen() % f.characteristic()), f);
    }
    Vec vec(Field f, std::size_t n) {
        Vec v(f, n);
        for (std::size_t i = 0; i < n; ++i) v[i] = scalar(f);
        return v;
    }
    Matrix matrix(Field f, std::size_t r, std::size_t c) {
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = scalar(f);
        return m;
    }
    Cochain cochain(Field f, std::size_t degree, std::size_t v_dim, std::size_t a_dim) {
        Cochain c = Cochain::zero(f, degree, v_dim, a_dim);
        for (std::size_t i = 0; i < c.coeffs.flat_size(); ++i) c.coeffs.flat(i) = scalar(f);
        return c;
    }
    // random element of the span of the given cochain basis
    Cochain span_element(Field f, const std::vector<Cochain>& basis, std::size_t degree,
                         std::size_t v_dim, std::size_t a_dim) {
        Cochain c = Cochain::zero(f, degree, v_dim, a_dim);
        for (const Cochain& b : basis) c.coeffs = c.coeffs + b.coeffs.scaled(scalar(f));
        return c;
    }
};

inline Field Q() { return Field::rationals(); }
inline Field F5() { return Field::prime(5); }

}  // namespace jjtest
