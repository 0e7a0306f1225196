#pragma once

#include "jjalg/relative_rb.hpp"

namespace jjalg {

/// Degree-n cochain f: V^(x)n -> A, coefficients in a tensor of shape
/// (v_dim ... v_dim, a_dim); degree 0 is a single A-vector.
struct Cochain {
    std::size_t degree;
    Tensor coeffs;

    static Cochain zero(Field f, std::size_t degree, std::size_t v_dim, std::size_t a_dim);
    static std::vector<std::size_t> shape_for(std::size_t degree, std::size_t v_dim,
                                              std::size_t a_dim);
    /// f(e_{i1},...,e_{in}) as an A-vector.
    Vec slice(const std::vector<std::size_t>& idx) const;
    void set_slice(const std::vector<std::size_t>& idx, const Vec& v);
    bool operator==(const Cochain& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

struct CohomologyDims {
    std::size_t dim_c;  // dim C^k
    std::size_t dim_a;  // dim A^k
    std::size_t dim_z;  // dim ker(d^k on C^k)
    std::size_t dim_b;  // dim im(delta^{k-1} on A^{k-1}); 0 at k = 0
    std::size_t dim_h;  // dim_z - dim_b
};

/// Zigzag complex of a relative Rota-Baxter operator on a Jacobi-Jordan
/// algebra: cochains of (V, *_T) with coefficients in (A, rho_T).
/// C^0 = A; A^n = Hom(wedge^n V, A).
class JJComplex {
public:
    explicit JJComplex(JJRelRB ctx, std::size_t degree_cap = 4);

    const JJRelRB& ctx() const { return ctx_; }
    const JJInduced& induced() const { return ind_; }
    std::size_t v_dim() const { return ctx_.v_dim(); }
    std::size_t a_dim() const { return ctx_.a_dim(); }
    std::size_t degree_cap() const { return cap_; }
    Field field() const { return ctx_.alg().field(); }
    std::size_t c_dim(std::size_t n) const;

    Cochain d(const Cochain& f) const;
    /// Requires f in A^n; throws precondition_error with a witness tuple otherwise.
    Cochain delta(const Cochain& f) const;
    Check in_a_space(const Cochain& f) const;
    std::vector<Cochain> a_space_basis(std::size_t n) const;

    CohomologyDims cohomology(std::size_t k) const;

    /// The paper's explicit closedness criteria at degree 0 and 1
    /// (delta-closedness; coincides with d-closedness at degree 0).
    bool is_closed_explicit(const Cochain& f) const;

private:
    JJRelRB ctx_;
    JJInduced ind_;
    std::size_t cap_;
};

/// Pre-Jacobi-Jordan version: cochains of (V, ._T) with coefficients in
/// (A, rho_T, mu_T). C^0 = A^0 = {x : rho_T(u ._T v)x + rho_T(u)rho_T(v)x = 0};
/// A^n (n >= 2) sits in Hom(wedge^{n-1} V (x) V, A) cut out by the cyclic
/// condition coupling *_T in the first slot with ._T in the last.
class PreJJComplex {
public:
    explicit PreJJComplex(PreJJRelRB ctx, std::size_t degree_cap = 4);

    const PreJJRelRB& ctx() const { return ctx_; }
    const PreJJInduced& induced() const { return ind_; }
    std::size_t v_dim() const { return ctx_.v_dim(); }
    std::size_t a_dim() const { return ctx_.a_dim(); }
    std::size_t degree_cap() const { return cap_; }
    Field field() const { return ctx_.alg().field(); }
    /// Dimension of the full multilinear space at degree n (degree 0: dim A;
    /// the constrained C^0 = A^0 dimension is reported by cohomology(0)).
    std::size_t c_dim(std::size_t n) const;

    Cochain d(const Cochain& f) const;
    Cochain delta(const Cochain& f) const;
    Check in_a_space(const Cochain& f) const;
    std::vector<Cochain> a_space_basis(std::size_t n) const;

    CohomologyDims cohomology(std::size_t k) const;

private:
    PreJJRelRB ctx_;
    PreJJInduced ind_;
    std::size_t cap_;
};

}  // namespace jjalg
