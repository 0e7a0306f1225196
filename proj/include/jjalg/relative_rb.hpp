#pragma once

#include "jjalg/representation.hpp"

namespace jjalg {

/// Relative Rota-Baxter data on a Jacobi-Jordan algebra: T: V -> A with
/// respect to a representation (V, rho).
struct JJRelRB {
    Representation rep;
    LinearMap t;

    JJRelRB(Representation r, LinearMap op);
    const FDAlgebra& alg() const { return rep.alg; }
    std::size_t a_dim() const { return rep.alg.dim(); }
    std::size_t v_dim() const { return rep.v_dim; }
};

/// Pre-Jacobi-Jordan version with respect to a birepresentation (V, rho, mu).
struct PreJJRelRB {
    BiRepresentation rep;
    LinearMap t;

    PreJJRelRB(BiRepresentation r, LinearMap op);
    const FDAlgebra& alg() const { return rep.alg; }
    std::size_t a_dim() const { return rep.alg.dim(); }
    std::size_t v_dim() const { return rep.v_dim; }
};

/// T(u)*T(v) = T(rho(Tu)v + rho(Tv)u) on all basis pairs of V.
Check is_relative_rb(const JJRelRB& ctx);
/// T(u).T(v) = T(rho(Tu)v + mu(Tv)u).
Check is_relative_rb(const PreJJRelRB& ctx);

/// Gr(T) = {(Tv, v)} closed under the semidirect product, decided by
/// an independent membership computation (linear solve in A (+) V).
bool graph_subalgebra_check(const JJRelRB& ctx);
bool graph_subalgebra_check(const PreJJRelRB& ctx);

/// The lift T^(a+v) = Tv on A (+) V; weight-0 Rota-Baxter there iff
/// T is a relative Rota-Baxter operator.
LinearMap lift_operator(const JJRelRB& ctx);
LinearMap lift_operator(const PreJJRelRB& ctx);

/// Induced structures of a relative Rota-Baxter operator: the algebra
/// V_T on V and the action of V_T back on A. The theorem-backed
/// postconditions (structure check, action validity, T a morphism) are
/// enforced at construction.
struct JJInduced {
    FDAlgebra v_alg;       // (V, *_T)
    Representation a_rep;  // (A, rho_T), a representation of v_alg
};
struct PreJJInduced {
    FDAlgebra v_alg;         // (V, ._T)
    BiRepresentation a_rep;  // (A, rho_T, mu_T)
};

JJInduced induced_structures(const JJRelRB& ctx);
PreJJInduced induced_structures(const PreJJRelRB& ctx);

/// u.v := rho(Tu)v, a left pre-Jacobi-Jordan product on V whose
/// sub-adjacent algebra is (V, *_T).
FDAlgebra induced_prejj_from_jj(const JJRelRB& ctx);

struct MorphismPair {
    LinearMap phi_a;  // A -> A
    LinearMap phi_v;  // V -> V
};

/// phi_a an algebra morphism, T.phi_v = phi_a.T', and the intertwining
/// conditions; `from` holds T', `to` holds T.
bool is_rb_morphism(const MorphismPair& p, const JJRelRB& from, const JJRelRB& to);
bool is_rb_morphism(const MorphismPair& p, const PreJJRelRB& from, const PreJJRelRB& to);

/// phi_a^{-1} . T . phi_v; requires phi_a an invertible algebra morphism,
/// phi_v invertible, and the intertwining conditions. The result is again
/// a relative Rota-Baxter operator (enforced).
LinearMap conjugate_rb(const MorphismPair& p, const JJRelRB& ctx);
LinearMap conjugate_rb(const MorphismPair& p, const PreJJRelRB& ctx);

/// Compatibility of two relative Rota-Baxter operators over the same
/// algebra and representation: the mixed identity
///   T1(u).T2(v) + T2(u).T1(v) = T1(rho(T2u)v + mu(T2v)u) + T2(rho(T1u)v + mu(T1v)u),
/// equivalent to every pencil k1 T1 + k2 T2 (k1,k2 nonzero) being an operator.
Check are_compatible(const JJRelRB& c1, const JJRelRB& c2);
Check are_compatible(const PreJJRelRB& c1, const PreJJRelRB& c2);

/// Variant applying mu to the u argument in both summands
/// (rho(Tu)v + mu(Tu)v); not equivalent to the pencil condition.
/// Kept as a negative fixture.
Check are_compatible_uu_variant(const PreJJRelRB& c1, const PreJJRelRB& c2);

/// N = T1 . T2^{-1} for a compatible pair with invertible T2;
/// a Nijenhuis operator on the algebra (enforced).
LinearMap nijenhuis_from_compatible(const JJRelRB& c1, const JJRelRB& c2);
LinearMap nijenhuis_from_compatible(const PreJJRelRB& c1, const PreJJRelRB& c2);

/// A relative Rota-Baxter operator of a left pre-Jacobi-Jordan algebra is one
/// of its sub-adjacent algebra with respect to (V, rho+mu).
JJRelRB subadjacent_context(const PreJJRelRB& ctx);

}  // namespace jjalg
