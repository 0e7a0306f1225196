#pragma once

#include "jjalg/relative_rb.hpp"

namespace jjalg {

/// Does Z generate a linear deformation T + tZ of the operator?
/// Both displayed identities checked on basis pairs; equivalently the
/// t-polynomial identity coefficient-wise (degree 2, so this is exact).
/// On failure `condition` names the identity that broke
/// ("generator_rb" = Z itself an operator, "generator_derivation").
Check generates_rb_deformation(const JJRelRB& ctx, const LinearMap& z);
Check generates_rb_deformation(const PreJJRelRB& ctx, const LinearMap& j);

/// The degree-0 coboundary of x, as a map V -> A:
/// JJ:     dx = L_x T - T rho(x)
/// pre-JJ: dx = L_x T + R_x T - T rho(x) - T mu(x)
/// Trivial deformations add J = -dx to T.
LinearMap element_coboundary(const JJRelRB& ctx, const Vec& x);
LinearMap element_coboundary(const PreJJRelRB& ctx, const Vec& x);

/// All displayed equivalence conditions on x for the pair of generators.
Check deformation_equivalence(const JJRelRB& ctx, const LinearMap& j1, const LinearMap& j2,
                              const Vec& x);
Check deformation_equivalence(const PreJJRelRB& ctx, const LinearMap& j1, const LinearMap& j2,
                              const Vec& x);

bool is_nijenhuis_element(const JJRelRB& ctx, const Vec& x);
bool is_nijenhuis_element(const PreJJRelRB& ctx, const Vec& x);

/// T_t = (Id + t L_x)^{-1} T (Id + t rho(x)) for a Nijenhuis element x
/// (pre-JJ with L_x + R_x and rho(x) + mu(x)). Throws singular_matrix_error
/// when the conjugator is singular at the given t. The result equals
/// T - t * element_coboundary(x) and is again an operator (both enforced).
LinearMap trivial_deformation(const JJRelRB& ctx, const Vec& x, const Scalar& t);
LinearMap trivial_deformation(const PreJJRelRB& ctx, const Vec& x, const Scalar& t);

/// psi symmetric, psi itself Jacobi, and the 2-cocycle condition, so that
/// mu_t = * + t psi is Jacobi-Jordan for all t (degree-2 coefficient check).
Check generates_mult_deformation(const FDAlgebra& alg, const Tensor& psi);

/// delta^1 N (x,y) = x*N(y) + N(x)*y - N(x*y), as a (dim,dim,dim) tensor.
Tensor nijenhuis_coboundary(const FDAlgebra& alg, const LinearMap& n);

/// Id + tN is a morphism (A, *+t psi2) -> (A, *+t psi1) for all t.
Check mult_deformation_equivalence(const FDAlgebra& alg, const Tensor& psi1, const Tensor& psi2,
                                   const LinearMap& n);

/// N(x).N(y) = N(N(x).y + x.N(y) - N(x.y)) on all basis pairs.
bool is_nijenhuis_operator(const FDAlgebra& alg, const LinearMap& n);

/// A_N = (A, ._N) with x._N y = N(x).y + x.N(y) - N(x.y); passes the
/// given structure check and N is a morphism A_N -> A (both enforced).
FDAlgebra deformed_algebra(const FDAlgebra& alg, const LinearMap& n, StructureKind kind);

/// The block operator N_T(a+v) = (Tv, -lambda v) on the semidirect product;
/// Nijenhuis there iff T is a relative Rota-Baxter operator (any lambda).
/// Validity of T is NOT required.
struct NTResult {
    FDAlgebra semidirect;
    LinearMap nt;
};
NTResult build_nt(const Representation& rep, const LinearMap& t, const Scalar& lambda);
NTResult build_nt(const BiRepresentation& rep, const LinearMap& t, const Scalar& lambda);

/// Linear deformation of the induced product generated by a deformation
/// generator: JJ psi_Z(u,v) = rho(Zu)v + rho(Zv)u; pre-JJ omega_J(u,v) =
/// rho(Ju)v + mu(Jv)u. Returned as a (v,v,v) tensor.
Tensor induced_product_deformation(const JJRelRB& ctx, const LinearMap& z);
Tensor induced_product_deformation(const PreJJRelRB& ctx, const LinearMap& j);

/// N(NTu.Tv + Tu.NTv) = N(T(rho(NTu)v + mu(NTv)u)) + N(NT(rho(Tu)v + mu(Tv)u));
/// holds iff NT is again a relative Rota-Baxter operator (cross-checked).
Check rb_nijenhuis_composition(const JJRelRB& ctx, const LinearMap& n);
Check rb_nijenhuis_composition(const PreJJRelRB& ctx, const LinearMap& n);

}  // namespace jjalg
