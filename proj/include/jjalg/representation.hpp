#pragma once

#include "jjalg/algebra.hpp"

namespace jjalg {

/// Representation of a Jacobi-Jordan algebra: rho[i] is the action matrix of
/// the i-th basis element on V. Validity (rho(x*y) = -rho(x)rho(y)-rho(y)rho(x))
/// is a checkable predicate, not a construction-time invariant.
struct Representation {
    FDAlgebra alg;
    std::size_t v_dim;
    std::vector<Matrix> rho;

    Representation(FDAlgebra a, std::size_t vd, std::vector<Matrix> r);
    Matrix action(const Vec& x) const;  // sum_i x_i rho[i]
    bool operator==(const Representation& o) const {
        return alg == o.alg && v_dim == o.v_dim && rho == o.rho;
    }
};

/// Birepresentation (rho, mu) of a left pre-Jacobi-Jordan algebra.
struct BiRepresentation {
    FDAlgebra alg;
    std::size_t v_dim;
    std::vector<Matrix> rho;
    std::vector<Matrix> mu;

    BiRepresentation(FDAlgebra a, std::size_t vd, std::vector<Matrix> r, std::vector<Matrix> m);
    Matrix rho_action(const Vec& x) const;
    Matrix mu_action(const Vec& x) const;
    bool operator==(const BiRepresentation& o) const {
        return alg == o.alg && v_dim == o.v_dim && rho == o.rho && mu == o.mu;
    }
};

Check is_representation(const Representation& r);
Check is_birepresentation(const BiRepresentation& r);

Representation zero_representation(const FDAlgebra& alg, std::size_t v_dim);
BiRepresentation zero_birepresentation(const FDAlgebra& alg, std::size_t v_dim);

/// rho = L on the algebra itself.
Representation regular_representation(const FDAlgebra& alg);
/// (rho, mu) = (L, R) on the algebra itself.
BiRepresentation regular_birepresentation(const FDAlgebra& alg);

/// B^f: rho(a)b := f(a).b for a morphism f: A -> B.
Representation pullback_representation(const LinearMap& f, const FDAlgebra& a, const FDAlgebra& b);

/// Dual representation pi(x) = rho(x)^T in the dual basis.
Representation dual_representation(const Representation& r);

/// (V, rho+mu) as a representation of the sub-adjacent algebra.
Representation sum_representation(const BiRepresentation& r);

/// Semidirect product Aated V; validity of the action data is NOT required
/// (the "if and only if" direction of the theorems needs invalid inputs).
FDAlgebra semidirect_product(const Representation& r);
FDAlgebra semidirect_product(const BiRepresentation& r);

/// Representation of alg on A (+) V: a |-> blockdiag(L(a), rho(a)).
Representation extended_representation(const Representation& r);
/// Pre-JJ version: rho(a) = blockdiag(L(a), rho(a)), mu(a) = blockdiag(R(a), mu(a)).
BiRepresentation extended_birepresentation(const BiRepresentation& r);

struct JJMatchedPair {
    FDAlgebra a1, a2;
    std::vector<Matrix> rho1;  // action of A1 basis on A2
    std::vector<Matrix> rho2;  // action of A2 basis on A1
};

struct PreJJMatchedPair {
    FDAlgebra a1, a2;
    std::vector<Matrix> rho1, mu1;  // A1 acting on A2
    std::vector<Matrix> rho2, mu2;  // A2 acting on A1
};

/// Action validity plus the displayed matched-pair conditions; reports
/// an invalid action as a failed check rather than throwing, so the
/// bicrossed-product equivalence can be exercised on arbitrary data.
Check is_matched_pair(const JJMatchedPair& mp);
Check is_matched_pair(const PreJJMatchedPair& mp);

FDAlgebra bicrossed_product(const JJMatchedPair& mp);
FDAlgebra bicrossed_product(const PreJJMatchedPair& mp);

/// (A1^C, A2^C, rho1+mu1, rho2+mu2); requires is_matched_pair(mp).
JJMatchedPair matched_pair_subadjacent(const PreJJMatchedPair& mp);

}  // namespace jjalg
