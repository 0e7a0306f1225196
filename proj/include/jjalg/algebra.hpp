#pragma once

#include "jjalg/linalg.hpp"

#include <string>
#include <vector>

namespace jjalg {

/// Result of an identity check; on failure carries the first offending
/// basis tuple (lexicographic order) and the nonzero value.
struct Check {
    bool ok = true;
    std::string condition;           // identity that failed
    std::vector<std::size_t> where;  // 0-based basis indices
    std::string value;               // offending value, rendered

    explicit operator bool() const { return ok; }
    static Check pass() { return {}; }
    static Check fail(std::string condition, std::vector<std::size_t> where, std::string value) {
        return Check{false, std::move(condition), std::move(where), std::move(value)};
    }
    std::string describe(const std::vector<std::string>& labels = {}) const;
};

enum class StructureKind {
    commutative,
    jacobi_jordan,
    left_prejj,
    right_prejj,
    comm_assoc,
};

const char* kind_name(StructureKind k);

/// Finite-dimensional algebra given by structure constants:
/// e_i . e_j = sum_k c[i][j][k] e_k.
///
/// No identity is enforced at construction; commutativity, the Jacobi
/// identity etc. are checkable predicates (check_structure).
class FDAlgebra {
public:
    FDAlgebra(Field field, std::size_t dim, Tensor c, std::vector<std::string> labels = {},
              bool allow_small_char = false);
    static FDAlgebra zero(Field f, std::size_t dim, bool allow_small_char = false);

    std::size_t dim() const { return dim_; }
    Field field() const { return field_; }
    const Tensor& structure() const { return c_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Vec basis(std::size_t i) const { return Vec::basis(field_, dim_, i); }
    /// c[i][j][*] as a vector.
    Vec product_of_basis(std::size_t i, std::size_t j) const;
    Vec multiply(const Vec& x, const Vec& y) const;

    LinearMap left_mult(const Vec& x) const;   // y -> x.y
    LinearMap right_mult(const Vec& x) const;  // y -> y.x

    /// J(x,y,z) = (x.y).z + (y.z).x + (z.x).y
    Vec jacobian(const Vec& x, const Vec& y, const Vec& z) const;
    /// Aasso(x,y,z) = (x.y).z + x.(y.z)
    Vec anti_associator(const Vec& x, const Vec& y, const Vec& z) const;

    FDAlgebra to_field(Field target, bool allow_small_char = false) const;
    std::string format(const Vec& v) const;  // linear combination in basis labels

    bool operator==(const FDAlgebra& o) const;
    bool operator!=(const FDAlgebra& o) const { return !(*this == o); }

private:
    Field field_;
    std::size_t dim_;
    Tensor c_;
    std::vector<std::string> labels_;
};

/// Checks the named identity on all basis tuples (exact by multilinearity).
Check check_structure(const FDAlgebra& alg, StructureKind kind);

/// Sub-adjacent Jacobi-Jordan algebra of a left pre-Jacobi-Jordan algebra:
/// x*y = x.y + y.x. Throws precondition_error when the input fails left_prejj.
FDAlgebra sub_adjacent(const FDAlgebra& alg);

/// (A (x) L, (x (x) a) o (y (x) b) = (x*y) (x) (a.b)); basis order (i,a) lexicographic.
/// Requires a Jacobi-Jordan and l commutative associative.
FDAlgebra tensor_product_jj(const FDAlgebra& a, const FDAlgebra& l);

/// f(e_i . e_j) = f(e_i) . f(e_j) on all basis pairs.
bool is_algebra_morphism(const LinearMap& f, const FDAlgebra& a, const FDAlgebra& b);

/// r(x).r(y) = r(r(x).y + x.r(y) + lambda x.y) on all basis pairs.
Check is_rota_baxter_weight(const FDAlgebra& alg, const LinearMap& r, const Scalar& lambda);

std::string format_lincomb(const Vec& v, const std::vector<std::string>& labels);
std::vector<std::string> default_labels(std::size_t dim);

}  // namespace jjalg
