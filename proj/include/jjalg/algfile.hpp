#pragma once

#include "jjalg/representation.hpp"

#include <optional>

namespace jjalg {

enum class Species { jj, prejj_left, prejj_right, plain };

const char* species_name(Species s);

/// Linear expression in named parameters with a constant term;
/// entries of an [operator family] matrix.
struct LinExpr {
    Scalar constant;
    std::vector<Scalar> coeffs;  // one per parameter

    Scalar eval(const std::vector<Scalar>& values) const;
    bool operator==(const LinExpr&) const = default;
};

struct FamilySpec {
    std::vector<std::string> params;
    std::size_t rows = 0, cols = 0;
    std::vector<LinExpr> entries;  // row-major

    LinearMap instantiate(const std::vector<Scalar>& values) const;
    bool operator==(const FamilySpec&) const = default;
};

/// One self-contained text file: an algebra plus optional representation,
/// operator, maps, element, a second algebra with matched-pair actions,
/// and an operator family. Unlisted products are zero; rationals are
/// written p/q; F_p entries are bare integers reduced mod p.
struct AlgebraFile {
    std::string name;
    Species species = Species::plain;
    std::optional<FDAlgebra> algebra;

    bool has_representation = false;
    std::size_t rep_dim = 0;
    std::vector<Matrix> rho, mu;  // mu used by prejj species only

    std::optional<LinearMap> op_t;   // [operator T], a_dim x v_dim
    std::optional<LinearMap> map_n;  // [map N], a_dim x a_dim
    std::optional<LinearMap> map_z;  // [map Z], a_dim x v_dim
    std::optional<Vec> element_x;    // [element x]

    std::string name2;
    Species species2 = Species::plain;
    std::optional<FDAlgebra> algebra2;
    std::vector<Matrix> rho1, mu1, rho2, mu2;  // [action ...] blocks

    std::optional<FamilySpec> family;

    const FDAlgebra& alg() const;
    Representation representation() const;      // jj species
    BiRepresentation birepresentation() const;  // prejj species
    bool operator==(const AlgebraFile& o) const;
};

struct ParseOptions {
    bool allow_small_char = false;
};

AlgebraFile parse_algebra_file(const std::string& text, const ParseOptions& opt = {});
AlgebraFile load_algebra_file(const std::string& path, const ParseOptions& opt = {});

/// Canonical rendering: parse(serialize(f)) == f and serialize is idempotent.
std::string serialize(const AlgebraFile& f);

}  // namespace jjalg
