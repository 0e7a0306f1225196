#pragma once

#include "jjalg/deformation.hpp"

#include <functional>

namespace jjalg {
namespace search {

struct EnumOptions {
    std::uint64_t budget = 10'000'000;
    unsigned workers = 0;  // 0 = hardware default
};

/// Complete lexicographically sorted list (row-major entry order, digits
/// 0..p-1) of rows x cols matrices over F_p satisfying the predicate.
/// Throws budget_error when p^(rows*cols) exceeds the budget.
std::vector<Matrix> enumerate_matrices(Field fp, std::size_t rows, std::size_t cols,
                                       const std::function<bool(const Matrix&)>& pred,
                                       const EnumOptions& opt = {});

/// All vectors over F_p of the given length satisfying the predicate.
std::vector<Vec> enumerate_vectors(Field fp, std::size_t len,
                                   const std::function<bool(const Vec&)>& pred,
                                   const EnumOptions& opt = {});

/// Exhaustive relative Rota-Baxter operator searches (native mod-p path).
std::vector<Matrix> enumerate_relative_rb(const Representation& rep, const EnumOptions& opt = {});
std::vector<Matrix> enumerate_relative_rb(const BiRepresentation& rep,
                                          const EnumOptions& opt = {});

/// Exhaustive Nijenhuis-operator search on an F_p algebra (native path).
std::vector<Matrix> enumerate_nijenhuis(const FDAlgebra& alg, const EnumOptions& opt = {});

/// Exhaustive Nijenhuis-element lists for F_p contexts.
std::vector<Vec> enumerate_nijenhuis_elements(const JJRelRB& ctx, const EnumOptions& opt = {});
std::vector<Vec> enumerate_nijenhuis_elements(const PreJJRelRB& ctx, const EnumOptions& opt = {});

struct FamilyPoint {
    std::vector<Scalar> params;
    bool pass;
    std::string witness;
};

struct FamilyReport {
    std::vector<FamilyPoint> points;
    std::size_t failures = 0;
    bool all_pass() const { return failures == 0; }
};

/// Evaluates `predicate` on `family(params)` over the cartesian product of
/// the grid axes (lexicographic order).
FamilyReport verify_family(const std::function<LinearMap(const std::vector<Scalar>&)>& family,
                           const std::function<Check(const LinearMap&)>& predicate,
                           const std::vector<std::vector<Scalar>>& grid_axes);

/// Convenience axis {lo, lo+1, ..., hi} over the given field.
std::vector<Scalar> integer_axis(long lo, long hi, Field f);

}  // namespace search
}  // namespace jjalg
