#include "jjalg/search.hpp"

#include "fp_kernel.hpp"

namespace jjalg {

namespace fpk {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > limit / base)
            throw budget_error("search space " + std::to_string(base) + "^" + std::to_string(exp) +
                               " exceeds the budget of " + std::to_string(limit) + " candidates");
        r *= base;
    }
    return r;
}

}  // namespace fpk

namespace search {

namespace {

std::uint32_t field_prime(Field f, const char* what) {
    if (f.is_rational()) throw precondition_error(std::string(what) + ": field must be F_p");
    return f.characteristic();
}

fpk::AlgF to_native(const FDAlgebra& alg) {
    std::size_t n = alg.dim();
    fpk::AlgF out{n, std::vector<std::uint64_t>(n * n * n, 0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out.c[(i * n + j) * n + k] = alg.structure().at({i, j, k}).res();
    return out;
}

fpk::RepF to_native(const std::vector<Matrix>& mats, std::size_t v_dim) {
    fpk::RepF out{v_dim, {}};
    for (const Matrix& m : mats) {
        std::vector<std::uint64_t> flat(v_dim * v_dim);
        for (std::size_t r = 0; r < v_dim; ++r)
            for (std::size_t c = 0; c < v_dim; ++c) flat[r * v_dim + c] = m.at(r, c).res();
        out.mats.push_back(std::move(flat));
    }
    return out;
}

Matrix digits_to_matrix(const std::vector<std::uint32_t>& d, Field f, std::size_t rows,
                        std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar::integer(d[r * cols + c], f);
    return m;
}

}  // namespace

std::vector<Matrix> enumerate_matrices(Field fp, std::size_t rows, std::size_t cols,
                                       const std::function<bool(const Matrix&)>& pred,
                                       const EnumOptions& opt) {
    std::uint32_t p = field_prime(fp, "enumerate_matrices");
    auto found = fpk::scan(rows * cols, p, opt.budget, opt.workers, [&]() {
        return [&, m = Matrix(fp, rows, cols)](const std::uint32_t* d) mutable {
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    m.at(r, c) = Scalar::integer(d[r * cols + c], fp);
            return pred(m);
        };
    });
    std::vector<Matrix> out;
    out.reserve(found.size());
    for (const auto& d : found) out.push_back(digits_to_matrix(d, fp, rows, cols));
    return out;
}

std::vector<Vec> enumerate_vectors(Field fp, std::size_t len,
                                   const std::function<bool(const Vec&)>& pred,
                                   const EnumOptions& opt) {
    std::uint32_t p = field_prime(fp, "enumerate_vectors");
    auto found = fpk::scan(len, p, opt.budget, opt.workers, [&]() {
        return [&, v = Vec(fp, len)](const std::uint32_t* d) mutable {
            for (std::size_t i = 0; i < len; ++i) v[i] = Scalar::integer(d[i], fp);
            return pred(v);
        };
    });
    std::vector<Vec> out;
    out.reserve(found.size());
    for (const auto& d : found) {
        Vec v(fp, len);
        for (std::size_t i = 0; i < len; ++i) v[i] = Scalar::integer(d[i], fp);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Matrix> enumerate_relative_rb(const Representation& rep, const EnumOptions& opt) {
    Field f = rep.alg.field();
    std::uint32_t p = field_prime(f, "enumerate_relative_rb");
    fpk::AlgF alg = to_native(rep.alg);
    fpk::RepF rho = to_native(rep.rho, rep.v_dim);
    std::size_t rows = rep.alg.dim(), cols = rep.v_dim;
    auto found = fpk::scan(rows * cols, p, opt.budget, opt.workers,
                           [&]() { return fpk::RbJJPred(&alg, &rho, p); });
    std::vector<Matrix> out;
    out.reserve(found.size());
    for (const auto& d : found) out.push_back(digits_to_matrix(d, f, rows, cols));
    return out;
}

std::vector<Matrix> enumerate_relative_rb(const BiRepresentation& rep, const EnumOptions& opt) {
    Field f = rep.alg.field();
    std::uint32_t p = field_prime(f, "enumerate_relative_rb");
    fpk::AlgF alg = to_native(rep.alg);
    fpk::RepF rho = to_native(rep.rho, rep.v_dim);
    fpk::RepF mu = to_native(rep.mu, rep.v_dim);
    std::size_t rows = rep.alg.dim(), cols = rep.v_dim;
    auto found = fpk::scan(rows * cols, p, opt.budget, opt.workers,
                           [&]() { return fpk::RbPreJJPred(&alg, &rho, &mu, p); });
    std::vector<Matrix> out;
    out.reserve(found.size());
    for (const auto& d : found) out.push_back(digits_to_matrix(d, f, rows, cols));
    return out;
}

std::vector<Matrix> enumerate_nijenhuis(const FDAlgebra& alg, const EnumOptions& opt) {
    Field f = alg.field();
    std::uint32_t p = field_prime(f, "enumerate_nijenhuis");
    fpk::AlgF nat = to_native(alg);
    std::size_t n = alg.dim();
    auto found =
        fpk::scan(n * n, p, opt.budget, opt.workers, [&]() { return fpk::NijenhuisPred(&nat, p); });
    std::vector<Matrix> out;
    out.reserve(found.size());
    for (const auto& d : found) out.push_back(digits_to_matrix(d, f, n, n));
    return out;
}

std::vector<Vec> enumerate_nijenhuis_elements(const JJRelRB& ctx, const EnumOptions& opt) {
    return enumerate_vectors(ctx.alg().field(), ctx.a_dim(),
                             [&](const Vec& x) { return is_nijenhuis_element(ctx, x); }, opt);
}

std::vector<Vec> enumerate_nijenhuis_elements(const PreJJRelRB& ctx, const EnumOptions& opt) {
    return enumerate_vectors(ctx.alg().field(), ctx.a_dim(),
                             [&](const Vec& x) { return is_nijenhuis_element(ctx, x); }, opt);
}

FamilyReport verify_family(const std::function<LinearMap(const std::vector<Scalar>&)>& family,
                           const std::function<Check(const LinearMap&)>& predicate,
                           const std::vector<std::vector<Scalar>>& grid_axes) {
    FamilyReport report;
    std::vector<std::size_t> shape;
    for (const auto& axis : grid_axes) shape.push_back(axis.size());
    MultiIndex mi(shape);
    for (; mi.valid(); mi.next()) {
        std::vector<Scalar> params;
        params.reserve(grid_axes.size());
        for (std::size_t k = 0; k < grid_axes.size(); ++k)
            params.push_back(grid_axes[k][mi.idx()[k]]);
        Check c = predicate(family(params));
        if (!c) ++report.failures;
        report.points.push_back(FamilyPoint{std::move(params), c.ok, c.ok ? "" : c.describe()});
    }
    return report;
}

std::vector<Scalar> integer_axis(long lo, long hi, Field f) {
    std::vector<Scalar> axis;
    for (long v = lo; v <= hi; ++v) axis.push_back(Scalar::integer(v, f));
    return axis;
}

}  // namespace search
}  // namespace jjalg
