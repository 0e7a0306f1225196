#include "jjalg/algebra.hpp"

namespace jjalg {

std::vector<std::string> default_labels(std::size_t dim) {
    std::vector<std::string> l;
    l.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) l.push_back("e" + std::to_string(i + 1));
    return l;
}

std::string format_lincomb(const Vec& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Scalar c = v[i];
        bool neg = false;
        if (c.field().is_rational() && sgn(c.rat()) < 0) {
            neg = true;
            c = -c;
        }
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string lbl = i < labels.size() ? labels[i] : "e" + std::to_string(i + 1);
        if (c.is_one())
            out += lbl;
        else
            out += c.str() + lbl;
    }
    return out.empty() ? "0" : out;
}

std::string Check::describe(const std::vector<std::string>& labels) const {
    if (ok) return "ok";
    std::string s = condition;
    if (!where.empty()) {
        s += "(";
        for (std::size_t k = 0; k < where.size(); ++k) {
            if (k) s += ",";
            s += where[k] < labels.size() ? labels[where[k]] : "e" + std::to_string(where[k] + 1);
        }
        s += ")";
    }
    if (!value.empty()) s += " -> " + value;
    return s;
}

const char* kind_name(StructureKind k) {
    switch (k) {
        case StructureKind::commutative: return "commutative";
        case StructureKind::jacobi_jordan: return "jacobi_jordan";
        case StructureKind::left_prejj: return "left_prejj";
        case StructureKind::right_prejj: return "right_prejj";
        case StructureKind::comm_assoc: return "comm_assoc";
    }
    return "?";
}

FDAlgebra::FDAlgebra(Field field, std::size_t dim, Tensor c, std::vector<std::string> labels,
                     bool allow_small_char)
    : field_(field), dim_(dim), c_(std::move(c)), labels_(std::move(labels)) {
    if (c_.shape() != std::vector<std::size_t>{dim, dim, dim})
        throw dimension_error("structure constants must have shape (dim,dim,dim)");
    require_same_field(field_, c_.field(), "structure constants");
    std::uint32_t p = field_.characteristic();
    if ((p == 2 || p == 3) && !allow_small_char)
        throw precondition_error("characteristic " + std::to_string(p) +
                                 " requires the explicit small-characteristic override");
    if (labels_.empty()) labels_ = default_labels(dim_);
    if (labels_.size() != dim_) throw dimension_error("label count mismatch");
}

FDAlgebra FDAlgebra::zero(Field f, std::size_t dim, bool allow_small_char) {
    return FDAlgebra(f, dim, Tensor(f, {dim, dim, dim}), {}, allow_small_char);
}

Vec FDAlgebra::product_of_basis(std::size_t i, std::size_t j) const {
    Vec v(field_, dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c_.at({i, j, k});
    return v;
}

Vec FDAlgebra::multiply(const Vec& x, const Vec& y) const {
    require_same_field(field_, x.field(), "multiply");
    require_same_field(field_, y.field(), "multiply");
    if (x.size() != dim_ || y.size() != dim_) throw dimension_error("multiply: vector length");
    Vec r(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar f = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& c = c_.at({i, j, k});
                if (!c.is_zero()) r[k] += f * c;
            }
        }
    }
    return r;
}

LinearMap FDAlgebra::left_mult(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec col = multiply(x, basis(j));
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return LinearMap(std::move(m));
}

LinearMap FDAlgebra::right_mult(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec col = multiply(basis(j), x);
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
    }
    return LinearMap(std::move(m));
}

Vec FDAlgebra::jacobian(const Vec& x, const Vec& y, const Vec& z) const {
    return multiply(multiply(x, y), z) + multiply(multiply(y, z), x) +
           multiply(multiply(z, x), y);
}

Vec FDAlgebra::anti_associator(const Vec& x, const Vec& y, const Vec& z) const {
    return multiply(multiply(x, y), z) + multiply(x, multiply(y, z));
}

FDAlgebra FDAlgebra::to_field(Field target, bool allow_small_char) const {
    return FDAlgebra(target, dim_, c_.to_field(target), labels_, allow_small_char);
}

std::string FDAlgebra::format(const Vec& v) const { return format_lincomb(v, labels_); }

bool FDAlgebra::operator==(const FDAlgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && c_ == o.c_;
}

Check check_structure(const FDAlgebra& alg, StructureKind kind) {
    std::size_t n = alg.dim();
    auto value = [&](const Vec& v) { return alg.format(v); };

    if (kind == StructureKind::commutative || kind == StructureKind::jacobi_jordan ||
        kind == StructureKind::comm_assoc) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec d = alg.product_of_basis(i, j) - alg.product_of_basis(j, i);
                if (!d.is_zero()) return Check::fail("commutativity", {i, j}, value(d));
            }
    }
    switch (kind) {
        case StructureKind::commutative:
            return Check::pass();
        case StructureKind::jacobi_jordan:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        Vec v = alg.jacobian(alg.basis(i), alg.basis(j), alg.basis(k));
                        if (!v.is_zero()) return Check::fail("jacobi", {i, j, k}, value(v));
                    }
            return Check::pass();
        case StructureKind::left_prejj:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        Vec v = alg.anti_associator(alg.basis(i), alg.basis(j), alg.basis(k)) +
                                alg.anti_associator(alg.basis(j), alg.basis(i), alg.basis(k));
                        if (!v.is_zero())
                            return Check::fail("left_skew_anti_associator", {i, j, k}, value(v));
                    }
            return Check::pass();
        case StructureKind::right_prejj:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        Vec v = alg.anti_associator(alg.basis(i), alg.basis(j), alg.basis(k)) +
                                alg.anti_associator(alg.basis(i), alg.basis(k), alg.basis(j));
                        if (!v.is_zero())
                            return Check::fail("right_skew_anti_associator", {i, j, k}, value(v));
                    }
            return Check::pass();
        case StructureKind::comm_assoc:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k) {
                        Vec v = alg.multiply(alg.product_of_basis(i, j), alg.basis(k)) -
                                alg.multiply(alg.basis(i), alg.product_of_basis(j, k));
                        if (!v.is_zero()) return Check::fail("associativity", {i, j, k}, value(v));
                    }
            return Check::pass();
    }
    throw error("unknown structure kind");
}

FDAlgebra sub_adjacent(const FDAlgebra& alg) {
    Check c = check_structure(alg, StructureKind::left_prejj);
    if (!c)
        throw precondition_error("sub_adjacent: not a left pre-Jacobi-Jordan algebra: " +
                                 c.describe(alg.labels()));
    std::size_t n = alg.dim();
    Tensor t(alg.field(), {n, n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t.at({i, j, k}) = alg.structure().at({i, j, k}) + alg.structure().at({j, i, k});
    return FDAlgebra(alg.field(), n, std::move(t), alg.labels(), true);
}

FDAlgebra tensor_product_jj(const FDAlgebra& a, const FDAlgebra& l) {
    require_same_field(a.field(), l.field(), "tensor product");
    Check ca = check_structure(a, StructureKind::jacobi_jordan);
    if (!ca)
        throw precondition_error("tensor_product_jj: left factor is not Jacobi-Jordan: " +
                                 ca.describe(a.labels()));
    Check cl = check_structure(l, StructureKind::comm_assoc);
    if (!cl)
        throw precondition_error(
            "tensor_product_jj: right factor is not commutative associative: " +
            cl.describe(l.labels()));
    std::size_t n = a.dim(), m = l.dim();
    Tensor t(a.field(), {n * m, n * m, n * m});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t q = 0; q < m; ++q)
                    for (std::size_t k = 0; k < n; ++k) {
                        const Scalar& ck = a.structure().at({i, j, k});
                        if (ck.is_zero()) continue;
                        for (std::size_t r = 0; r < m; ++r) {
                            const Scalar& cr = l.structure().at({p, q, r});
                            if (cr.is_zero()) continue;
                            t.at({i * m + p, j * m + q, k * m + r}) += ck * cr;
                        }
                    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p)
            labels.push_back(a.labels()[i] + "(x)" + l.labels()[p]);
    return FDAlgebra(a.field(), n * m, std::move(t), std::move(labels), true);
}

bool is_algebra_morphism(const LinearMap& f, const FDAlgebra& a, const FDAlgebra& b) {
    require_same_field(a.field(), b.field(), "morphism");
    if (f.src_dim() != a.dim() || f.dst_dim() != b.dim())
        throw dimension_error("morphism: map dimensions do not match the algebras");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Vec lhs = f.apply(a.product_of_basis(i, j));
            Vec rhs = b.multiply(f.apply(a.basis(i)), f.apply(a.basis(j)));
            if (lhs != rhs) return false;
        }
    return true;
}

Check is_rota_baxter_weight(const FDAlgebra& alg, const LinearMap& r, const Scalar& lambda) {
    require_same_field(alg.field(), r.field(), "rota-baxter");
    require_same_field(alg.field(), lambda.field(), "rota-baxter weight");
    if (r.src_dim() != alg.dim() || r.dst_dim() != alg.dim())
        throw dimension_error("rota-baxter: operator must be square on the algebra");
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            Vec ri = r.apply(alg.basis(i));
            Vec rj = r.apply(alg.basis(j));
            Vec lhs = alg.multiply(ri, rj);
            Vec inner = alg.multiply(ri, alg.basis(j)) + alg.multiply(alg.basis(i), rj) +
                        alg.product_of_basis(i, j).scaled(lambda);
            Vec rhs = r.apply(inner);
            if (lhs != rhs)
                return Check::fail("rota_baxter_weight", {i, j}, alg.format(lhs - rhs));
        }
    return Check::pass();
}

}  // namespace jjalg
