#include "jjalg/deformation.hpp"

namespace jjalg {

namespace {

Vec psi_apply(const Tensor& psi, const Vec& a, const Vec& b) {
    std::size_t n = psi.shape()[0];
    Vec r(a.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            Scalar f = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = psi.at({i, j, k});
                if (!c.is_zero()) r[k] += f * c;
            }
        }
    }
    return r;
}

}  // namespace

Check generates_rb_deformation(const JJRelRB& ctx, const LinearMap& z) {
    Check pre = is_relative_rb(ctx);
    if (!pre) throw precondition_error("generator: base T is not an operator: " + pre.describe());
    Check c2 = is_relative_rb(JJRelRB(ctx.rep, z));
    if (!c2) return Check::fail("generator_rb", c2.where, c2.value);
    std::size_t m = ctx.v_dim();
    Field f = ctx.alg().field();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec u = Vec::basis(f, m, a), v = Vec::basis(f, m, b);
            Vec tu = ctx.t.apply(u), tv = ctx.t.apply(v);
            Vec zu = z.apply(u), zv = z.apply(v);
            Vec d = ctx.alg().multiply(tu, zv) + ctx.alg().multiply(tv, zu) -
                    ctx.t.apply(ctx.rep.action(zu).apply(v) + ctx.rep.action(zv).apply(u)) -
                    z.apply(ctx.rep.action(tu).apply(v) + ctx.rep.action(tv).apply(u));
            if (!d.is_zero())
                return Check::fail("generator_derivation", {a, b}, ctx.alg().format(d));
        }
    return Check::pass();
}

Check generates_rb_deformation(const PreJJRelRB& ctx, const LinearMap& j) {
    Check pre = is_relative_rb(ctx);
    if (!pre) throw precondition_error("generator: base T is not an operator: " + pre.describe());
    Check c2 = is_relative_rb(PreJJRelRB(ctx.rep, j));
    if (!c2) return Check::fail("generator_rb", c2.where, c2.value);
    std::size_t m = ctx.v_dim();
    Field f = ctx.alg().field();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec u = Vec::basis(f, m, a), v = Vec::basis(f, m, b);
            Vec tu = ctx.t.apply(u), tv = ctx.t.apply(v);
            Vec ju = j.apply(u), jv = j.apply(v);
            Vec d = ctx.alg().multiply(tu, jv) + ctx.alg().multiply(ju, tv) -
                    ctx.t.apply(ctx.rep.rho_action(ju).apply(v) + ctx.rep.mu_action(jv).apply(u)) -
                    j.apply(ctx.rep.rho_action(tu).apply(v) + ctx.rep.mu_action(tv).apply(u));
            if (!d.is_zero())
                return Check::fail("generator_derivation", {a, b}, ctx.alg().format(d));
        }
    return Check::pass();
}

LinearMap element_coboundary(const JJRelRB& ctx, const Vec& x) {
    std::size_t n = ctx.a_dim(), m = ctx.v_dim();
    Field f = ctx.alg().field();
    Matrix out(f, n, m);
    Matrix rx = ctx.rep.action(x);
    for (std::size_t a = 0; a < m; ++a) {
        Vec col = ctx.alg().multiply(ctx.t.apply(Vec::basis(f, m, a)), x) -
                  ctx.t.apply(rx.apply(Vec::basis(f, m, a)));
        for (std::size_t k = 0; k < n; ++k) out.at(k, a) = col[k];
    }
    return LinearMap(std::move(out));
}

LinearMap element_coboundary(const PreJJRelRB& ctx, const Vec& x) {
    std::size_t n = ctx.a_dim(), m = ctx.v_dim();
    Field f = ctx.alg().field();
    Matrix out(f, n, m);
    Matrix act = ctx.rep.rho_action(x) + ctx.rep.mu_action(x);
    for (std::size_t a = 0; a < m; ++a) {
        Vec tv = ctx.t.apply(Vec::basis(f, m, a));
        Vec col = ctx.alg().multiply(tv, x) + ctx.alg().multiply(x, tv) -
                  ctx.t.apply(act.apply(Vec::basis(f, m, a)));
        for (std::size_t k = 0; k < n; ++k) out.at(k, a) = col[k];
    }
    return LinearMap(std::move(out));
}

namespace {

// (39j), (40j): Id + tL_x stays a morphism.
Check jj_morphism_conditions(const FDAlgebra& alg, const Vec& x) {
    std::size_t n = alg.dim();
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
            Vec ey = alg.basis(y), ez = alg.basis(z);
            Vec q1 = alg.multiply(alg.multiply(x, ey), alg.multiply(x, ez));
            if (!q1.is_zero()) return Check::fail("cond_39", {y, z}, alg.format(q1));
            Vec q2 = alg.multiply(alg.multiply(x, ey), ez) +
                     alg.multiply(alg.multiply(ez, x), ey) -
                     alg.multiply(alg.multiply(ey, ez), x);
            if (!q2.is_zero()) return Check::fail("cond_40", {y, z}, alg.format(q2));
        }
    return Check::pass();
}

// (43j), (44j): Id + t rho(x) intertwines.
Check jj_action_conditions(const Representation& rep, const Vec& x) {
    const FDAlgebra& alg = rep.alg;
    Matrix rx = rep.action(x);
    for (std::size_t y = 0; y < alg.dim(); ++y) {
        Matrix rxy = rep.action(alg.multiply(x, alg.basis(y)));
        Matrix q1 = rxy * rx;
        if (!q1.is_zero()) return Check::fail("cond_43", {y}, "nonzero");
        Matrix q2 = rxy + rep.rho[y] * rx - rx * rep.rho[y];
        if (!q2.is_zero()) return Check::fail("cond_44", {y}, "nonzero");
    }
    return Check::pass();
}

// (39), (40): Id + tL_x + tR_x stays a morphism.
Check prejj_morphism_conditions(const FDAlgebra& alg, const Vec& x) {
    std::size_t n = alg.dim();
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
            Vec ey = alg.basis(y), ez = alg.basis(z);
            Vec xy = alg.multiply(x, ey), yx = alg.multiply(ey, x);
            Vec xz = alg.multiply(x, ez), zx = alg.multiply(ez, x);
            Vec q1 = alg.multiply(xy, xz) + alg.multiply(xy, zx) + alg.multiply(yx, xz) +
                     alg.multiply(yx, zx);
            if (!q1.is_zero()) return Check::fail("cond_39", {y, z}, alg.format(q1));
            Vec yz = alg.multiply(ey, ez);
            Vec q2 = alg.multiply(xy, ez) + alg.multiply(yx, ez) + alg.multiply(ey, xz) +
                     alg.multiply(ey, zx) - alg.multiply(x, yz) - alg.multiply(yz, x);
            if (!q2.is_zero()) return Check::fail("cond_40", {y, z}, alg.format(q2));
        }
    return Check::pass();
}

// (43)-(46): Id + t rho(x) + t mu(x) intertwines rho and mu.
Check prejj_action_conditions(const BiRepresentation& rep, const Vec& x) {
    const FDAlgebra& alg = rep.alg;
    Matrix ax = rep.rho_action(x) + rep.mu_action(x);
    for (std::size_t y = 0; y < alg.dim(); ++y) {
        Vec ey = alg.basis(y);
        Vec xy = alg.multiply(x, ey), yx = alg.multiply(ey, x);
        Matrix rsum = rep.rho_action(xy) + rep.rho_action(yx);
        Matrix q1 = rsum * ax;
        if (!q1.is_zero()) return Check::fail("cond_43", {y}, "nonzero");
        Matrix q2 = rsum + rep.rho[y] * ax - ax * rep.rho[y];
        if (!q2.is_zero()) return Check::fail("cond_44", {y}, "nonzero");
        Matrix msum = rep.mu_action(xy) + rep.mu_action(yx);
        Matrix q3 = msum * ax;
        if (!q3.is_zero()) return Check::fail("cond_45", {y}, "nonzero");
        Matrix q4 = msum + rep.mu[y] * ax - ax * rep.mu[y];
        if (!q4.is_zero()) return Check::fail("cond_46", {y}, "nonzero");
    }
    return Check::pass();
}

}  // namespace

Check deformation_equivalence(const JJRelRB& ctx, const LinearMap& j1, const LinearMap& j2,
                              const Vec& x) {
    Check m = jj_morphism_conditions(ctx.alg(), x);
    if (!m) return m;
    Check a = jj_action_conditions(ctx.rep, x);
    if (!a) return a;
    // (41j): J2 - J1 = -coboundary(x)
    Matrix diff = j2.matrix() - j1.matrix();
    if (diff != (-element_coboundary(ctx, x).matrix()))
        return Check::fail("cond_41", {}, "J2 - J1 != -d(x)");
    // (42j): J1 rho(x) = L_x J2
    Matrix lhs = j1.matrix() * ctx.rep.action(x);
    Matrix rhs = ctx.alg().left_mult(x).matrix() * j2.matrix();
    if (lhs != rhs) return Check::fail("cond_42", {}, "J1 rho(x) != L_x J2");
    return Check::pass();
}

Check deformation_equivalence(const PreJJRelRB& ctx, const LinearMap& j1, const LinearMap& j2,
                              const Vec& x) {
    Check m = prejj_morphism_conditions(ctx.alg(), x);
    if (!m) return m;
    Check a = prejj_action_conditions(ctx.rep, x);
    if (!a) return a;
    Matrix diff = j2.matrix() - j1.matrix();
    if (diff != (-element_coboundary(ctx, x).matrix()))
        return Check::fail("cond_41", {}, "J2 - J1 != -d(x)");
    Matrix act = ctx.rep.rho_action(x) + ctx.rep.mu_action(x);
    Matrix lr = ctx.alg().left_mult(x).matrix() + ctx.alg().right_mult(x).matrix();
    if (j1.matrix() * act != lr * j2.matrix())
        return Check::fail("cond_42", {}, "J1 (rho+mu)(x) != (L+R)_x J2");
    return Check::pass();
}

bool is_nijenhuis_element(const JJRelRB& ctx, const Vec& x) {
    if (!jj_morphism_conditions(ctx.alg(), x)) return false;
    if (!jj_action_conditions(ctx.rep, x)) return false;
    // (N1): L_x T rho(x) - L_x L_x T = 0
    Matrix lx = ctx.alg().left_mult(x).matrix();
    Matrix q = lx * ctx.t.matrix() * ctx.rep.action(x) - lx * lx * ctx.t.matrix();
    return q.is_zero();
}

bool is_nijenhuis_element(const PreJJRelRB& ctx, const Vec& x) {
    if (!prejj_morphism_conditions(ctx.alg(), x)) return false;
    if (!prejj_action_conditions(ctx.rep, x)) return false;
    // (O1): (L_x+R_x) T (rho(x)+mu(x)) - (L_x+R_x)^2 T = 0
    Matrix lr = ctx.alg().left_mult(x).matrix() + ctx.alg().right_mult(x).matrix();
    Matrix act = ctx.rep.rho_action(x) + ctx.rep.mu_action(x);
    Matrix q = lr * ctx.t.matrix() * act - lr * lr * ctx.t.matrix();
    return q.is_zero();
}

namespace {

LinearMap conjugation_route(const Matrix& phi_a, const Matrix& phi_v, const LinearMap& t) {
    Matrix inv = inverse(phi_a);  // throws singular_matrix_error
    return LinearMap(inv * t.matrix() * phi_v);
}

}  // namespace

LinearMap trivial_deformation(const JJRelRB& ctx, const Vec& x, const Scalar& t) {
    if (!is_nijenhuis_element(ctx, x))
        throw precondition_error("trivial_deformation: x is not a Nijenhuis element");
    Field f = ctx.alg().field();
    Matrix phi_a = Matrix::identity(f, ctx.a_dim()) + ctx.alg().left_mult(x).matrix().scaled(t);
    Matrix phi_v = Matrix::identity(f, ctx.v_dim()) + ctx.rep.action(x).scaled(t);
    LinearMap tt = conjugation_route(phi_a, phi_v, ctx.t);
    LinearMap direct = LinearMap(ctx.t.matrix() - element_coboundary(ctx, x).matrix().scaled(t));
    if (tt != direct)
        throw internal_check_error("conjugation and coboundary routes disagree");
    Check c = is_relative_rb(JJRelRB(ctx.rep, tt));
    if (!c) throw internal_check_error("trivial deformation is not an operator: " + c.describe());
    return tt;
}

LinearMap trivial_deformation(const PreJJRelRB& ctx, const Vec& x, const Scalar& t) {
    if (!is_nijenhuis_element(ctx, x))
        throw precondition_error("trivial_deformation: x is not a Nijenhuis element");
    Field f = ctx.alg().field();
    Matrix phi_a = Matrix::identity(f, ctx.a_dim()) +
                   (ctx.alg().left_mult(x).matrix() + ctx.alg().right_mult(x).matrix()).scaled(t);
    Matrix phi_v = Matrix::identity(f, ctx.v_dim()) +
                   (ctx.rep.rho_action(x) + ctx.rep.mu_action(x)).scaled(t);
    LinearMap tt = conjugation_route(phi_a, phi_v, ctx.t);
    LinearMap direct = LinearMap(ctx.t.matrix() - element_coboundary(ctx, x).matrix().scaled(t));
    if (tt != direct)
        throw internal_check_error("conjugation and coboundary routes disagree");
    Check c = is_relative_rb(PreJJRelRB(ctx.rep, tt));
    if (!c) throw internal_check_error("trivial deformation is not an operator: " + c.describe());
    return tt;
}

Check generates_mult_deformation(const FDAlgebra& alg, const Tensor& psi) {
    Check s = check_structure(alg, StructureKind::jacobi_jordan);
    if (!s)
        throw precondition_error("mult deformation: base algebra is not Jacobi-Jordan: " +
                                 s.describe(alg.labels()));
    if (psi.shape() != std::vector<std::size_t>{alg.dim(), alg.dim(), alg.dim()})
        throw dimension_error("psi must have shape (dim,dim,dim)");
    std::size_t n = alg.dim();
    auto slice = [&](std::size_t i, std::size_t j) {
        Vec v(alg.field(), n);
        for (std::size_t k = 0; k < n; ++k) v[k] = psi.at({i, j, k});
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec d = slice(i, j) - slice(j, i);
            if (!d.is_zero()) return Check::fail("psi_symmetric", {i, j}, alg.format(d));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ei = alg.basis(i), ej = alg.basis(j), ek = alg.basis(k);
                Vec jac = psi_apply(psi, psi_apply(psi, ei, ej), ek) +
                          psi_apply(psi, psi_apply(psi, ej, ek), ei) +
                          psi_apply(psi, psi_apply(psi, ek, ei), ej);
                if (!jac.is_zero()) return Check::fail("psi_jacobi", {i, j, k}, alg.format(jac));
                Vec coc = alg.multiply(ei, slice(j, k)) + alg.multiply(ej, slice(k, i)) +
                          alg.multiply(ek, slice(i, j)) +
                          psi_apply(psi, ei, alg.product_of_basis(j, k)) +
                          psi_apply(psi, ej, alg.product_of_basis(k, i)) +
                          psi_apply(psi, ek, alg.product_of_basis(i, j));
                if (!coc.is_zero()) return Check::fail("psi_cocycle", {i, j, k}, alg.format(coc));
            }
    return Check::pass();
}

Tensor nijenhuis_coboundary(const FDAlgebra& alg, const LinearMap& n) {
    std::size_t d = alg.dim();
    Tensor t(alg.field(), {d, d, d});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec v = alg.multiply(alg.basis(i), n.apply(alg.basis(j))) +
                    alg.multiply(n.apply(alg.basis(i)), alg.basis(j)) -
                    n.apply(alg.product_of_basis(i, j));
            for (std::size_t k = 0; k < d; ++k) t.at({i, j, k}) = v[k];
        }
    return t;
}

Check mult_deformation_equivalence(const FDAlgebra& alg, const Tensor& psi1, const Tensor& psi2,
                                   const LinearMap& n) {
    Check g1 = generates_mult_deformation(alg, psi1);
    if (!g1) throw precondition_error("psi1 does not generate a deformation: " + g1.describe());
    Check g2 = generates_mult_deformation(alg, psi2);
    if (!g2) throw precondition_error("psi2 does not generate a deformation: " + g2.describe());
    std::size_t d = alg.dim();
    Tensor cob = nijenhuis_coboundary(alg, n);
    auto slice = [&](const Tensor& t, std::size_t i, std::size_t j) {
        Vec v(alg.field(), d);
        for (std::size_t k = 0; k < d; ++k) v[k] = t.at({i, j, k});
        return v;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec ei = alg.basis(i), ej = alg.basis(j);
            Vec d1 = slice(psi2, i, j) - slice(psi1, i, j) - slice(cob, i, j);
            if (!d1.is_zero()) return Check::fail("equiv_coboundary", {i, j}, alg.format(d1));
            Vec d2 = psi_apply(psi1, ei, n.apply(ej)) + psi_apply(psi1, n.apply(ei), ej) -
                     n.apply(slice(psi2, i, j)) +
                     alg.multiply(n.apply(ei), n.apply(ej));
            if (!d2.is_zero()) return Check::fail("equiv_t2", {i, j}, alg.format(d2));
            Vec d3 = psi_apply(psi1, n.apply(ei), n.apply(ej));
            if (!d3.is_zero()) return Check::fail("equiv_t3", {i, j}, alg.format(d3));
        }
    return Check::pass();
}

bool is_nijenhuis_operator(const FDAlgebra& alg, const LinearMap& n) {
    require_same_field(alg.field(), n.field(), "nijenhuis");
    if (n.src_dim() != alg.dim() || n.dst_dim() != alg.dim())
        throw dimension_error("nijenhuis: operator must be square on the algebra");
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            Vec ei = alg.basis(i), ej = alg.basis(j);
            Vec ni = n.apply(ei), nj = n.apply(ej);
            Vec lhs = alg.multiply(ni, nj);
            Vec inner = alg.multiply(ni, ej) + alg.multiply(ei, nj) -
                        n.apply(alg.product_of_basis(i, j));
            if (lhs != n.apply(inner)) return false;
        }
    return true;
}

FDAlgebra deformed_algebra(const FDAlgebra& alg, const LinearMap& n, StructureKind kind) {
    if (!is_nijenhuis_operator(alg, n))
        throw precondition_error("deformed_algebra: N is not a Nijenhuis operator");
    Check s = check_structure(alg, kind);
    if (!s)
        throw precondition_error(std::string("deformed_algebra: base algebra fails ") +
                                 kind_name(kind) + ": " + s.describe(alg.labels()));
    std::size_t d = alg.dim();
    Tensor t(alg.field(), {d, d, d});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec v = alg.multiply(n.apply(alg.basis(i)), alg.basis(j)) +
                    alg.multiply(alg.basis(i), n.apply(alg.basis(j))) -
                    n.apply(alg.product_of_basis(i, j));
            for (std::size_t k = 0; k < d; ++k) t.at({i, j, k}) = v[k];
        }
    FDAlgebra out(alg.field(), d, std::move(t), alg.labels(), true);
    Check post = check_structure(out, kind);
    if (!post)
        throw internal_check_error(std::string("A_N fails ") + kind_name(kind) + ": " +
                                   post.describe(out.labels()));
    if (!is_algebra_morphism(n, out, alg))
        throw internal_check_error("N is not a morphism A_N -> A");
    return out;
}

namespace {

LinearMap nt_matrix(Field f, std::size_t n, std::size_t m, const LinearMap& t,
                    const Scalar& lambda) {
    Matrix mat(f, n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) mat.at(i, n + j) = t.matrix().at(i, j);
    for (std::size_t j = 0; j < m; ++j) mat.at(n + j, n + j) = -lambda;
    return LinearMap(std::move(mat));
}

}  // namespace

NTResult build_nt(const Representation& rep, const LinearMap& t, const Scalar& lambda) {
    require_same_field(rep.alg.field(), lambda.field(), "build_nt lambda");
    return NTResult{semidirect_product(rep),
                    nt_matrix(rep.alg.field(), rep.alg.dim(), rep.v_dim, t, lambda)};
}

NTResult build_nt(const BiRepresentation& rep, const LinearMap& t, const Scalar& lambda) {
    require_same_field(rep.alg.field(), lambda.field(), "build_nt lambda");
    return NTResult{semidirect_product(rep),
                    nt_matrix(rep.alg.field(), rep.alg.dim(), rep.v_dim, t, lambda)};
}

namespace {

Tensor product_tensor_jj(const Representation& rep, const LinearMap& t) {
    std::size_t m = rep.v_dim;
    Field f = rep.alg.field();
    Tensor ct(f, {m, m, m});
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec prod = rep.action(t.apply(Vec::basis(f, m, a))).apply(Vec::basis(f, m, b)) +
                       rep.action(t.apply(Vec::basis(f, m, b))).apply(Vec::basis(f, m, a));
            for (std::size_t k = 0; k < m; ++k) ct.at({a, b, k}) = prod[k];
        }
    return ct;
}

Tensor product_tensor_prejj(const BiRepresentation& rep, const LinearMap& t) {
    std::size_t m = rep.v_dim;
    Field f = rep.alg.field();
    Tensor ct(f, {m, m, m});
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec prod = rep.rho_action(t.apply(Vec::basis(f, m, a))).apply(Vec::basis(f, m, b)) +
                       rep.mu_action(t.apply(Vec::basis(f, m, b))).apply(Vec::basis(f, m, a));
            for (std::size_t k = 0; k < m; ++k) ct.at({a, b, k}) = prod[k];
        }
    return ct;
}

}  // namespace

Tensor induced_product_deformation(const JJRelRB& ctx, const LinearMap& z) {
    Check g = generates_rb_deformation(ctx, z);
    if (!g) throw precondition_error("Z does not generate a deformation: " + g.describe());
    std::size_t m = ctx.v_dim();
    Field f = ctx.alg().field();
    Tensor psi(f, {m, m, m});
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec v = ctx.rep.action(z.apply(Vec::basis(f, m, a))).apply(Vec::basis(f, m, b)) +
                    ctx.rep.action(z.apply(Vec::basis(f, m, b))).apply(Vec::basis(f, m, a));
            for (std::size_t k = 0; k < m; ++k) psi.at({a, b, k}) = v[k];
        }
    // product of T + Z must equal product of T plus psi, coefficient-wise
    Tensor lhs = product_tensor_jj(ctx.rep, LinearMap(ctx.t.matrix() + z.matrix()));
    if (lhs != product_tensor_jj(ctx.rep, ctx.t) + psi)
        throw internal_check_error("induced deformation is not linear in t");
    return psi;
}

Tensor induced_product_deformation(const PreJJRelRB& ctx, const LinearMap& j) {
    Check g = generates_rb_deformation(ctx, j);
    if (!g) throw precondition_error("J does not generate a deformation: " + g.describe());
    std::size_t m = ctx.v_dim();
    Field f = ctx.alg().field();
    Tensor omega(f, {m, m, m});
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec v = ctx.rep.rho_action(j.apply(Vec::basis(f, m, a))).apply(Vec::basis(f, m, b)) +
                    ctx.rep.mu_action(j.apply(Vec::basis(f, m, b))).apply(Vec::basis(f, m, a));
            for (std::size_t k = 0; k < m; ++k) omega.at({a, b, k}) = v[k];
        }
    Tensor lhs = product_tensor_prejj(ctx.rep, LinearMap(ctx.t.matrix() + j.matrix()));
    if (lhs != product_tensor_prejj(ctx.rep, ctx.t) + omega)
        throw internal_check_error("induced deformation is not linear in t");
    return omega;
}

Check rb_nijenhuis_composition(const JJRelRB& ctx, const LinearMap& n) {
    Check pre = is_relative_rb(ctx);
    if (!pre) throw precondition_error("composition: T is not an operator: " + pre.describe());
    if (!is_nijenhuis_operator(ctx.alg(), n))
        throw precondition_error("composition: N is not a Nijenhuis operator");
    LinearMap nt = n.compose(ctx.t);
    std::size_t m = ctx.v_dim();
    Field f = ctx.alg().field();
    Check result = Check::pass();
    for (std::size_t a = 0; a < m && result.ok; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec u = Vec::basis(f, m, a), v = Vec::basis(f, m, b);
            Vec tu = ctx.t.apply(u), tv = ctx.t.apply(v);
            Vec ntu = nt.apply(u), ntv = nt.apply(v);
            Vec lhs = n.apply(ctx.alg().multiply(ntu, tv) + ctx.alg().multiply(tu, ntv));
            Vec rhs = n.apply(ctx.t.apply(ctx.rep.action(ntu).apply(v) +
                                          ctx.rep.action(ntv).apply(u))) +
                      n.apply(nt.apply(ctx.rep.action(tu).apply(v) + ctx.rep.action(tv).apply(u)));
            if (lhs != rhs) {
                result = Check::fail("composition", {a, b}, ctx.alg().format(lhs - rhs));
                break;
            }
        }
    bool nt_is_rb = static_cast<bool>(is_relative_rb(JJRelRB(ctx.rep, nt)));
    if (nt_is_rb != result.ok)
        throw internal_check_error("composition identity disagrees with NT being an operator");
    return result;
}

Check rb_nijenhuis_composition(const PreJJRelRB& ctx, const LinearMap& n) {
    Check pre = is_relative_rb(ctx);
    if (!pre) throw precondition_error("composition: T is not an operator: " + pre.describe());
    if (!is_nijenhuis_operator(ctx.alg(), n))
        throw precondition_error("composition: N is not a Nijenhuis operator");
    LinearMap nt = n.compose(ctx.t);
    std::size_t m = ctx.v_dim();
    Field f = ctx.alg().field();
    Check result = Check::pass();
    for (std::size_t a = 0; a < m && result.ok; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec u = Vec::basis(f, m, a), v = Vec::basis(f, m, b);
            Vec tu = ctx.t.apply(u), tv = ctx.t.apply(v);
            Vec ntu = nt.apply(u), ntv = nt.apply(v);
            Vec lhs = n.apply(ctx.alg().multiply(ntu, tv) + ctx.alg().multiply(tu, ntv));
            Vec rhs = n.apply(ctx.t.apply(ctx.rep.rho_action(ntu).apply(v) +
                                          ctx.rep.mu_action(ntv).apply(u))) +
                      n.apply(nt.apply(ctx.rep.rho_action(tu).apply(v) +
                                       ctx.rep.mu_action(tv).apply(u)));
            if (lhs != rhs) {
                result = Check::fail("composition", {a, b}, ctx.alg().format(lhs - rhs));
                break;
            }
        }
    bool nt_is_rb = static_cast<bool>(is_relative_rb(PreJJRelRB(ctx.rep, nt)));
    if (nt_is_rb != result.ok)
        throw internal_check_error("composition identity disagrees with NT being an operator");
    return result;
}

}  // namespace jjalg
