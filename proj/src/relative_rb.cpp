#include "jjalg/relative_rb.hpp"

#include "jjalg/deformation.hpp"

namespace jjalg {

namespace {

void check_ctx_dims(const FDAlgebra& alg, std::size_t v_dim, const LinearMap& t) {
    require_same_field(alg.field(), t.field(), "relative RB context");
    if (t.src_dim() != v_dim || t.dst_dim() != alg.dim())
        throw dimension_error("relative RB context: T must map V -> A");
}

}  // namespace

JJRelRB::JJRelRB(Representation r, LinearMap op) : rep(std::move(r)), t(std::move(op)) {
    check_ctx_dims(rep.alg, rep.v_dim, t);
}

PreJJRelRB::PreJJRelRB(BiRepresentation r, LinearMap op) : rep(std::move(r)), t(std::move(op)) {
    check_ctx_dims(rep.alg, rep.v_dim, t);
}

Check is_relative_rb(const JJRelRB& ctx) {
    std::size_t m = ctx.v_dim();
    Field f = ctx.alg().field();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec tu = ctx.t.apply(Vec::basis(f, m, a));
            Vec tv = ctx.t.apply(Vec::basis(f, m, b));
            Vec lhs = ctx.alg().multiply(tu, tv);
            Vec inner = ctx.rep.action(tu).apply(Vec::basis(f, m, b)) +
                        ctx.rep.action(tv).apply(Vec::basis(f, m, a));
            Vec rhs = ctx.t.apply(inner);
            if (lhs != rhs)
                return Check::fail("relative_rb", {a, b}, ctx.alg().format(lhs - rhs));
        }
    return Check::pass();
}

Check is_relative_rb(const PreJJRelRB& ctx) {
    std::size_t m = ctx.v_dim();
    Field f = ctx.alg().field();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec tu = ctx.t.apply(Vec::basis(f, m, a));
            Vec tv = ctx.t.apply(Vec::basis(f, m, b));
            Vec lhs = ctx.alg().multiply(tu, tv);
            Vec inner = ctx.rep.rho_action(tu).apply(Vec::basis(f, m, b)) +
                        ctx.rep.mu_action(tv).apply(Vec::basis(f, m, a));
            Vec rhs = ctx.t.apply(inner);
            if (lhs != rhs)
                return Check::fail("relative_rb", {a, b}, ctx.alg().format(lhs - rhs));
        }
    return Check::pass();
}

namespace {

/// Graph closedness via the semidirect algebra: columns g_a = (T v_a, v_a)
/// span Gr(T); check every product g_a . g_b solves back into the span.
bool graph_check(const FDAlgebra& sd, const LinearMap& t, std::size_t n, std::size_t m) {
    Field f = sd.field();
    Matrix g(f, n + m, m);
    for (std::size_t a = 0; a < m; ++a) {
        Vec ta = t.apply(Vec::basis(f, m, a));
        for (std::size_t k = 0; k < n; ++k) g.at(k, a) = ta[k];
        g.at(n + a, a) = Scalar::one(f);
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec prod = sd.multiply(g.col(a), g.col(b));
            if (!solve(g, prod)) return false;
        }
    return true;
}

}  // namespace

bool graph_subalgebra_check(const JJRelRB& ctx) {
    return graph_check(semidirect_product(ctx.rep), ctx.t, ctx.a_dim(), ctx.v_dim());
}

bool graph_subalgebra_check(const PreJJRelRB& ctx) {
    return graph_check(semidirect_product(ctx.rep), ctx.t, ctx.a_dim(), ctx.v_dim());
}

namespace {

LinearMap lift(const LinearMap& t, std::size_t n, std::size_t m) {
    Matrix hat(t.field(), n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) hat.at(i, n + j) = t.matrix().at(i, j);
    return LinearMap(std::move(hat));
}

}  // namespace

LinearMap lift_operator(const JJRelRB& ctx) { return lift(ctx.t, ctx.a_dim(), ctx.v_dim()); }
LinearMap lift_operator(const PreJJRelRB& ctx) { return lift(ctx.t, ctx.a_dim(), ctx.v_dim()); }

JJInduced induced_structures(const JJRelRB& ctx) {
    Check pre = is_relative_rb(ctx);
    if (!pre)
        throw precondition_error("induced_structures: not a relative Rota-Baxter operator: " +
                                 pre.describe());
    std::size_t n = ctx.a_dim(), m = ctx.v_dim();
    Field f = ctx.alg().field();

    // u *_T v = rho(Tu)v + rho(Tv)u
    Tensor ct(f, {m, m, m});
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec prod = ctx.rep.action(ctx.t.apply(Vec::basis(f, m, a))).apply(Vec::basis(f, m, b)) +
                       ctx.rep.action(ctx.t.apply(Vec::basis(f, m, b))).apply(Vec::basis(f, m, a));
            for (std::size_t k = 0; k < m; ++k) ct.at({a, b, k}) = prod[k];
        }
    FDAlgebra v_alg(f, m, std::move(ct), {}, true);

    // rho_T(u)x = T(u)*x - T(rho(x)u)
    std::vector<Matrix> rho_t;
    for (std::size_t a = 0; a < m; ++a) {
        Matrix mat(f, n, n);
        Vec ta = ctx.t.apply(Vec::basis(f, m, a));
        for (std::size_t j = 0; j < n; ++j) {
            Vec col = ctx.alg().multiply(ta, ctx.alg().basis(j)) -
                      ctx.t.apply(ctx.rep.action(ctx.alg().basis(j)).apply(Vec::basis(f, m, a)));
            for (std::size_t k = 0; k < n; ++k) mat.at(k, j) = col[k];
        }
        rho_t.push_back(std::move(mat));
    }
    Representation a_rep(v_alg, n, std::move(rho_t));

    Check s = check_structure(v_alg, StructureKind::jacobi_jordan);
    if (!s) throw internal_check_error("induced V_T not Jacobi-Jordan: " + s.describe());
    Check r = is_representation(a_rep);
    if (!r) throw internal_check_error("induced rho_T not a representation: " + r.describe());
    if (!is_algebra_morphism(ctx.t, v_alg, ctx.alg()))
        throw internal_check_error("T is not a morphism V_T -> A");
    return JJInduced{std::move(v_alg), std::move(a_rep)};
}

PreJJInduced induced_structures(const PreJJRelRB& ctx) {
    Check pre = is_relative_rb(ctx);
    if (!pre)
        throw precondition_error("induced_structures: not a relative Rota-Baxter operator: " +
                                 pre.describe());
    std::size_t n = ctx.a_dim(), m = ctx.v_dim();
    Field f = ctx.alg().field();

    // u ._T v = rho(Tu)v + mu(Tv)u
    Tensor ct(f, {m, m, m});
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec prod =
                ctx.rep.rho_action(ctx.t.apply(Vec::basis(f, m, a))).apply(Vec::basis(f, m, b)) +
                ctx.rep.mu_action(ctx.t.apply(Vec::basis(f, m, b))).apply(Vec::basis(f, m, a));
            for (std::size_t k = 0; k < m; ++k) ct.at({a, b, k}) = prod[k];
        }
    FDAlgebra v_alg(f, m, std::move(ct), {}, true);

    // rho_T(v)x = Tv.x - T(mu(x)v),  mu_T(v)x = x.Tv - T(rho(x)v)
    std::vector<Matrix> rho_t, mu_t;
    for (std::size_t a = 0; a < m; ++a) {
        Matrix mr(f, n, n), mm(f, n, n);
        Vec ta = ctx.t.apply(Vec::basis(f, m, a));
        for (std::size_t j = 0; j < n; ++j) {
            Vec ej = ctx.alg().basis(j);
            Vec colr = ctx.alg().multiply(ta, ej) -
                       ctx.t.apply(ctx.rep.mu_action(ej).apply(Vec::basis(f, m, a)));
            Vec colm = ctx.alg().multiply(ej, ta) -
                       ctx.t.apply(ctx.rep.rho_action(ej).apply(Vec::basis(f, m, a)));
            for (std::size_t k = 0; k < n; ++k) {
                mr.at(k, j) = colr[k];
                mm.at(k, j) = colm[k];
            }
        }
        rho_t.push_back(std::move(mr));
        mu_t.push_back(std::move(mm));
    }
    BiRepresentation a_rep(v_alg, n, std::move(rho_t), std::move(mu_t));

    Check s = check_structure(v_alg, StructureKind::left_prejj);
    if (!s)
        throw internal_check_error("induced (V,._T) not left pre-Jacobi-Jordan: " + s.describe());
    Check r = is_birepresentation(a_rep);
    if (!r)
        throw internal_check_error("induced (rho_T,mu_T) not a birepresentation: " + r.describe());
    if (!is_algebra_morphism(ctx.t, v_alg, ctx.alg()))
        throw internal_check_error("T is not a morphism (V,._T) -> A");
    return PreJJInduced{std::move(v_alg), std::move(a_rep)};
}

FDAlgebra induced_prejj_from_jj(const JJRelRB& ctx) {
    Check pre = is_relative_rb(ctx);
    if (!pre)
        throw precondition_error("induced_prejj_from_jj: not a relative Rota-Baxter operator: " +
                                 pre.describe());
    std::size_t m = ctx.v_dim();
    Field f = ctx.alg().field();
    Tensor ct(f, {m, m, m});
    for (std::size_t a = 0; a < m; ++a) {
        Matrix act = ctx.rep.action(ctx.t.apply(Vec::basis(f, m, a)));
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t k = 0; k < m; ++k) ct.at({a, b, k}) = act.at(k, b);
    }
    FDAlgebra out(f, m, std::move(ct), {}, true);
    Check s = check_structure(out, StructureKind::left_prejj);
    if (!s) throw internal_check_error("induced u.v = rho(Tu)v not left pre-JJ: " + s.describe());
    return out;
}

namespace {

bool intertwines(const MorphismPair& p, const std::vector<Matrix>& action, const FDAlgebra& alg) {
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        Matrix lhs = p.phi_v.matrix() * action[i];
        Matrix act_im(alg.field(), p.phi_v.dst_dim(), p.phi_v.dst_dim());
        Vec im = p.phi_a.apply(alg.basis(i));
        for (std::size_t k = 0; k < action.size(); ++k)
            if (!im[k].is_zero()) act_im = act_im + action[k].scaled(im[k]);
        if (lhs != act_im * p.phi_v.matrix()) return false;
    }
    return true;
}

}  // namespace

bool is_rb_morphism(const MorphismPair& p, const JJRelRB& from, const JJRelRB& to) {
    if (!(from.rep == to.rep))
        throw precondition_error("rb morphism: contexts must share algebra and representation");
    if (!is_algebra_morphism(p.phi_a, to.alg(), to.alg())) return false;
    if (to.t.compose(p.phi_v) != LinearMap(p.phi_a.matrix() * from.t.matrix())) return false;
    return intertwines(p, to.rep.rho, to.alg());
}

bool is_rb_morphism(const MorphismPair& p, const PreJJRelRB& from, const PreJJRelRB& to) {
    if (!(from.rep == to.rep))
        throw precondition_error("rb morphism: contexts must share algebra and representation");
    if (!is_algebra_morphism(p.phi_a, to.alg(), to.alg())) return false;
    if (to.t.compose(p.phi_v) != LinearMap(p.phi_a.matrix() * from.t.matrix())) return false;
    return intertwines(p, to.rep.rho, to.alg()) && intertwines(p, to.rep.mu, to.alg());
}

LinearMap conjugate_rb(const MorphismPair& p, const JJRelRB& ctx) {
    if (!is_algebra_morphism(p.phi_a, ctx.alg(), ctx.alg()))
        throw precondition_error("conjugate_rb: phi_A is not an algebra morphism");
    if (!p.phi_a.invertible() || !p.phi_v.invertible())
        throw singular_matrix_error("conjugate_rb: phi_A and phi_V must be invertible");
    if (!intertwines(p, ctx.rep.rho, ctx.alg()))
        throw precondition_error("conjugate_rb: intertwining condition fails");
    LinearMap out = p.phi_a.inverse().compose(ctx.t).compose(p.phi_v);
    Check c = is_relative_rb(JJRelRB(ctx.rep, out));
    if (!c) throw internal_check_error("conjugated operator is not relative RB: " + c.describe());
    return out;
}

LinearMap conjugate_rb(const MorphismPair& p, const PreJJRelRB& ctx) {
    if (!is_algebra_morphism(p.phi_a, ctx.alg(), ctx.alg()))
        throw precondition_error("conjugate_rb: phi_A is not an algebra morphism");
    if (!p.phi_a.invertible() || !p.phi_v.invertible())
        throw singular_matrix_error("conjugate_rb: phi_A and phi_V must be invertible");
    if (!intertwines(p, ctx.rep.rho, ctx.alg()) || !intertwines(p, ctx.rep.mu, ctx.alg()))
        throw precondition_error("conjugate_rb: intertwining condition fails");
    LinearMap out = p.phi_a.inverse().compose(ctx.t).compose(p.phi_v);
    Check c = is_relative_rb(PreJJRelRB(ctx.rep, out));
    if (!c) throw internal_check_error("conjugated operator is not relative RB: " + c.describe());
    return out;
}

Check are_compatible(const JJRelRB& c1, const JJRelRB& c2) {
    if (!(c1.rep == c2.rep))
        throw precondition_error("are_compatible: contexts must share algebra and representation");
    Check p1 = is_relative_rb(c1);
    if (!p1) throw precondition_error("are_compatible: T1 is not an operator: " + p1.describe());
    Check p2 = is_relative_rb(c2);
    if (!p2) throw precondition_error("are_compatible: T2 is not an operator: " + p2.describe());
    std::size_t m = c1.v_dim();
    Field f = c1.alg().field();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec u = Vec::basis(f, m, a), v = Vec::basis(f, m, b);
            Vec t1u = c1.t.apply(u), t1v = c1.t.apply(v);
            Vec t2u = c2.t.apply(u), t2v = c2.t.apply(v);
            Vec lhs = c1.alg().multiply(t1u, t2v) + c1.alg().multiply(t2u, t1v);
            Vec rhs = c1.t.apply(c1.rep.action(t2u).apply(v) + c1.rep.action(t2v).apply(u)) +
                      c2.t.apply(c1.rep.action(t1u).apply(v) + c1.rep.action(t1v).apply(u));
            if (lhs != rhs) return Check::fail("compatible", {a, b}, c1.alg().format(lhs - rhs));
        }
    return Check::pass();
}

Check are_compatible(const PreJJRelRB& c1, const PreJJRelRB& c2) {
    if (!(c1.rep == c2.rep))
        throw precondition_error("are_compatible: contexts must share algebra and representation");
    Check p1 = is_relative_rb(c1);
    if (!p1) throw precondition_error("are_compatible: T1 is not an operator: " + p1.describe());
    Check p2 = is_relative_rb(c2);
    if (!p2) throw precondition_error("are_compatible: T2 is not an operator: " + p2.describe());
    std::size_t m = c1.v_dim();
    Field f = c1.alg().field();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec u = Vec::basis(f, m, a), v = Vec::basis(f, m, b);
            Vec t1u = c1.t.apply(u), t1v = c1.t.apply(v);
            Vec t2u = c2.t.apply(u), t2v = c2.t.apply(v);
            Vec lhs = c1.alg().multiply(t1u, t2v) + c1.alg().multiply(t2u, t1v);
            Vec rhs = c1.t.apply(c1.rep.rho_action(t2u).apply(v) + c1.rep.mu_action(t2v).apply(u)) +
                      c2.t.apply(c1.rep.rho_action(t1u).apply(v) + c1.rep.mu_action(t1v).apply(u));
            if (lhs != rhs) return Check::fail("compatible", {a, b}, c1.alg().format(lhs - rhs));
        }
    return Check::pass();
}

Check are_compatible_uu_variant(const PreJJRelRB& c1, const PreJJRelRB& c2) {
    if (!(c1.rep == c2.rep))
        throw precondition_error("are_compatible: contexts must share algebra and representation");
    std::size_t m = c1.v_dim();
    Field f = c1.alg().field();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vec u = Vec::basis(f, m, a), v = Vec::basis(f, m, b);
            Vec t1u = c1.t.apply(u), t1v = c1.t.apply(v);
            Vec t2u = c2.t.apply(u), t2v = c2.t.apply(v);
            Vec lhs = c1.alg().multiply(t1u, t2v) + c1.alg().multiply(t2u, t1v);
            Vec rhs = c1.t.apply(c1.rep.rho_action(t2u).apply(v) + c1.rep.mu_action(t2u).apply(v)) +
                      c2.t.apply(c1.rep.rho_action(t1u).apply(v) + c1.rep.mu_action(t1u).apply(v));
            if (lhs != rhs)
                return Check::fail("compatible_uu_variant", {a, b}, c1.alg().format(lhs - rhs));
        }
    return Check::pass();
}

namespace {

LinearMap nij_from_compat(const LinearMap& t1, const LinearMap& t2) {
    if (t2.src_dim() != t2.dst_dim())
        throw dimension_error("nijenhuis_from_compatible: T2 must be square");
    return t1.compose(t2.inverse());
}

}  // namespace

LinearMap nijenhuis_from_compatible(const JJRelRB& c1, const JJRelRB& c2) {
    Check c = are_compatible(c1, c2);
    if (!c) throw precondition_error("nijenhuis_from_compatible: not compatible: " + c.describe());
    LinearMap n = nij_from_compat(c1.t, c2.t);
    if (!is_nijenhuis_operator(c1.alg(), n))
        throw internal_check_error("T1 T2^{-1} is not a Nijenhuis operator");
    return n;
}

LinearMap nijenhuis_from_compatible(const PreJJRelRB& c1, const PreJJRelRB& c2) {
    Check c = are_compatible(c1, c2);
    if (!c) throw precondition_error("nijenhuis_from_compatible: not compatible: " + c.describe());
    LinearMap n = nij_from_compat(c1.t, c2.t);
    if (!is_nijenhuis_operator(c1.alg(), n))
        throw internal_check_error("T1 T2^{-1} is not a Nijenhuis operator");
    return n;
}

JJRelRB subadjacent_context(const PreJJRelRB& ctx) {
    Check pre = is_relative_rb(ctx);
    if (!pre)
        throw precondition_error("subadjacent_context: not a relative Rota-Baxter operator: " +
                                 pre.describe());
    JJRelRB out(sum_representation(ctx.rep), ctx.t);
    Check post = is_relative_rb(out);
    if (!post)
        throw internal_check_error("operator fails over the sub-adjacent algebra: " +
                                   post.describe());
    return out;
}

}  // namespace jjalg
