#include "jjalg/representation.hpp"

namespace jjalg {

namespace {

void check_action_shapes(const FDAlgebra& alg, std::size_t v_dim, const std::vector<Matrix>& mats,
                         const char* what) {
    if (mats.size() != alg.dim())
        throw dimension_error(std::string(what) + ": one matrix per basis element required");
    for (const Matrix& m : mats) {
        if (m.rows() != v_dim || m.cols() != v_dim)
            throw dimension_error(std::string(what) + ": matrices must be v_dim x v_dim");
        require_same_field(alg.field(), m.field(), what);
    }
}

Matrix combine(const std::vector<Matrix>& mats, const Vec& x, Field f, std::size_t v_dim) {
    Matrix r(f, v_dim, v_dim);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (x[i].is_zero()) continue;
        r = r + mats[i].scaled(x[i]);
    }
    return r;
}

std::string matrix_str(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += " ";
            s += m.at(i, j).str();
        }
    }
    return s + "]";
}

}  // namespace

Representation::Representation(FDAlgebra a, std::size_t vd, std::vector<Matrix> r)
    : alg(std::move(a)), v_dim(vd), rho(std::move(r)) {
    check_action_shapes(alg, v_dim, rho, "representation");
}

Matrix Representation::action(const Vec& x) const {
    return combine(rho, x, alg.field(), v_dim);
}

BiRepresentation::BiRepresentation(FDAlgebra a, std::size_t vd, std::vector<Matrix> r,
                                   std::vector<Matrix> m)
    : alg(std::move(a)), v_dim(vd), rho(std::move(r)), mu(std::move(m)) {
    check_action_shapes(alg, v_dim, rho, "birepresentation rho");
    check_action_shapes(alg, v_dim, mu, "birepresentation mu");
}

Matrix BiRepresentation::rho_action(const Vec& x) const {
    return combine(rho, x, alg.field(), v_dim);
}

Matrix BiRepresentation::mu_action(const Vec& x) const {
    return combine(mu, x, alg.field(), v_dim);
}

Check is_representation(const Representation& r) {
    std::size_t n = r.alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = r.action(r.alg.product_of_basis(i, j));
            Matrix rhs = -(r.rho[i] * r.rho[j] + r.rho[j] * r.rho[i]);
            if (lhs != rhs)
                return Check::fail("representation", {i, j}, matrix_str(lhs - rhs));
        }
    return Check::pass();
}

Check is_birepresentation(const BiRepresentation& r) {
    std::size_t n = r.alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // rho(x*y) = -rho(x)rho(y) - rho(y)rho(x), * the sub-adjacent product
            Vec star = r.alg.product_of_basis(i, j) + r.alg.product_of_basis(j, i);
            Matrix lhs = r.rho_action(star);
            Matrix rhs = -(r.rho[i] * r.rho[j] + r.rho[j] * r.rho[i]);
            if (lhs != rhs)
                return Check::fail("birepresentation_rho", {i, j}, matrix_str(lhs - rhs));
            // mu(y)mu(x) + mu(x.y) = -mu(y)rho(x) - rho(x)mu(y)
            Matrix l2 = r.mu[j] * r.mu[i] + r.mu_action(r.alg.product_of_basis(i, j));
            Matrix r2 = -(r.mu[j] * r.rho[i] + r.rho[i] * r.mu[j]);
            if (l2 != r2)
                return Check::fail("birepresentation_mu", {i, j}, matrix_str(l2 - r2));
        }
    return Check::pass();
}

Representation zero_representation(const FDAlgebra& alg, std::size_t v_dim) {
    std::vector<Matrix> rho(alg.dim(), Matrix(alg.field(), v_dim, v_dim));
    return Representation(alg, v_dim, std::move(rho));
}

BiRepresentation zero_birepresentation(const FDAlgebra& alg, std::size_t v_dim) {
    std::vector<Matrix> z(alg.dim(), Matrix(alg.field(), v_dim, v_dim));
    return BiRepresentation(alg, v_dim, z, z);
}

Representation regular_representation(const FDAlgebra& alg) {
    Check c = check_structure(alg, StructureKind::jacobi_jordan);
    if (!c)
        throw precondition_error("regular representation: not a Jacobi-Jordan algebra: " +
                                 c.describe(alg.labels()));
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        rho.push_back(alg.left_mult(alg.basis(i)).matrix());
    return Representation(alg, alg.dim(), std::move(rho));
}

BiRepresentation regular_birepresentation(const FDAlgebra& alg) {
    Check c = check_structure(alg, StructureKind::left_prejj);
    if (!c)
        throw precondition_error("regular birepresentation: not a left pre-Jacobi-Jordan algebra: " +
                                 c.describe(alg.labels()));
    std::vector<Matrix> rho, mu;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        rho.push_back(alg.left_mult(alg.basis(i)).matrix());
        mu.push_back(alg.right_mult(alg.basis(i)).matrix());
    }
    return BiRepresentation(alg, alg.dim(), std::move(rho), std::move(mu));
}

Representation pullback_representation(const LinearMap& f, const FDAlgebra& a,
                                       const FDAlgebra& b) {
    if (!is_algebra_morphism(f, a, b))
        throw precondition_error("pullback: f is not an algebra morphism");
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < a.dim(); ++i)
        rho.push_back(b.left_mult(f.apply(a.basis(i))).matrix());
    return Representation(a, b.dim(), std::move(rho));
}

Representation dual_representation(const Representation& r) {
    Check c = is_representation(r);
    if (!c) throw precondition_error("dual: input is not a representation: " + c.describe());
    std::vector<Matrix> pi;
    for (const Matrix& m : r.rho) pi.push_back(m.transpose());
    return Representation(r.alg, r.v_dim, std::move(pi));
}

Representation sum_representation(const BiRepresentation& r) {
    Check c = is_birepresentation(r);
    if (!c) throw precondition_error("sum: input is not a birepresentation: " + c.describe());
    std::vector<Matrix> s;
    for (std::size_t i = 0; i < r.rho.size(); ++i) s.push_back(r.rho[i] + r.mu[i]);
    return Representation(sub_adjacent(r.alg), r.v_dim, std::move(s));
}

namespace {

// Shared semidirect assembly. The two mixed blocks:
//   e_i . v_b = amix[i] col b,  v_a . e_j = vmix[j] col a.
FDAlgebra semidirect(const FDAlgebra& alg, std::size_t m, const std::vector<Matrix>& amix,
                     const std::vector<Matrix>& vmix) {
    std::size_t n = alg.dim();
    Field f = alg.field();
    Tensor t(f, {n + m, n + m, n + m});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                t.at({i, j, k}) = alg.structure().at({i, j, k});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t k = 0; k < m; ++k)
                t.at({i, n + b, n + k}) = amix[i].at(k, b);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                t.at({n + a, j, n + k}) = vmix[j].at(k, a);
    std::vector<std::string> labels = alg.labels();
    for (std::size_t b = 0; b < m; ++b) labels.push_back("v" + std::to_string(b + 1));
    return FDAlgebra(f, n + m, std::move(t), std::move(labels), true);
}

}  // namespace

FDAlgebra semidirect_product(const Representation& r) {
    // (x+u) . (y+v) = x*y + rho(x)v + rho(y)u
    return semidirect(r.alg, r.v_dim, r.rho, r.rho);
}

FDAlgebra semidirect_product(const BiRepresentation& r) {
    // (x+u) . (y+v) = x.y + rho(x)v + mu(y)u
    return semidirect(r.alg, r.v_dim, r.rho, r.mu);
}

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

}  // namespace

Representation extended_representation(const Representation& r) {
    Check c = is_representation(r);
    if (!c) throw precondition_error("extended: input is not a representation: " + c.describe());
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < r.alg.dim(); ++i)
        rho.push_back(block_diag(r.alg.left_mult(r.alg.basis(i)).matrix(), r.rho[i]));
    Representation out(r.alg, r.alg.dim() + r.v_dim, std::move(rho));
    Check post = is_representation(out);
    if (!post)
        throw internal_check_error("extended representation failed validity: " + post.describe());
    return out;
}

BiRepresentation extended_birepresentation(const BiRepresentation& r) {
    Check c = is_birepresentation(r);
    if (!c) throw precondition_error("extended: input is not a birepresentation: " + c.describe());
    std::vector<Matrix> rho, mu;
    for (std::size_t i = 0; i < r.alg.dim(); ++i) {
        rho.push_back(block_diag(r.alg.left_mult(r.alg.basis(i)).matrix(), r.rho[i]));
        mu.push_back(block_diag(r.alg.right_mult(r.alg.basis(i)).matrix(), r.mu[i]));
    }
    BiRepresentation out(r.alg, r.alg.dim() + r.v_dim, std::move(rho), std::move(mu));
    Check post = is_birepresentation(out);
    if (!post)
        throw internal_check_error("extended birepresentation failed validity: " + post.describe());
    return out;
}

Check is_matched_pair(const JJMatchedPair& mp) {
    Check s1 = check_structure(mp.a1, StructureKind::jacobi_jordan);
    if (!s1) return Check::fail("a1_jacobi_jordan", s1.where, s1.value);
    Check s2 = check_structure(mp.a2, StructureKind::jacobi_jordan);
    if (!s2) return Check::fail("a2_jacobi_jordan", s2.where, s2.value);
    Representation r1(mp.a1, mp.a2.dim(), mp.rho1);
    Representation r2(mp.a2, mp.a1.dim(), mp.rho2);
    Check v1 = is_representation(r1);
    if (!v1) return Check::fail("rho1_representation", v1.where, v1.value);
    Check v2 = is_representation(r2);
    if (!v2) return Check::fail("rho2_representation", v2.where, v2.value);

    std::size_t n1 = mp.a1.dim(), n2 = mp.a2.dim();
    auto rho1_of = [&](const Vec& x) { return r1.action(x); };
    auto rho2_of = [&](const Vec& a) { return r2.action(a); };

    for (std::size_t x = 0; x < n1; ++x)
        for (std::size_t a = 0; a < n2; ++a)
            for (std::size_t b = 0; b < n2; ++b) {
                Vec ea = mp.a2.basis(a), eb = mp.a2.basis(b);
                Vec v = mp.rho1[x].apply(mp.a2.product_of_basis(a, b)) +
                        mp.a2.multiply(mp.rho1[x].apply(ea), eb) +
                        mp.a2.multiply(mp.rho1[x].apply(eb), ea) +
                        rho1_of(mp.rho2[a].col(x)).apply(eb) +
                        rho1_of(mp.rho2[b].col(x)).apply(ea);
                if (!v.is_zero())
                    return Check::fail("matched_pair_1", {x, a, b}, format_lincomb(v, mp.a2.labels()));
            }
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t x = 0; x < n1; ++x)
            for (std::size_t y = 0; y < n1; ++y) {
                Vec ex = mp.a1.basis(x), ey = mp.a1.basis(y);
                Vec v = mp.rho2[a].apply(mp.a1.product_of_basis(x, y)) +
                        mp.a1.multiply(mp.rho2[a].apply(ex), ey) +
                        mp.a1.multiply(mp.rho2[a].apply(ey), ex) +
                        rho2_of(mp.rho1[x].col(a)).apply(ey) +
                        rho2_of(mp.rho1[y].col(a)).apply(ex);
                if (!v.is_zero())
                    return Check::fail("matched_pair_2", {a, x, y}, format_lincomb(v, mp.a1.labels()));
            }
    return Check::pass();
}

Check is_matched_pair(const PreJJMatchedPair& mp) {
    Check s1 = check_structure(mp.a1, StructureKind::left_prejj);
    if (!s1) return Check::fail("a1_left_prejj", s1.where, s1.value);
    Check s2 = check_structure(mp.a2, StructureKind::left_prejj);
    if (!s2) return Check::fail("a2_left_prejj", s2.where, s2.value);
    BiRepresentation r1(mp.a1, mp.a2.dim(), mp.rho1, mp.mu1);
    BiRepresentation r2(mp.a2, mp.a1.dim(), mp.rho2, mp.mu2);
    Check v1 = is_birepresentation(r1);
    if (!v1) return Check::fail("action1_birepresentation", v1.where, v1.value);
    Check v2 = is_birepresentation(r2);
    if (!v2) return Check::fail("action2_birepresentation", v2.where, v2.value);

    std::size_t n1 = mp.a1.dim(), n2 = mp.a2.dim();
    const FDAlgebra &A1 = mp.a1, &A2 = mp.a2;

    for (std::size_t x = 0; x < n1; ++x)
        for (std::size_t a = 0; a < n2; ++a)
            for (std::size_t b = 0; b < n2; ++b) {
                Vec ea = A2.basis(a), eb = A2.basis(b);
                Vec v = mp.rho1[x].apply(A2.product_of_basis(a, b)) +
                        r1.rho_action(mp.rho2[a].col(x) + mp.mu2[a].col(x)).apply(eb) +
                        A2.multiply(mp.rho1[x].apply(ea) + mp.mu1[x].apply(ea), eb) +
                        r1.mu_action(mp.mu2[b].col(x)).apply(ea) +
                        A2.multiply(ea, mp.rho1[x].apply(eb));
                if (!v.is_zero())
                    return Check::fail("matched_pair_1", {x, a, b}, format_lincomb(v, A2.labels()));

                Vec star = A2.product_of_basis(a, b) + A2.product_of_basis(b, a);
                Vec w = mp.mu1[x].apply(star) + A2.multiply(ea, mp.mu1[x].apply(eb)) +
                        A2.multiply(eb, mp.mu1[x].apply(ea)) +
                        r1.mu_action(mp.rho2[a].col(x)).apply(eb) +
                        r1.mu_action(mp.rho2[b].col(x)).apply(ea);
                if (!w.is_zero())
                    return Check::fail("matched_pair_2", {x, a, b}, format_lincomb(w, A2.labels()));
            }
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t x = 0; x < n1; ++x)
            for (std::size_t y = 0; y < n1; ++y) {
                Vec ex = A1.basis(x), ey = A1.basis(y);
                Vec v = mp.rho2[a].apply(A1.product_of_basis(x, y)) +
                        r2.rho_action(mp.rho1[x].col(a) + mp.mu1[x].col(a)).apply(ey) +
                        A1.multiply(mp.rho2[a].apply(ex) + mp.mu2[a].apply(ex), ey) +
                        r2.mu_action(mp.mu1[y].col(a)).apply(ex) +
                        A1.multiply(ex, mp.rho2[a].apply(ey));
                if (!v.is_zero())
                    return Check::fail("matched_pair_3", {a, x, y}, format_lincomb(v, A1.labels()));

                Vec star = A1.product_of_basis(x, y) + A1.product_of_basis(y, x);
                Vec w = mp.mu2[a].apply(star) + A1.multiply(ex, mp.mu2[a].apply(ey)) +
                        A1.multiply(ey, mp.mu2[a].apply(ex)) +
                        r2.mu_action(mp.rho1[x].col(a)).apply(ey) +
                        r2.mu_action(mp.rho1[y].col(a)).apply(ex);
                if (!w.is_zero())
                    return Check::fail("matched_pair_4", {a, x, y}, format_lincomb(w, A1.labels()));
            }
    return Check::pass();
}

namespace {

// Shared bicrossed assembly on A1 (+) A2; the four blocks are
//   e_i . e_j = c1, e_i . f_b = (b_on_a[b] col i, a_on_b[i] col b),
//   f_a . e_j = (a2_on_a1[a] col j, a1_on_a2[j] col a), f_a . f_b = c2.
FDAlgebra bicrossed(const FDAlgebra& a1, const FDAlgebra& a2, const std::vector<Matrix>& ei_fb_a1,
                    const std::vector<Matrix>& ei_fb_a2, const std::vector<Matrix>& fa_ej_a1,
                    const std::vector<Matrix>& fa_ej_a2) {
    std::size_t n1 = a1.dim(), n2 = a2.dim();
    Field f = a1.field();
    Tensor t(f, {n1 + n2, n1 + n2, n1 + n2});
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t k = 0; k < n1; ++k) t.at({i, j, k}) = a1.structure().at({i, j, k});
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            for (std::size_t k = 0; k < n2; ++k)
                t.at({n1 + a, n1 + b, n1 + k}) = a2.structure().at({a, b, k});
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t b = 0; b < n2; ++b) {
            // e_i . f_b: A1-part ei_fb_a1[b] col i, A2-part ei_fb_a2[i] col b
            for (std::size_t k = 0; k < n1; ++k) t.at({i, n1 + b, k}) = ei_fb_a1[b].at(k, i);
            for (std::size_t k = 0; k < n2; ++k) t.at({i, n1 + b, n1 + k}) = ei_fb_a2[i].at(k, b);
        }
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t j = 0; j < n1; ++j) {
            // f_a . e_j: A1-part fa_ej_a1[a] col j, A2-part fa_ej_a2[j] col a
            for (std::size_t k = 0; k < n1; ++k) t.at({n1 + a, j, k}) = fa_ej_a1[a].at(k, j);
            for (std::size_t k = 0; k < n2; ++k) t.at({n1 + a, j, n1 + k}) = fa_ej_a2[j].at(k, a);
        }
    std::vector<std::string> labels = a1.labels();
    for (const std::string& l : a2.labels()) labels.push_back(l + "'");
    return FDAlgebra(f, n1 + n2, std::move(t), std::move(labels), true);
}

}  // namespace

FDAlgebra bicrossed_product(const JJMatchedPair& mp) {
    // (x+a) . (y+b) = (x*y + rho2(a)y + rho2(b)x) + (a*b + rho1(x)b + rho1(y)a)
    return bicrossed(mp.a1, mp.a2, mp.rho2, mp.rho1, mp.rho2, mp.rho1);
}

FDAlgebra bicrossed_product(const PreJJMatchedPair& mp) {
    // (x+a) . (y+b) = (x.y + rho2(a)y + mu2(b)x) + (a.b + rho1(x)b + mu1(y)a)
    return bicrossed(mp.a1, mp.a2, mp.mu2, mp.rho1, mp.rho2, mp.mu1);
}

JJMatchedPair matched_pair_subadjacent(const PreJJMatchedPair& mp) {
    Check c = is_matched_pair(mp);
    if (!c) throw precondition_error("matched_pair_subadjacent: " + c.describe());
    std::vector<Matrix> t1, t2;
    for (std::size_t i = 0; i < mp.a1.dim(); ++i) t1.push_back(mp.rho1[i] + mp.mu1[i]);
    for (std::size_t a = 0; a < mp.a2.dim(); ++a) t2.push_back(mp.rho2[a] + mp.mu2[a]);
    JJMatchedPair out{sub_adjacent(mp.a1), sub_adjacent(mp.a2), std::move(t1), std::move(t2)};
    Check post = is_matched_pair(out);
    if (!post)
        throw internal_check_error("sub-adjacent matched pair failed validity: " + post.describe());
    return out;
}

}  // namespace jjalg
