#include "jjalg/cohomology.hpp"

namespace jjalg {

std::vector<std::size_t> Cochain::shape_for(std::size_t degree, std::size_t v_dim,
                                            std::size_t a_dim) {
    std::vector<std::size_t> s(degree, v_dim);
    s.push_back(a_dim);
    return s;
}

Cochain Cochain::zero(Field f, std::size_t degree, std::size_t v_dim, std::size_t a_dim) {
    return Cochain{degree, Tensor(f, shape_for(degree, v_dim, a_dim))};
}

Vec Cochain::slice(const std::vector<std::size_t>& idx) const {
    if (idx.size() != degree) throw dimension_error("cochain slice arity");
    std::size_t a_dim = coeffs.shape().back();
    std::size_t base = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) base = base * coeffs.shape()[k] + idx[k];
    base *= a_dim;
    Vec v(coeffs.field(), a_dim);
    for (std::size_t k = 0; k < a_dim; ++k) v[k] = coeffs.flat(base + k);
    return v;
}

void Cochain::set_slice(const std::vector<std::size_t>& idx, const Vec& v) {
    std::size_t a_dim = coeffs.shape().back();
    std::size_t base = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) base = base * coeffs.shape()[k] + idx[k];
    base *= a_dim;
    for (std::size_t k = 0; k < a_dim; ++k) coeffs.flat(base + k) = v[k];
}

namespace {

// f evaluated with a vector in one slot (index `pos`) and basis indices elsewhere.
Vec eval_vec_slot(const Cochain& f, std::size_t pos, const Vec& w,
                  const std::vector<std::size_t>& rest) {
    std::vector<std::size_t> idx(rest.size() + 1, 0);
    Vec acc(f.coeffs.field(), f.coeffs.shape().back());
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k].is_zero()) continue;
        std::size_t r = 0;
        for (std::size_t s = 0; s < idx.size(); ++s) idx[s] = s == pos ? k : rest[r++];
        acc = acc + f.slice(idx).scaled(w[k]);
    }
    return acc;
}

std::vector<std::size_t> erase_at(const std::vector<std::size_t>& v, std::size_t i) {
    std::vector<std::size_t> r;
    r.reserve(v.size() - 1);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != i) r.push_back(v[k]);
    return r;
}

std::vector<std::size_t> erase_two(const std::vector<std::size_t>& v, std::size_t i,
                                   std::size_t j) {
    std::vector<std::size_t> r;
    r.reserve(v.size() - 2);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != i && k != j) r.push_back(v[k]);
    return r;
}

// Alternating constraints on the slot range [0, upto): adjacent swaps and
// adjacent-equal vanishing. Rows are appended to `rows` as coordinate vectors
// over the cochain coordinate space of dimension `dim`.
void alternating_rows(std::size_t upto, std::size_t v_dim, std::size_t a_dim,
                      const std::vector<std::size_t>& shape, Field f,
                      std::vector<std::vector<Scalar>>& rows, std::size_t dim) {
    if (upto < 2) return;
    std::size_t degree = shape.size() - 1;
    auto coord = [&](const std::vector<std::size_t>& idx, std::size_t k) {
        std::size_t base = 0;
        for (std::size_t s = 0; s < degree; ++s) base = base * v_dim + idx[s];
        return base * a_dim + k;
    };
    MultiIndex mi(std::vector<std::size_t>(degree, v_dim));
    for (; mi.valid(); mi.next()) {
        const std::vector<std::size_t>& idx = mi.idx();
        for (std::size_t s = 0; s + 1 < upto; ++s) {
            std::vector<std::size_t> sw = idx;
            std::swap(sw[s], sw[s + 1]);
            if (idx[s] == idx[s + 1]) {
                // vanishing on equal adjacent arguments
                for (std::size_t k = 0; k < a_dim; ++k) {
                    std::vector<Scalar> row(dim, Scalar::zero(f));
                    row[coord(idx, k)] = Scalar::one(f);
                    rows.push_back(std::move(row));
                }
            } else {
                for (std::size_t k = 0; k < a_dim; ++k) {
                    std::vector<Scalar> row(dim, Scalar::zero(f));
                    row[coord(idx, k)] = Scalar::one(f);
                    row[coord(sw, k)] = row[coord(sw, k)] + Scalar::one(f);
                    rows.push_back(std::move(row));
                }
            }
        }
    }
}

Matrix rows_to_matrix(Field f, const std::vector<std::vector<Scalar>>& rows, std::size_t dim) {
    Matrix m(f, rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::size_t pow_sz(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

// ---------------------------------------------------------------- JJComplex

JJComplex::JJComplex(JJRelRB ctx, std::size_t degree_cap)
    : ctx_(std::move(ctx)), ind_(induced_structures(ctx_)), cap_(degree_cap) {}

std::size_t JJComplex::c_dim(std::size_t n) const {
    return n == 0 ? a_dim() : pow_sz(v_dim(), n) * a_dim();
}

Cochain JJComplex::d(const Cochain& f) const {
    if (f.degree > cap_) throw precondition_error("differential: degree above cap");
    std::size_t m = v_dim(), n = f.degree;
    Cochain out = Cochain::zero(field(), n + 1, m, a_dim());
    if (n == 0) {
        Vec x(field(), a_dim());
        for (std::size_t k = 0; k < a_dim(); ++k) x[k] = f.coeffs.flat(k);
        for (std::size_t u = 0; u < m; ++u) out.set_slice({u}, ind_.a_rep.rho[u].apply(x));
        return out;
    }
    MultiIndex mi(std::vector<std::size_t>(n + 1, m));
    for (; mi.valid(); mi.next()) {
        const std::vector<std::size_t>& J = mi.idx();
        Vec acc(field(), a_dim());
        for (std::size_t i = 0; i <= n; ++i)
            acc = acc + ind_.a_rep.rho[J[i]].apply(f.slice(erase_at(J, i)));
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                acc = acc + eval_vec_slot(f, 0, ind_.v_alg.product_of_basis(J[i], J[j]),
                                          erase_two(J, i, j));
        out.set_slice(J, acc);
    }
    return out;
}

Cochain JJComplex::delta(const Cochain& f) const {
    Check c = in_a_space(f);
    if (!c) throw precondition_error("delta: cochain not in A^n: " + c.describe());
    if (f.degree == 0) return d(f);
    std::size_t m = v_dim(), n = f.degree;
    Cochain out = Cochain::zero(field(), n + 1, m, a_dim());
    MultiIndex mi(std::vector<std::size_t>(n + 1, m));
    for (; mi.valid(); mi.next()) {
        const std::vector<std::size_t>& J = mi.idx();
        Vec acc(field(), a_dim());
        for (std::size_t i = 0; i <= n; ++i)
            acc = acc + ind_.a_rep.rho[J[i]].apply(f.slice(erase_at(J, i)));
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j)
                acc = acc - eval_vec_slot(f, 0, ind_.v_alg.product_of_basis(J[i], J[j]),
                                          erase_two(J, i, j));
        out.set_slice(J, acc);
    }
    return out;
}

Check JJComplex::in_a_space(const Cochain& f) const {
    std::size_t n = f.degree;
    if (n <= 1) return Check::pass();
    MultiIndex mi(std::vector<std::size_t>(n, v_dim()));
    for (; mi.valid(); mi.next()) {
        const std::vector<std::size_t>& I = mi.idx();
        for (std::size_t s = 0; s + 1 < n; ++s) {
            std::vector<std::size_t> sw = I;
            std::swap(sw[s], sw[s + 1]);
            Vec v = I[s] == I[s + 1] ? f.slice(I) : f.slice(I) + f.slice(sw);
            if (!v.is_zero()) {
                std::vector<std::size_t> where = I;
                return Check::fail("alternating", where, ctx_.alg().format(v));
            }
        }
    }
    return Check::pass();
}

std::vector<Cochain> JJComplex::a_space_basis(std::size_t n) const {
    if (n > cap_) throw precondition_error("a_space_basis: degree above cap");
    Field f = field();
    std::size_t dim = c_dim(n);
    std::vector<Cochain> out;
    if (n == 0) {
        for (std::size_t k = 0; k < a_dim(); ++k) {
            Cochain c = Cochain::zero(f, 0, v_dim(), a_dim());
            c.coeffs.flat(k) = Scalar::one(f);
            out.push_back(std::move(c));
        }
        return out;
    }
    std::vector<std::vector<Scalar>> rows;
    alternating_rows(n, v_dim(), a_dim(), Cochain::shape_for(n, v_dim(), a_dim()), f, rows, dim);
    for (const Vec& v : kernel_basis(rows_to_matrix(f, rows, dim))) {
        Cochain c = Cochain::zero(f, n, v_dim(), a_dim());
        for (std::size_t i = 0; i < dim; ++i) c.coeffs.flat(i) = v[i];
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// Matrix of a differential on a list of basis cochains.
template <class Complex, class Fn>
Matrix differential_matrix(const Complex& cx, const std::vector<Cochain>& basis,
                           std::size_t out_dim, Fn&& apply) {
    Matrix m(cx.field(), out_dim, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Cochain img = apply(basis[j]);
        for (std::size_t i = 0; i < out_dim; ++i) m.at(i, j) = img.coeffs.flat(i);
    }
    return m;
}

template <class Complex>
std::vector<Cochain> standard_basis(const Complex& cx, std::size_t n) {
    std::vector<Cochain> out;
    std::size_t dim = cx.c_dim(n);
    for (std::size_t i = 0; i < dim; ++i) {
        Cochain c = Cochain::zero(cx.field(), n, cx.v_dim(), cx.a_dim());
        c.coeffs.flat(i) = Scalar::one(cx.field());
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

CohomologyDims JJComplex::cohomology(std::size_t k) const {
    if (k > cap_) throw precondition_error("cohomology: degree above cap");
    CohomologyDims dims{};
    dims.dim_c = c_dim(k);
    dims.dim_a = a_space_basis(k).size();

    std::vector<Cochain> cb = standard_basis(*this, k);
    Matrix dk = differential_matrix(*this, cb, c_dim(k + 1), [&](const Cochain& g) { return d(g); });
    dims.dim_z = dims.dim_c - rank(dk);

    if (k == 0) {
        dims.dim_b = 0;
    } else {
        std::vector<Cochain> ab = a_space_basis(k - 1);
        Matrix dm = differential_matrix(*this, ab, c_dim(k),
                                        [&](const Cochain& g) { return delta(g); });
        for (const Cochain& g : ab)
            if (!d(delta(g)).coeffs.is_zero())
                throw internal_check_error("zigzag d(delta(f)) != 0 on A^{k-1} basis");
        dims.dim_b = rank(dm);
    }
    if (dims.dim_b > dims.dim_z) throw internal_check_error("B^k not contained in Z^k");
    dims.dim_h = dims.dim_z - dims.dim_b;
    return dims;
}

bool JJComplex::is_closed_explicit(const Cochain& f) const {
    Field fl = field();
    std::size_t m = v_dim();
    const FDAlgebra& alg = ctx_.alg();
    if (f.degree == 0) {
        // L_x T - T rho(x) = 0
        Vec x(fl, a_dim());
        for (std::size_t k = 0; k < a_dim(); ++k) x[k] = f.coeffs.flat(k);
        Matrix q = alg.left_mult(x).matrix() * ctx_.t.matrix() -
                   ctx_.t.matrix() * ctx_.rep.action(x);
        return q.is_zero();
    }
    if (f.degree == 1) {
        // T(u)*f(v) + T(v)*f(u) - T(rho(f(u))v + rho(f(v))u) - f(rho(Tu)v + rho(Tv)u) = 0
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Vec u = Vec::basis(fl, m, a), v = Vec::basis(fl, m, b);
                Vec fu = f.slice({a}), fv = f.slice({b});
                Vec tu = ctx_.t.apply(u), tv = ctx_.t.apply(v);
                Vec q = alg.multiply(tu, fv) + alg.multiply(tv, fu) -
                        ctx_.t.apply(ctx_.rep.action(fu).apply(v) + ctx_.rep.action(fv).apply(u)) -
                        eval_vec_slot(f, 0, ctx_.rep.action(tu).apply(v) +
                                             ctx_.rep.action(tv).apply(u), {});
                if (!q.is_zero()) return false;
            }
        return true;
    }
    throw precondition_error("is_closed_explicit: only degrees 0 and 1");
}

// ------------------------------------------------------------- PreJJComplex

PreJJComplex::PreJJComplex(PreJJRelRB ctx, std::size_t degree_cap)
    : ctx_(std::move(ctx)), ind_(induced_structures(ctx_)), cap_(degree_cap) {}

std::size_t PreJJComplex::c_dim(std::size_t n) const {
    return n == 0 ? a_dim() : pow_sz(v_dim(), n) * a_dim();
}

Cochain PreJJComplex::d(const Cochain& f) const {
    if (f.degree > cap_) throw precondition_error("differential: degree above cap");
    std::size_t m = v_dim(), n = f.degree;
    Cochain out = Cochain::zero(field(), n + 1, m, a_dim());
    if (n == 0) {
        Vec x(field(), a_dim());
        for (std::size_t k = 0; k < a_dim(); ++k) x[k] = f.coeffs.flat(k);
        for (std::size_t u = 0; u < m; ++u)
            out.set_slice({u}, (ind_.a_rep.rho[u] + ind_.a_rep.mu[u]).apply(x));
        return out;
    }
    MultiIndex mi(std::vector<std::size_t>(n + 1, m));
    for (; mi.valid(); mi.next()) {
        const std::vector<std::size_t>& J = mi.idx();
        std::vector<std::size_t> head(J.begin(), J.end() - 1);  // first n slots
        std::size_t last = J.back();
        Vec acc(field(), a_dim());
        for (std::size_t i = 0; i < n; ++i)
            acc = acc + ind_.a_rep.rho[J[i]].apply(f.slice(erase_at(J, i)));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> args = erase_at(head, i);
            args.push_back(head[i]);
            acc = acc + ind_.a_rep.mu[last].apply(f.slice(args));
        }
        for (std::size_t i = 0; i < n; ++i)
            acc = acc + eval_vec_slot(f, n - 1, ind_.v_alg.product_of_basis(head[i], last),
                                      erase_at(head, i));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec star = ind_.v_alg.product_of_basis(head[i], head[j]) +
                           ind_.v_alg.product_of_basis(head[j], head[i]);
                acc = acc + eval_vec_slot(f, 0, star, erase_two(J, i, j));
            }
        out.set_slice(J, acc);
    }
    return out;
}

Cochain PreJJComplex::delta(const Cochain& f) const {
    Check c = in_a_space(f);
    if (!c) throw precondition_error("delta: cochain not in A^n: " + c.describe());
    if (f.degree == 0) return d(f);
    std::size_t m = v_dim(), n = f.degree;
    Cochain out = Cochain::zero(field(), n + 1, m, a_dim());
    MultiIndex mi(std::vector<std::size_t>(n + 1, m));
    for (; mi.valid(); mi.next()) {
        const std::vector<std::size_t>& J = mi.idx();
        std::vector<std::size_t> head(J.begin(), J.end() - 1);
        std::size_t last = J.back();
        Vec acc(field(), a_dim());
        for (std::size_t i = 0; i < n; ++i)
            acc = acc + ind_.a_rep.rho[J[i]].apply(f.slice(erase_at(J, i)));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> args = erase_at(head, i);
            args.push_back(head[i]);
            acc = acc + ind_.a_rep.mu[last].apply(f.slice(args));
        }
        for (std::size_t i = 0; i < n; ++i)
            acc = acc - eval_vec_slot(f, n - 1, ind_.v_alg.product_of_basis(head[i], last),
                                      erase_at(head, i));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Vec star = ind_.v_alg.product_of_basis(head[i], head[j]) +
                           ind_.v_alg.product_of_basis(head[j], head[i]);
                acc = acc - eval_vec_slot(f, 0, star, erase_two(J, i, j));
            }
        out.set_slice(J, acc);
    }
    return out;
}

Check PreJJComplex::in_a_space(const Cochain& f) const {
    std::size_t n = f.degree;
    Field fl = field();
    std::size_t m = v_dim();
    if (n == 0) {
        Vec x(fl, a_dim());
        for (std::size_t k = 0; k < a_dim(); ++k) x[k] = f.coeffs.flat(k);
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < m; ++v) {
                Vec q = ind_.a_rep.rho_action(ind_.v_alg.product_of_basis(u, v)).apply(x) +
                        (ind_.a_rep.rho[u] * ind_.a_rep.rho[v]).apply(x);
                if (!q.is_zero()) return Check::fail("c0_constraint", {u, v}, ctx_.alg().format(q));
            }
        return Check::pass();
    }
    if (n == 1) return Check::pass();
    // alternating in the first n-1 slots
    MultiIndex mi(std::vector<std::size_t>(n, m));
    for (; mi.valid(); mi.next()) {
        const std::vector<std::size_t>& I = mi.idx();
        for (std::size_t s = 0; s + 1 < n - 1; ++s) {
            std::vector<std::size_t> sw = I;
            std::swap(sw[s], sw[s + 1]);
            Vec v = I[s] == I[s + 1] ? f.slice(I) : f.slice(I) + f.slice(sw);
            if (!v.is_zero()) return Check::fail("alternating", I, ctx_.alg().format(v));
        }
    }
    // cyclic condition: f(u *_T v, m_1..m_{n-2}, w ._T t) + cyclic(u,v,w) = 0
    std::vector<std::size_t> freevars(n + 2, m);  // u, v, w, middles, t
    MultiIndex fv(freevars);
    for (; fv.valid(); fv.next()) {
        const std::vector<std::size_t>& q = fv.idx();
        std::size_t u = q[0], v = q[1], w = q[2], t = q[n + 1];
        std::vector<std::size_t> mid(q.begin() + 3, q.begin() + 3 + (n - 2));
        auto star = [&](std::size_t x, std::size_t y) {
            return ind_.v_alg.product_of_basis(x, y) + ind_.v_alg.product_of_basis(y, x);
        };
        auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
            Vec first = star(x, y);
            Vec lastv = ind_.v_alg.product_of_basis(z, t);
            Vec acc(fl, a_dim());
            for (std::size_t i0 = 0; i0 < m; ++i0) {
                if (first[i0].is_zero()) continue;
                for (std::size_t in = 0; in < m; ++in) {
                    if (lastv[in].is_zero()) continue;
                    std::vector<std::size_t> idx;
                    idx.push_back(i0);
                    idx.insert(idx.end(), mid.begin(), mid.end());
                    idx.push_back(in);
                    acc = acc + f.slice(idx).scaled(first[i0] * lastv[in]);
                }
            }
            return acc;
        };
        Vec s = term(u, v, w) + term(v, w, u) + term(w, u, v);
        if (!s.is_zero()) return Check::fail("cyclic_constraint", q, ctx_.alg().format(s));
    }
    return Check::pass();
}

std::vector<Cochain> PreJJComplex::a_space_basis(std::size_t n) const {
    if (n > cap_) throw precondition_error("a_space_basis: degree above cap");
    Field fl = field();
    std::size_t m = v_dim();
    std::vector<Cochain> out;
    if (n == 0) {
        std::vector<std::vector<Scalar>> rows;
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < m; ++v) {
                Matrix q = ind_.a_rep.rho_action(ind_.v_alg.product_of_basis(u, v)) +
                           ind_.a_rep.rho[u] * ind_.a_rep.rho[v];
                for (std::size_t r = 0; r < a_dim(); ++r) {
                    std::vector<Scalar> row;
                    row.reserve(a_dim());
                    for (std::size_t c = 0; c < a_dim(); ++c) row.push_back(q.at(r, c));
                    rows.push_back(std::move(row));
                }
            }
        for (const Vec& v : kernel_basis(rows_to_matrix(fl, rows, a_dim()))) {
            Cochain c = Cochain::zero(fl, 0, m, a_dim());
            for (std::size_t i = 0; i < a_dim(); ++i) c.coeffs.flat(i) = v[i];
            out.push_back(std::move(c));
        }
        return out;
    }
    std::size_t dim = c_dim(n);
    if (n == 1) {
        for (std::size_t i = 0; i < dim; ++i) {
            Cochain c = Cochain::zero(fl, 1, m, a_dim());
            c.coeffs.flat(i) = Scalar::one(fl);
            out.push_back(std::move(c));
        }
        return out;
    }
    std::vector<std::vector<Scalar>> rows;
    alternating_rows(n - 1, m, a_dim(), Cochain::shape_for(n, m, a_dim()), fl, rows, dim);
    // cyclic condition rows, one per (u,v,w,middles,t,k)
    auto coord = [&](const std::vector<std::size_t>& idx, std::size_t k) {
        std::size_t base = 0;
        for (std::size_t s = 0; s < n; ++s) base = base * m + idx[s];
        return base * a_dim() + k;
    };
    MultiIndex fv(std::vector<std::size_t>(n + 2, m));
    for (; fv.valid(); fv.next()) {
        const std::vector<std::size_t>& q = fv.idx();
        std::size_t u = q[0], v = q[1], w = q[2], t = q[n + 1];
        std::vector<std::size_t> mid(q.begin() + 3, q.begin() + 3 + (n - 2));
        auto star = [&](std::size_t x, std::size_t y) {
            return ind_.v_alg.product_of_basis(x, y) + ind_.v_alg.product_of_basis(y, x);
        };
        std::vector<std::vector<Scalar>> block(a_dim(),
                                               std::vector<Scalar>(dim, Scalar::zero(fl)));
        bool nonzero = false;
        auto add_term = [&](std::size_t x, std::size_t y, std::size_t z) {
            Vec first = star(x, y);
            Vec lastv = ind_.v_alg.product_of_basis(z, t);
            for (std::size_t i0 = 0; i0 < m; ++i0) {
                if (first[i0].is_zero()) continue;
                for (std::size_t in = 0; in < m; ++in) {
                    if (lastv[in].is_zero()) continue;
                    Scalar cf = first[i0] * lastv[in];
                    std::vector<std::size_t> idx;
                    idx.push_back(i0);
                    idx.insert(idx.end(), mid.begin(), mid.end());
                    idx.push_back(in);
                    for (std::size_t k = 0; k < a_dim(); ++k) {
                        block[k][coord(idx, k)] += cf;
                        nonzero = true;
                    }
                }
            }
        };
        add_term(u, v, w);
        add_term(v, w, u);
        add_term(w, u, v);
        if (nonzero)
            for (std::size_t k = 0; k < a_dim(); ++k) rows.push_back(std::move(block[k]));
    }
    if (rows.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            Cochain c = Cochain::zero(fl, n, m, a_dim());
            c.coeffs.flat(i) = Scalar::one(fl);
            out.push_back(std::move(c));
        }
        return out;
    }
    for (const Vec& v2 : kernel_basis(rows_to_matrix(fl, rows, dim))) {
        Cochain c = Cochain::zero(fl, n, m, a_dim());
        for (std::size_t i = 0; i < dim; ++i) c.coeffs.flat(i) = v2[i];
        out.push_back(std::move(c));
    }
    return out;
}

CohomologyDims PreJJComplex::cohomology(std::size_t k) const {
    if (k > cap_) throw precondition_error("cohomology: degree above cap");
    CohomologyDims dims{};
    dims.dim_a = a_space_basis(k).size();
    if (k == 0) {
        // C^0 = A^0: kernel of d^0 restricted to the constrained space
        std::vector<Cochain> ab = a_space_basis(0);
        dims.dim_c = ab.size();
        Matrix d0 = differential_matrix(*this, ab, c_dim(1), [&](const Cochain& g) { return d(g); });
        dims.dim_z = ab.size() - rank(d0);
        dims.dim_b = 0;
        dims.dim_h = dims.dim_z;
        return dims;
    }
    dims.dim_c = c_dim(k);
    std::vector<Cochain> cb = standard_basis(*this, k);
    Matrix dk = differential_matrix(*this, cb, c_dim(k + 1), [&](const Cochain& g) { return d(g); });
    dims.dim_z = dims.dim_c - rank(dk);
    std::vector<Cochain> ab = a_space_basis(k - 1);
    Matrix dm = differential_matrix(*this, ab, c_dim(k), [&](const Cochain& g) { return delta(g); });
    for (const Cochain& g : ab)
        if (!d(delta(g)).coeffs.is_zero())
            throw internal_check_error("zigzag d(delta(f)) != 0 on A^{k-1} basis");
    dims.dim_b = rank(dm);
    if (dims.dim_b > dims.dim_z) throw internal_check_error("B^k not contained in Z^k");
    dims.dim_h = dims.dim_z - dims.dim_b;
    return dims;
}

}  // namespace jjalg
