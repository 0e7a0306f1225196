#pragma once

// Fast mod-p scan used by the exhaustive searches. Candidates are digit
// vectors in [0,p)^entries enumerated in lexicographic order; the range is
// partitioned across workers by candidate index, so results concatenate in
// order and are deterministic regardless of worker count.

#include "jjalg/scalar.hpp"

#include <cstdint>
#include <thread>
#include <vector>

namespace jjalg::fpk {

struct Mod {
    std::uint64_t p;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
};

/// Structure constants c[(i*dim + j)*dim + k], entries in [0,p).
struct AlgF {
    std::size_t dim;
    std::vector<std::uint64_t> c;
};

/// Action matrices, one v_dim x v_dim row-major matrix per basis element.
struct RepF {
    std::size_t v_dim;
    std::vector<std::vector<std::uint64_t>> mats;
};

inline void mult_alg(const AlgF& alg, const Mod& md, const std::uint64_t* x,
                     const std::uint64_t* y, std::uint64_t* out) {
    std::size_t n = alg.dim;
    for (std::size_t k = 0; k < n; ++k) out[k] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0) continue;
            std::uint64_t f = md.mul(x[i], y[j]);
            const std::uint64_t* row = &alg.c[(i * n + j) * n];
            for (std::size_t k = 0; k < n; ++k)
                if (row[k]) out[k] = md.add(out[k], md.mul(f, row[k]));
        }
    }
}

/// out += sum_i x[i] * (mats[i] column b), x a vector over the algebra.
inline void action_col(const RepF& rep, const Mod& md, const std::uint64_t* x, std::size_t b,
                       std::uint64_t* out) {
    std::size_t m = rep.v_dim;
    for (std::size_t i = 0; i < rep.mats.size(); ++i) {
        if (x[i] == 0) continue;
        const std::vector<std::uint64_t>& mt = rep.mats[i];
        for (std::size_t r = 0; r < m; ++r)
            if (mt[r * m + b]) out[r] = md.add(out[r], md.mul(x[i], mt[r * m + b]));
    }
}

/// T is a_dim x v_dim row-major; column a = image of basis vector a.
struct RbJJPred {
    const AlgF* alg;
    const RepF* rep;
    Mod md;
    std::vector<std::uint64_t> tu, tv, lhs, w;

    explicit RbJJPred(const AlgF* a, const RepF* r, std::uint64_t p)
        : alg(a), rep(r), md{p}, tu(a->dim), tv(a->dim), lhs(a->dim), w(r->v_dim) {}

    bool operator()(const std::uint32_t* t) {
        std::size_t n = alg->dim, m = rep->v_dim;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t k = 0; k < n; ++k) {
                    tu[k] = t[k * m + a];
                    tv[k] = t[k * m + b];
                }
                mult_alg(*alg, md, tu.data(), tv.data(), lhs.data());
                for (std::size_t k = 0; k < m; ++k) w[k] = 0;
                action_col(*rep, md, tu.data(), b, w.data());
                action_col(*rep, md, tv.data(), a, w.data());
                for (std::size_t k = 0; k < n; ++k) {
                    std::uint64_t acc = 0;
                    for (std::size_t c = 0; c < m; ++c)
                        if (w[c]) acc = md.add(acc, md.mul(t[k * m + c], w[c]));
                    if (acc != lhs[k]) return false;
                }
            }
        return true;
    }
};

struct RbPreJJPred {
    const AlgF* alg;
    const RepF* rho;
    const RepF* mu;
    Mod md;
    std::vector<std::uint64_t> tu, tv, lhs, w;

    RbPreJJPred(const AlgF* a, const RepF* r, const RepF* m, std::uint64_t p)
        : alg(a), rho(r), mu(m), md{p}, tu(a->dim), tv(a->dim), lhs(a->dim), w(r->v_dim) {}

    bool operator()(const std::uint32_t* t) {
        std::size_t n = alg->dim, m = rho->v_dim;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                for (std::size_t k = 0; k < n; ++k) {
                    tu[k] = t[k * m + a];
                    tv[k] = t[k * m + b];
                }
                mult_alg(*alg, md, tu.data(), tv.data(), lhs.data());
                for (std::size_t k = 0; k < m; ++k) w[k] = 0;
                action_col(*rho, md, tu.data(), b, w.data());
                action_col(*mu, md, tv.data(), a, w.data());
                for (std::size_t k = 0; k < n; ++k) {
                    std::uint64_t acc = 0;
                    for (std::size_t c = 0; c < m; ++c)
                        if (w[c]) acc = md.add(acc, md.mul(t[k * m + c], w[c]));
                    if (acc != lhs[k]) return false;
                }
            }
        return true;
    }
};

/// N(e_i).N(e_j) = N(N(e_i).e_j + e_i.N(e_j) - N(e_i.e_j)); N is dim x dim row-major.
struct NijenhuisPred {
    const AlgF* alg;
    Mod md;
    std::vector<std::uint64_t> ni, nj, lhs, inner, t1, t2, rhs;

    NijenhuisPred(const AlgF* a, std::uint64_t p)
        : alg(a), md{p}, ni(a->dim), nj(a->dim), lhs(a->dim), inner(a->dim), t1(a->dim),
          t2(a->dim), rhs(a->dim) {}

    bool operator()(const std::uint32_t* nm) {
        std::size_t n = alg->dim;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    ni[k] = nm[k * n + i];
                    nj[k] = nm[k * n + j];
                }
                mult_alg(*alg, md, ni.data(), nj.data(), lhs.data());
                // inner = N(e_i).e_j + e_i.N(e_j) - N(e_i.e_j)
                for (std::size_t k = 0; k < n; ++k) {
                    const std::uint64_t* cij = &alg->c[(i * n + j) * n];
                    std::uint64_t nc = 0;
                    for (std::size_t c = 0; c < n; ++c)
                        if (cij[c]) nc = md.add(nc, md.mul(nm[k * n + c], cij[c]));
                    t2[k] = nc;
                }
                for (std::size_t k = 0; k < n; ++k) inner[k] = 0;
                // N(e_i).e_j: x = ni, y = e_j
                for (std::size_t a = 0; a < n; ++a) {
                    if (ni[a] == 0) continue;
                    const std::uint64_t* row = &alg->c[(a * n + j) * n];
                    for (std::size_t k = 0; k < n; ++k)
                        if (row[k]) inner[k] = md.add(inner[k], md.mul(ni[a], row[k]));
                }
                // e_i.N(e_j)
                for (std::size_t b = 0; b < n; ++b) {
                    if (nj[b] == 0) continue;
                    const std::uint64_t* row = &alg->c[(i * n + b) * n];
                    for (std::size_t k = 0; k < n; ++k)
                        if (row[k]) inner[k] = md.add(inner[k], md.mul(nj[b], row[k]));
                }
                for (std::size_t k = 0; k < n; ++k) inner[k] = md.sub(inner[k], t2[k]);
                for (std::size_t k = 0; k < n; ++k) {
                    std::uint64_t acc = 0;
                    for (std::size_t c = 0; c < n; ++c)
                        if (inner[c]) acc = md.add(acc, md.mul(nm[k * n + c], inner[c]));
                    if (acc != lhs[k]) return false;
                }
            }
        return true;
    }
};

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit);

/// Scans all p^entries digit vectors; PredFactory builds one predicate per
/// worker (predicates may keep scratch buffers).
template <class PredFactory>
std::vector<std::vector<std::uint32_t>> scan(std::size_t entries, std::uint32_t p,
                                             std::uint64_t budget, unsigned workers,
                                             PredFactory make_pred) {
    std::uint64_t total = checked_pow(p, entries, budget);
    if (workers == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw == 0 ? 1 : (hw > 8 ? 8 : hw);
    }
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<unsigned>(total);
    if (workers == 0) workers = 1;

    std::vector<std::vector<std::vector<std::uint32_t>>> found(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        std::uint64_t hi = lo + total / workers + (w < total % workers ? 1 : 0);
        threads.emplace_back([&, w, lo, hi]() {
            auto pred = make_pred();
            std::vector<std::uint32_t> digits(entries, 0);
            std::uint64_t idx = lo;
            for (std::size_t k = entries; k-- > 0;) {
                digits[k] = static_cast<std::uint32_t>(idx % p);
                idx /= p;
            }
            for (std::uint64_t c = lo; c < hi; ++c) {
                if (pred(digits.data())) found[w].push_back(digits);
                for (std::size_t k = entries; k-- > 0;) {
                    if (++digits[k] < p) break;
                    digits[k] = 0;
                }
            }
        });
    }
    for (std::thread& t : threads) t.join();
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& part : found)
        for (auto& v : part) out.push_back(std::move(v));
    return out;
}

}  // namespace jjalg::fpk
