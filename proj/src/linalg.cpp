#include "jjalg/linalg.hpp"

namespace jjalg {

Vec::Vec(Field f, std::vector<Scalar> entries) : field_(f), e_(std::move(entries)) {
    for (const Scalar& s : e_) require_same_field(field_, s.field(), "vector entries");
}

Vec Vec::basis(Field f, std::size_t n, std::size_t i) {
    Vec v(f, n);
    if (i >= n) throw dimension_error("basis index out of range");
    v[i] = Scalar::one(f);
    return v;
}

bool Vec::is_zero() const {
    for (const Scalar& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

Vec Vec::operator+(const Vec& o) const {
    require_same_field(field_, o.field_, "vector +");
    if (size() != o.size()) throw dimension_error("vector +: size mismatch");
    Vec r = *this;
    for (std::size_t i = 0; i < size(); ++i) r[i] += o[i];
    return r;
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::operator-() const {
    Vec r = *this;
    for (std::size_t i = 0; i < size(); ++i) r[i] = -r[i];
    return r;
}

Vec Vec::scaled(const Scalar& s) const {
    require_same_field(field_, s.field(), "vector scale");
    Vec r = *this;
    for (std::size_t i = 0; i < size(); ++i) r[i] *= s;
    return r;
}

bool Vec::operator==(const Vec& o) const {
    require_same_field(field_, o.field_, "vector ==");
    if (size() != o.size()) throw dimension_error("vector ==: size mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Vec Vec::to_field(Field target) const {
    Vec r(target, size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = e_[i].to_field(target);
    return r;
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(Field f, std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(f, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw dimension_error("from_rows: ragged rows");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = Scalar::integer(v, f);
        ++i;
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(field_, o.field_, "matrix +");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix +: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (Scalar& s : r.e_) s = -s;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(field_, o.field_, "matrix *");
    if (cols_ != o.rows_) throw dimension_error("matrix *: inner dimension mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    require_same_field(field_, s.field(), "matrix scale");
    Matrix r = *this;
    for (Scalar& x : r.e_) x *= s;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    require_same_field(field_, v.field(), "matrix apply");
    if (v.size() != cols_) throw dimension_error("matrix apply: size mismatch");
    Vec r(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) r[i] += at(i, j) * v[j];
    }
    return r;
}

Vec Matrix::col(std::size_t c) const {
    Vec r(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, c);
    return r;
}

Vec Matrix::row(std::size_t r) const {
    Vec x(field_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) x[j] = at(r, j);
    return x;
}

bool Matrix::operator==(const Matrix& o) const {
    require_same_field(field_, o.field_, "matrix ==");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("matrix ==: shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Matrix Matrix::to_field(Field target) const {
    Matrix r(target, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].to_field(target);
    return r;
}

Tensor::Tensor(Field f, std::vector<std::size_t> shape) : field_(f), shape_(std::move(shape)) {
    std::size_t n = 1;
    for (std::size_t d : shape_) n *= d;
    e_.assign(n, Scalar::zero(f));
}

std::size_t Tensor::flat_index(const std::vector<std::size_t>& idx) const {
    if (idx.size() != shape_.size()) throw dimension_error("tensor index arity mismatch");
    std::size_t f = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= shape_[k]) throw dimension_error("tensor index out of range");
        f = f * shape_[k] + idx[k];
    }
    return f;
}

bool Tensor::is_zero() const {
    for (const Scalar& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

bool Tensor::operator==(const Tensor& o) const {
    require_same_field(field_, o.field_, "tensor ==");
    if (shape_ != o.shape_) throw dimension_error("tensor ==: shape mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Tensor Tensor::operator+(const Tensor& o) const {
    require_same_field(field_, o.field_, "tensor +");
    if (shape_ != o.shape_) throw dimension_error("tensor +: shape mismatch");
    Tensor r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
    Tensor n = o;
    for (Scalar& s : n.e_) s = -s;
    return *this + n;
}

Tensor Tensor::scaled(const Scalar& s) const {
    Tensor r = *this;
    for (Scalar& x : r.e_) x *= s;
    return r;
}

Tensor Tensor::to_field(Field target) const {
    Tensor r(target, shape_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].to_field(target);
    return r;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    return LinearMap(m_ * inner.m_);
}

LinearMap LinearMap::inverse() const { return LinearMap(jjalg::inverse(m_)); }

bool LinearMap::invertible() const {
    return m_.rows() == m_.cols() && rank(m_) == m_.rows();
}

Matrix rref(Matrix m) {
    std::size_t lead = 0;
    for (std::size_t r = 0; r < m.rows() && lead < m.cols(); ++r) {
        std::size_t pr = r;
        while (pr < m.rows() && m.at(pr, lead).is_zero()) {
            ++pr;
            if (pr == m.rows()) {
                pr = r;
                ++lead;
                if (lead == m.cols()) return m;
            }
        }
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(r, c));
        Scalar inv = m.at(r, lead).inverse();
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, lead).is_zero()) continue;
            Scalar f = m.at(i, lead);
            for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) -= f * m.at(r, c);
        }
        ++lead;
    }
    return m;
}

namespace {

std::vector<std::size_t> pivot_columns(const Matrix& r) {
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = piv.empty() ? 0 : piv.back() + 1; j < r.cols(); ++j)
            if (!r.at(i, j).is_zero()) {
                piv.push_back(j);
                break;
            }
    return piv;
}

}  // namespace

std::size_t rank(const Matrix& m) { return pivot_columns(rref(m)).size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    Matrix r = rref(m);
    std::vector<std::size_t> piv = pivot_columns(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : piv) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.field(), m.cols());
        v[f] = Scalar::one(m.field());
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("inverse: matrix not square");
    std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    Matrix r = rref(std::move(aug));
    for (std::size_t i = 0; i < n; ++i)
        if (!r.at(i, i).is_one()) throw singular_matrix_error("inverse: singular matrix");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    require_same_field(m.field(), b.field(), "solve");
    if (b.size() != m.rows()) throw dimension_error("solve: rhs size mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    Matrix r = rref(std::move(aug));
    std::vector<std::size_t> piv = pivot_columns(r);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;  // inconsistent
    Vec x(m.field(), m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, m.cols());
    return x;
}

MultiIndex::MultiIndex(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
    idx_.assign(shape_.size(), 0);
    valid_ = true;
    for (std::size_t d : shape_)
        if (d == 0) valid_ = false;
}

bool MultiIndex::next() {
    if (!valid_) return false;
    for (std::size_t k = shape_.size(); k-- > 0;) {
        if (++idx_[k] < shape_[k]) return true;
        idx_[k] = 0;
    }
    valid_ = false;
    return false;
}

}  // namespace jjalg
