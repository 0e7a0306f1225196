#include "jjalg/scalar.hpp"

namespace jjalg {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;  // a, b < p < 2^32
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw error("division by zero in F_" + std::to_string(p));
    return mod_pow(a, p - 2, p);  // p prime
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw error("F_" + std::to_string(p) + ": modulus is not prime");
    return Field(p);
}

std::string Field::str() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

void require_same_field(Field a, Field b, const char* what) {
    if (!(a == b))
        throw field_mismatch_error(std::string(what) + ": " + a.str() + " vs " + b.str());
}

Scalar Scalar::zero(Field f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational())
        s.v_ = mpq_class{};
    else
        s.v_ = std::uint64_t{0};
    return s;
}

Scalar Scalar::one(Field f) { return integer(1, f); }

Scalar Scalar::integer(long n, Field f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.v_ = mpq_class(n);
    } else {
        std::uint64_t p = f.characteristic();
        long r = n % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        s.v_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::fraction(long num, long den) {
    if (den == 0) throw error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return rational(std::move(q));
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.field_ = Field::rationals();
    s.v_ = std::move(q);
    return s;
}

Scalar Scalar::residue(std::uint64_t r, Field f) {
    if (f.is_rational()) throw error("residue requires a prime field");
    Scalar s;
    s.field_ = f;
    s.v_ = r % f.characteristic();
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? sgn(std::get<mpq_class>(v_)) == 0
                                : std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? std::get<mpq_class>(v_) == 1
                                : std::get<std::uint64_t>(v_) == 1;
}

bool Scalar::is_integer() const {
    return field_.is_rational() ? std::get<mpq_class>(v_).get_den() == 1 : true;
}

const mpq_class& Scalar::rat() const {
    if (!field_.is_rational()) throw field_mismatch_error("rat(): scalar is not rational");
    return std::get<mpq_class>(v_);
}

std::uint64_t Scalar::res() const {
    if (field_.is_rational()) throw field_mismatch_error("res(): scalar is rational");
    return std::get<std::uint64_t>(v_);
}

Scalar Scalar::to_field(Field target) const {
    if (field_ == target) return *this;
    if (!field_.is_rational() || target.is_rational())
        throw field_mismatch_error("to_field: only Q -> F_p reduction is supported");
    std::uint64_t p = target.characteristic();
    const mpq_class& q = std::get<mpq_class>(v_);
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    std::uint64_t n = num.get_si() < 0 ? num.get_si() + static_cast<long>(p) : num.get_si();
    std::uint64_t d = den.get_ui();
    if (d == 0)
        throw field_mismatch_error("to_field: denominator vanishes mod " + std::to_string(p));
    return residue(mod_mul(n, mod_inv(d, p), p), target);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational()) {
        s.v_ = mpq_class(-std::get<mpq_class>(v_));
    } else {
        std::uint64_t r = std::get<std::uint64_t>(v_);
        s.v_ = r == 0 ? std::uint64_t{0} : field_.characteristic() - r;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    Scalar s = *this;
    if (field_.is_rational())
        s.v_ = mpq_class(1 / std::get<mpq_class>(v_));
    else
        s.v_ = mod_inv(std::get<std::uint64_t>(v_), field_.characteristic());
    return s;
}

std::string Scalar::str() const {
    return field_.is_rational() ? std::get<mpq_class>(v_).get_str()
                                : std::to_string(std::get<std::uint64_t>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar +");
    Scalar s = a;
    if (a.field_.is_rational())
        s.v_ = mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_));
    else
        s.v_ = mod_add(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_),
                       a.field_.characteristic());
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar -");
    Scalar s = a;
    if (a.field_.is_rational())
        s.v_ = mpq_class(std::get<mpq_class>(a.v_) - std::get<mpq_class>(b.v_));
    else
        s.v_ = mod_sub(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_),
                       a.field_.characteristic());
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar *");
    Scalar s = a;
    if (a.field_.is_rational())
        s.v_ = mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_));
    else
        s.v_ = mod_mul(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_),
                       a.field_.characteristic());
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar /");
    if (b.is_zero()) throw error("division by zero");
    Scalar s = a;
    if (a.field_.is_rational())
        s.v_ = mpq_class(std::get<mpq_class>(a.v_) / std::get<mpq_class>(b.v_));
    else
        s.v_ = mod_mul(std::get<std::uint64_t>(a.v_),
                       mod_inv(std::get<std::uint64_t>(b.v_), a.field_.characteristic()),
                       a.field_.characteristic());
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_field(a.field_, b.field_, "scalar ==");
    if (a.field_.is_rational())
        return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
    return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
}

}  // namespace jjalg
