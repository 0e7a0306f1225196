#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace jjalg {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mixing values from different ground fields.
class field_mismatch_error : public error {
public:
    using error::error;
};

/// Shape mismatch between vectors, matrices or tensors.
class dimension_error : public error {
public:
    using error::error;
};

/// Inverting a singular matrix or map.
class singular_matrix_error : public error {
public:
    using error::error;
};

/// A stated precondition does not hold (not an operator, not a morphism, ...).
class precondition_error : public error {
public:
    using error::error;
};

/// A theorem-backed postcondition failed; indicates a bug, never expected.
class internal_check_error : public error {
public:
    using error::error;
};

/// Search space larger than the configured budget.
class budget_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& msg, int line, int col)
        : error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

/// Ground field: the rationals or a prime field F_p.
class Field {
public:
    Field() = default;  // rationals
    static Field rationals() { return Field{}; }
    static Field prime(std::uint32_t p);  // throws if p is not prime
    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string str() const;
    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Exact scalar: arbitrary-precision rational, or residue in F_p.
/// Rationals are kept canonical (reduced, positive denominator);
/// residues lie in [0, p).
class Scalar {
public:
    Scalar() : field_(), v_(mpq_class{}) {}  // 0 over Q

    static Scalar zero(Field f);
    static Scalar one(Field f);
    static Scalar integer(long n, Field f);
    static Scalar fraction(long num, long den);  // over Q
    static Scalar rational(mpq_class q);         // canonicalized
    static Scalar residue(std::uint64_t r, Field f);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_integer() const;

    const mpq_class& rat() const;  // rationals only
    std::uint64_t res() const;     // prime fields only

    /// Q -> F_p reduction (throws if the denominator vanishes mod p);
    /// identity when target equals the current field.
    Scalar to_field(Field target) const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws on zero
    std::string str() const;

    friend Scalar operator+(const Scalar&, const Scalar&);
    friend Scalar operator-(const Scalar&, const Scalar&);
    friend Scalar operator*(const Scalar&, const Scalar&);
    friend Scalar operator/(const Scalar&, const Scalar&);
    friend bool operator==(const Scalar&, const Scalar&);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

private:
    Field field_;
    std::variant<mpq_class, std::uint64_t> v_;
};

void require_same_field(Field a, Field b, const char* what);

}  // namespace jjalg
