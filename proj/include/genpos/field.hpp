#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genpos {

// Coefficient domain: the rationals (p == 0) or a prime field GF(p), p < 2^31.
struct FieldSpec {
    std::int64_t p = 0;

    bool rationals() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const { return p == 0 ? "QQ" : "GF(" + std::to_string(p) + ")"; }
};

bool is_prime(std::int64_t n);

// x^{-1} mod p for x not divisible by p.
std::int64_t mod_inverse(std::int64_t x, std::int64_t p);

// An exact field element.  Over QQ the value is a reduced GMP rational;
// over GF(p) it is the residue in [0, p).
class Scalar {
   public:
    Scalar() : field_{0} {}
    explicit Scalar(FieldSpec field) : field_(field) {}

    static Scalar zero(FieldSpec field) { return Scalar(field); }
    static Scalar one(FieldSpec field) { return from_int(field, 1); }
    static Scalar from_int(FieldSpec field, std::int64_t v);
    static Scalar from_mpz(FieldSpec field, const mpz_class& v);
    static Scalar from_mpq(FieldSpec field, const mpq_class& v);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Only meaningful over QQ.
    const mpq_class& rational() const { return q_; }
    // Only meaningful over GF(p).
    std::int64_t residue() const { return r_; }

    std::string str() const;

   private:
    static void check_same_field(const Scalar& a, const Scalar& b);

    FieldSpec field_;
    mpq_class q_;
    std::int64_t r_ = 0;
};

}  // namespace genpos
