#include "genpos/field.hpp"

namespace genpos {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t mod_inverse(std::int64_t x, std::int64_t p) {
    std::int64_t a = x % p, b = p, u = 1, v = 0;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = u - q * v;
        u = v;
        v = t;
    }
    if (a != 1) throw std::domain_error("non-invertible residue");
    u %= p;
    if (u < 0) u += p;
    return u;
}

Scalar Scalar::from_int(FieldSpec field, std::int64_t v) {
    Scalar s(field);
    if (field.rationals()) {
        s.q_ = mpq_class(static_cast<long>(v));
    } else {
        s.r_ = v % field.p;
        if (s.r_ < 0) s.r_ += field.p;
    }
    return s;
}

Scalar Scalar::from_mpz(FieldSpec field, const mpz_class& v) {
    Scalar s(field);
    if (field.rationals()) {
        s.q_ = mpq_class(v);
    } else {
        mpz_class r = v % field.p;
        s.r_ = r.get_si();
        if (s.r_ < 0) s.r_ += field.p;
    }
    return s;
}

Scalar Scalar::from_mpq(FieldSpec field, const mpq_class& v) {
    if (field.rationals()) {
        Scalar s(field);
        s.q_ = v;
        s.q_.canonicalize();
        return s;
    }
    Scalar num = from_mpz(field, v.get_num());
    Scalar den = from_mpz(field, v.get_den());
    return num / den;
}

bool Scalar::is_zero() const { return field_.rationals() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.rationals() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.rationals())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    return s;
}

Scalar Scalar::inverse() const {
    Scalar s(field_);
    if (field_.rationals()) {
        if (q_ == 0) throw std::domain_error("division by zero");
        s.q_ = 1 / q_;
    } else {
        s.r_ = mod_inverse(r_, field_.p);
    }
    return s;
}

void Scalar::check_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) throw std::logic_error("mixed-field scalar arithmetic");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    Scalar s(a.field_);
    if (a.field_.rationals())
        s.q_ = a.q_ + b.q_;
    else {
        s.r_ = a.r_ + b.r_;
        if (s.r_ >= a.field_.p) s.r_ -= a.field_.p;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::check_same_field(a, b);
    Scalar s(a.field_);
    if (a.field_.rationals())
        s.q_ = a.q_ * b.q_;
    else
        s.r_ = (a.r_ * b.r_) % a.field_.p;  // p < 2^31, no overflow in int64
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && (field_.rationals() ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::str() const {
    return field_.rationals() ? q_.get_str() : std::to_string(r_);
}

}  // namespace genpos
