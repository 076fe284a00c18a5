#include "genpos/polynomial.hpp"

#include <stdexcept>

namespace genpos {

Polynomial Polynomial::monomial(FieldSpec field, const Term& t, const Scalar& c) {
    Polynomial p(field, t.nvars());
    if (!c.is_zero()) p.terms_.emplace(t, c);
    return p;
}

const Term& Polynomial::leading_term() const {
    if (is_zero()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Scalar& Polynomial::leading_coefficient() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [t, c] : terms_) d = std::max(d, t.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (is_zero()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [t, c] : terms_)
        if (t.degree() != d) return false;
    return true;
}

Scalar Polynomial::coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::add_monomial(const Term& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(field_, nvars_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [t, c] : b.terms_) r.add_monomial(t, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [t, c] : b.terms_) r.add_monomial(t, -c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.field_, a.nvars_);
    for (const auto& [ta, ca] : a.terms_)
        for (const auto& [tb, cb] : b.terms_) r.add_monomial(ta * tb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [t, k] : terms_) r.terms_.emplace(t, k * c);
    return r;
}

Polynomial Polynomial::times_term(const Term& t) const {
    Polynomial r(field_, nvars_);
    for (const auto& [u, c] : terms_) r.terms_.emplace(u * t, c);
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient().inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

std::string Polynomial::str(const std::vector<std::string>& vars) const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (neg) cs = cs.substr(1);
        first = false;
        if (t.is_one())
            s += cs;
        else if (cs == "1")
            s += t.str(vars);
        else
            s += cs + "*" + t.str(vars);
    }
    return s;
}

}  // namespace genpos
