#include "genpos/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace genpos {

bool Term::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

int Term::cls() const {
    for (int i = nvars() - 1; i >= 0; --i)
        if (e_[i] > 0) return i + 1;
    return 1;
}

bool Term::is_pure_power() const {
    int nz = 0;
    for (int v : e_)
        if (v > 0) ++nz;
    return nz == 1;
}

bool Term::divides(const Term& t) const {
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > t.e_[i]) return false;
    return true;
}

Term Term::operator*(const Term& t) const {
    Term r = *this;
    for (int i = 0; i < nvars(); ++i) r.e_[i] += t.e_[i];
    return r;
}

Term Term::operator/(const Term& t) const {
    Term r = *this;
    for (int i = 0; i < nvars(); ++i) {
        r.e_[i] -= t.e_[i];
        if (r.e_[i] < 0) throw std::logic_error("inexact term division");
    }
    return r;
}

Term Term::lcm(const Term& t) const {
    Term r = *this;
    for (int i = 0; i < nvars(); ++i) r.e_[i] = std::max(r.e_[i], t.e_[i]);
    return r;
}

Term Term::gcd(const Term& t) const {
    Term r = *this;
    for (int i = 0; i < nvars(); ++i) r.e_[i] = std::min(r.e_[i], t.e_[i]);
    return r;
}

bool Term::coprime(const Term& t) const {
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > 0 && t.e_[i] > 0) return false;
    return true;
}

Term Term::times_var(int i, int power) const {
    Term r = *this;
    r.e_[i - 1] += power;
    return r;
}

Term Term::over_var(int i, int power) const {
    Term r = *this;
    r.e_[i - 1] -= power;
    if (r.e_[i - 1] < 0) throw std::logic_error("inexact term division");
    return r;
}

std::string Term::str(const std::vector<std::string>& vars) const {
    if (is_one()) return "1";
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += i < static_cast<int>(vars.size()) ? vars[i] : "x" + std::to_string(i + 1);
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s;
}

bool degrevlex_less(const Term& a, const Term& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return revlex_less(a, b);
}

bool revlex_less(const Term& a, const Term& b) {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    for (int i = static_cast<int>(ea.size()) - 1; i >= 0; --i)
        if (ea[i] != eb[i]) return ea[i] > eb[i];
    return false;
}

}  // namespace genpos
