#include "genpos/param_poly.hpp"

namespace genpos {

void ParamPoly::reduce(mpz_class& c) const {
    if (p_ > 0) {
        c %= p_;
        if (c < 0) c += p_;
    }
}

ParamPoly ParamPoly::constant(int nparams, std::int64_t p, const mpz_class& c) {
    ParamPoly r(nparams, p);
    r.add(std::vector<int>(nparams, 0), c);
    return r;
}

ParamPoly ParamPoly::parameter(int nparams, std::int64_t p, int idx) {
    ParamPoly r(nparams, p);
    std::vector<int> e(nparams, 0);
    e[idx] = 1;
    r.add(e, 1);
    return r;
}

bool ParamPoly::is_constant() const {
    if (t_.empty()) return true;
    return t_.size() == 1 && t_.begin()->first == std::vector<int>(nparams_, 0);
}

void ParamPoly::add(const std::vector<int>& e, const mpz_class& c) {
    mpz_class v = c;
    reduce(v);
    if (v == 0) return;
    auto [it, inserted] = t_.emplace(e, v);
    if (!inserted) {
        it->second += v;
        reduce(it->second);
        if (it->second == 0) t_.erase(it);
    }
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add(e, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add(e, -c);
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(nparams_, p_);
    for (const auto& [e, c] : t_) r.add(e, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r(nparams_, p_);
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) {
            std::vector<int> e = e1;
            for (int k = 0; k < nparams_; ++k) e[k] += e2[k];
            r.add(e, c1 * c2);
        }
    return r;
}

namespace {

// Iterator to the graded-lex greatest term; a degree-compatible order keeps
// the division loop's intermediate degrees bounded.
auto grlex_max(const std::map<std::vector<int>, mpz_class>& t) {
    auto deg = [](const std::vector<int>& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    };
    auto best = t.begin();
    int bd = deg(best->first);
    for (auto it = std::next(t.begin()); it != t.end(); ++it) {
        int d = deg(it->first);
        if (d > bd || (d == bd && best->first < it->first)) {
            best = it;
            bd = d;
        }
    }
    return best;
}

}  // namespace

std::optional<ParamPoly> ParamPoly::exact_div(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) return std::nullopt;
    ParamPoly q(a.nparams_, a.p_);
    ParamPoly r = a;
    const auto& [be, bc] = *grlex_max(b.t_);
    mpz_class binv;
    if (a.p_ > 0) {
        mpz_class mod(static_cast<long>(a.p_));
        mpz_invert(binv.get_mpz_t(), bc.get_mpz_t(), mod.get_mpz_t());
    }
    // Each iteration emits one quotient term; far more iterations than the
    // dividend's size signals a non-exact division, which callers treat as
    // a plain failure.
    long budget = 4 * static_cast<long>(a.t_.size()) + 256;
    std::vector<int> qe(a.nparams_), me(a.nparams_);
    mpz_class qc, prod;
    while (!r.is_zero()) {
        if (--budget < 0) return std::nullopt;
        const auto& [re, rc] = *grlex_max(r.t_);
        for (int k = 0; k < a.nparams_; ++k) {
            qe[k] = re[k] - be[k];
            if (qe[k] < 0) return std::nullopt;
        }
        if (a.p_ > 0) {
            qc = rc * binv;
        } else {
            if (!mpz_divisible_p(rc.get_mpz_t(), bc.get_mpz_t())) return std::nullopt;
            mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), bc.get_mpz_t());
        }
        q.add(qe, qc);
        for (const auto& [e, c] : b.t_) {
            for (int k = 0; k < a.nparams_; ++k) me[k] = qe[k] + e[k];
            prod = qc * c;
            r.add(me, -prod);
        }
    }
    return q;
}

ParamPoly ParamPoly::normalized() const {
    if (t_.empty()) return *this;
    ParamPoly r(nparams_, p_);
    if (p_ > 0) {
        mpz_class lead = t_.begin()->second;
        mpz_class inv;
        mpz_class mod(static_cast<long>(p_));
        mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), mod.get_mpz_t());
        for (const auto& [e, c] : t_) r.add(e, c * inv);
        return r;
    }
    mpz_class g = 0;
    for (const auto& [e, c] : t_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (t_.begin()->second < 0) g = -g;
    for (const auto& [e, c] : t_) r.add(e, c / g);
    return r;
}

std::string ParamPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : t_) {
        mpz_class a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (int k = 0; k < nparams_; ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += k < static_cast<int>(names.size()) ? names[k] : "a" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        if (mono.empty())
            s += a.get_str();
        else if (a == 1)
            s += mono;
        else
            s += a.get_str() + "*" + mono;
    }
    return s;
}

}  // namespace genpos
