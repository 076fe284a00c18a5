#include "genpos/monomial_ideal.hpp"

#include <algorithm>

namespace genpos {

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Term> gens) : nvars_(nvars) {
    // Minimalize: drop every generator divisible by another one.
    std::sort(gens.begin(), gens.end(),
              [](const Term& a, const Term& b) { return a.degree() < b.degree(); });
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : gens_)
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), RevlexGreater{});
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

bool MonomialIdeal::contains(const Term& t) const {
    for (const auto& g : gens_)
        if (g.divides(t)) return true;
    return false;
}

bool MonomialIdeal::contains_var_power(int i) const {
    for (const auto& g : gens_)
        if (g.is_pure_power() && g.cls() == i && g.exponent(i) > 0) return true;
    return false;
}

int MonomialIdeal::max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

MonomialIdeal MonomialIdeal::plus(const MonomialIdeal& o) const {
    auto gens = gens_;
    gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
    return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::plus_term(const Term& t) const {
    auto gens = gens_;
    gens.push_back(t);
    return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::plus_vars(int lo, int hi) const {
    auto gens = gens_;
    for (int i = lo; i <= hi; ++i) gens.push_back(Term::variable(nvars_, i));
    return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
    std::vector<Term> gens;
    for (const auto& a : gens_)
        for (const auto& b : o.gens_) gens.push_back(a.lcm(b));
    return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const Term& t) const {
    std::vector<Term> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(g / g.gcd(t));
    return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon_ideal(const MonomialIdeal& o) const {
    MonomialIdeal r;
    bool first = true;
    for (const auto& b : o.gens_) {
        MonomialIdeal c = colon(b);
        r = first ? c : r.intersect(c);
        first = false;
    }
    return first ? *this : r;
}

MonomialIdeal MonomialIdeal::saturate_var(int i) const {
    std::vector<Term> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) gens.push_back(g.over_var(i, g.exponent(i)));
    return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::saturate_ideal(const MonomialIdeal& o) const {
    MonomialIdeal cur = *this;
    for (;;) {
        MonomialIdeal next = cur.colon_ideal(o);
        if (next == cur) return cur;
        cur = next;
    }
}

MonomialIdeal MonomialIdeal::saturate_prefix(int m) const {
    MonomialIdeal v(nvars_);
    std::vector<Term> gens;
    for (int i = 1; i <= m; ++i) gens.push_back(Term::variable(nvars_, i));
    return saturate_ideal(MonomialIdeal(nvars_, std::move(gens)));
}

bool MonomialIdeal::includes(const MonomialIdeal& o) const {
    for (const auto& g : o.gens_)
        if (!contains(g)) return false;
    return true;
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
    return nvars_ == o.nvars_ && gens_ == o.gens_;
}

int MonomialIdeal::dimension() const {
    // Largest independent variable set: no generator supported inside it.
    int n = nvars_;
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& g : gens_) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (g.exponents()[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;  // -1 only for the unit ideal, which never arises here
}

std::vector<Term> MonomialIdeal::terms_of_degree(int nvars, int d) {
    std::vector<Term> out;
    std::vector<int> e(nvars, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            e[pos] = left;
            out.emplace_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v);
        }
        e[pos] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.emplace_back(e);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

std::vector<Term> MonomialIdeal::terms_of_degree_at_most(int nvars, int d) {
    std::vector<Term> out;
    for (int q = 0; q <= d; ++q) {
        auto part = terms_of_degree(nvars, q);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Term> MonomialIdeal::members_of_degree(int d) const {
    std::vector<Term> out;
    for (auto& t : terms_of_degree(nvars_, d))
        if (contains(t)) out.push_back(t);
    return out;
}

long MonomialIdeal::graded_dimension(int d) const {
    return static_cast<long>(members_of_degree(d).size());
}

}  // namespace genpos
