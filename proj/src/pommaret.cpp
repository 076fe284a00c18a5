#include "genpos/pommaret.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace genpos {

bool involutive_divides(const Term& t, const Term& u) {
    if (!t.divides(u)) return false;
    Term cof = u / t;
    int c = t.cls();
    for (int k = 1; k < c; ++k)
        if (cof.exponent(k) > 0) return false;
    return true;
}

MonomialPommaret monomial_pommaret_basis(const MonomialIdeal& J) {
    MonomialPommaret out;
    if (J.is_zero()) {
        out.finite = true;
        return out;
    }
    int n = J.nvars();
    const auto& gens = J.generators();  // revlex-descending minimal basis
    std::set<Term, RevlexGreater> basis(gens.begin(), gens.end());
    for (size_t i = 0; i < gens.size(); ++i) {
        const Term& ti = gens[i];
        int c = ti.cls();
        MonomialIdeal prefix(n, std::vector<Term>(gens.begin(), gens.begin() + i));
        MonomialIdeal coloned = prefix.colon(ti);
        // Restrict to the subring in the variables below cls(t_i); a term of
        // that subring lies in the colon ideal iff one of these divides it.
        std::vector<Term> hat;
        for (const auto& g : coloned.generators())
            if (g.cls() < c || g.is_one()) hat.push_back(g);
        MonomialIdeal hat_ideal(n, hat);
        // Zero-dimensionality in the prefix ring: a pure power of every
        // variable x_1..x_{c-1} must be present.
        std::vector<int> bound(c - 1, 0);
        for (int v = 1; v < c; ++v) {
            int b = -1;
            for (const auto& g : hat_ideal.generators())
                if (g.is_pure_power() && g.cls() == v) b = g.exponent(v);
            if (b < 0) return out;  // infinite Pommaret basis
            bound[v - 1] = b;
        }
        // Enumerate the complement of the colon ideal inside the box and
        // attach its terms as cofactors of t_i.
        std::vector<int> e(n, 0);
        auto rec = [&](auto&& self, int v) -> void {
            if (v == c) {
                Term s{std::vector<int>(e)};
                if (!hat_ideal.contains(s)) basis.insert(s * ti);
                return;
            }
            for (int x = 0; x < bound[v - 1]; ++x) {
                e[v - 1] = x;
                self(self, v + 1);
            }
            e[v - 1] = 0;
        };
        rec(rec, 1);
    }
    out.finite = true;
    out.terms.assign(basis.begin(), basis.end());
    return out;
}

Polynomial involutive_normal_form(const Polynomial& f, const std::vector<Polynomial>& H) {
    Polynomial r = f;
    for (;;) {
        bool reduced = false;
        for (const auto& [t, c] : r.terms()) {
            int best = -1;
            for (int k = 0; k < static_cast<int>(H.size()); ++k) {
                if (H[k].is_zero() || !involutive_divides(H[k].leading_term(), t)) continue;
                if (best < 0 || revlex_less(H[best].leading_term(), H[k].leading_term()))
                    best = k;
            }
            if (best < 0) continue;
            const Polynomial& g = H[best];
            r = r - g.times_term(t / g.leading_term()).scaled(c / g.leading_coefficient());
            reduced = true;
            break;
        }
        if (!reduced) return r;
    }
}

PolynomialPommaret polynomial_pommaret_basis(const PolynomialIdeal& I, int degree_cap) {
    PolynomialPommaret out;
    const auto& G = I.groebner_basis();
    if (G.empty()) {
        out.finite = true;
        return out;
    }
    if (!monomial_pommaret_basis(I.leading_terms()).finite) return out;

    std::vector<Polynomial> H = G;
    int maxdeg = 0;
    for (const auto& g : G) maxdeg = std::max(maxdeg, g.degree());
    int cap = degree_cap >= 0 ? degree_cap : 2 * maxdeg * I.nvars();

    for (;;) {
        // Obstruction: a non-multiplicative product whose leading term has
        // no involutive divisor in the current set.  Pick the revlex
        // greatest leading term, then the smallest non-multiplicative index.
        int pick_h = -1, pick_k = -1;
        for (int h = 0; h < static_cast<int>(H.size()); ++h) {
            const Term& lt = H[h].leading_term();
            for (int k = 1; k < lt.cls(); ++k) {
                Term prod = lt.times_var(k);
                bool covered = false;
                for (const auto& g : H)
                    if (involutive_divides(g.leading_term(), prod)) {
                        covered = true;
                        break;
                    }
                if (covered) continue;
                if (pick_h < 0 || revlex_less(H[pick_h].leading_term(), lt) ||
                    (H[pick_h].leading_term() == lt && k < pick_k)) {
                    pick_h = h;
                    pick_k = k;
                }
                break;  // smallest k for this element found
            }
        }
        if (pick_h < 0) break;
        Polynomial prod = H[pick_h].times_term(Term::variable(I.nvars(), pick_k));
        Polynomial nf = involutive_normal_form(prod, H);
        if (nf.is_zero()) throw std::logic_error("uncovered involutive product reduced to zero");
        if (nf.degree() > cap) return out;  // safety cap exceeded; treat as infinite
        H.push_back(nf.monic());
    }
    std::sort(H.begin(), H.end(), [](const Polynomial& a, const Polynomial& b) {
        return revlex_less(b.leading_term(), a.leading_term());
    });
    out.finite = true;
    out.basis = std::move(H);
    return out;
}

std::vector<StandardRep> standard_representations(const std::vector<Polynomial>& H) {
    std::vector<StandardRep> reps;
    for (int alpha = 0; alpha < static_cast<int>(H.size()); ++alpha) {
        const Term& lt = H[alpha].leading_term();
        int n = lt.nvars();
        for (int k = 1; k < lt.cls(); ++k) {
            StandardRep rep;
            rep.alpha = alpha;
            rep.k = k;
            rep.quotients.assign(H.size(), Polynomial::zero(H[alpha].field(), n));
            Polynomial r = H[alpha].times_term(Term::variable(n, k));
            while (!r.is_zero()) {
                const Term& t = r.leading_term();
                int best = -1;
                for (int b = 0; b < static_cast<int>(H.size()); ++b) {
                    if (!involutive_divides(H[b].leading_term(), t)) continue;
                    if (best < 0 ||
                        revlex_less(H[best].leading_term(), H[b].leading_term()))
                        best = b;
                }
                if (best < 0)
                    throw std::logic_error("set is not involutively complete");
                Scalar c = r.leading_coefficient() / H[best].leading_coefficient();
                Term u = t / H[best].leading_term();
                rep.quotients[best].add_monomial(u, c);
                r = r - H[best].times_term(u).scaled(c);
            }
            reps.push_back(std::move(rep));
        }
    }
    return reps;
}

std::optional<Invariants> ideal_invariants(const PolynomialIdeal& I) {
    auto pb = polynomial_pommaret_basis(I);
    if (!pb.finite) return std::nullopt;
    Invariants inv;
    inv.dimension = I.leading_terms().dimension();
    int maxcls = 0;
    for (const auto& h : pb.basis) {
        inv.regularity = std::max(inv.regularity, h.degree());
        maxcls = std::max(maxcls, h.leading_term().cls());
    }
    inv.depth = I.nvars() - maxcls;
    return inv;
}

std::optional<Invariants> monomial_invariants(const MonomialIdeal& J) {
    auto pb = monomial_pommaret_basis(J);
    if (!pb.finite) return std::nullopt;
    Invariants inv;
    inv.dimension = J.dimension();
    int maxcls = 0;
    for (const auto& t : pb.terms) {
        inv.regularity = std::max(inv.regularity, t.degree());
        maxcls = std::max(maxcls, t.cls());
    }
    inv.depth = J.nvars() - maxcls;
    return inv;
}

}  // namespace genpos
