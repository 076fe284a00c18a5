#include "genpos/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace genpos {

bool p_admissible(int s, int m, std::int64_t p) {
    while (s > 0 || m > 0) {
        if (s % p > m % p) return false;
        s /= p;
        m /= p;
    }
    return true;
}

namespace {

void require_valid(const PositionKind& kind, FieldSpec field) {
    if (kind.p_variant && field.rationals())
        throw std::invalid_argument("p-variant over the rationals");
    if (kind.p_variant && kind.base == BaseKind::QuasiStable)
        throw std::invalid_argument("quasi-stable has no p-variant");
}

}  // namespace

std::vector<Obstruction> obstructions(const MonomialIdeal& J, PositionKind kind,
                                      FieldSpec field) {
    require_valid(kind, field);
    std::vector<Obstruction> out;
    if (J.is_zero()) return out;
    int n = J.nvars();
    int ell = kind.scope == ScopeKind::Full ? n - 1 : kind.ell;
    int lo = n - ell;  // scope floor: generators of class >= lo
    int q = J.max_gen_degree();

    for (const auto& g : J.generators()) {
        int m = g.cls();
        if (m < lo) continue;
        // Divisor indices: the class only, or every occupied index for the
        // strongly stable family (restricted to the scope floor).
        std::vector<int> divisors;
        if (kind.base == BaseKind::StronglyStable) {
            for (int j = std::max(lo, 2); j <= n; ++j)
                if (g.exponent(j) > 0) divisors.push_back(j);
        } else if (m > 1 && g.exponent(m) > 0) {
            divisors.push_back(m);
        }
        for (int j : divisors) {
            int imax = j - 1;
            if (kind.scope == ScopeKind::WeakEll) imax = std::min(imax, lo);
            for (int i = 1; i <= imax; ++i) {
                // Replacement powers to test for this (j, i) pair.
                std::vector<std::pair<int, int>> moves;  // (s removed, power added)
                if (kind.p_variant) {
                    for (int s = 1; s <= g.exponent(j); ++s)
                        if (p_admissible(s, g.exponent(j), field.p)) moves.push_back({s, s});
                } else if (kind.base == BaseKind::QuasiStable) {
                    moves.push_back({g.exponent(j), q});
                } else {
                    moves.push_back({1, 1});
                }
                for (auto [s, add] : moves) {
                    Term w = g.over_var(j, s).times_var(i, add);
                    if (!J.contains(w)) out.push_back({g, j, i, s, w});
                }
            }
        }
    }
    return out;
}

namespace {

// Deterministic pick among obstructions: smallest replacement index i,
// then largest moved index j, then revlex-greatest generator, then
// smallest s.  This is the order the transformation engine uses.
const Obstruction* pick(const std::vector<Obstruction>& obs) {
    const Obstruction* best = nullptr;
    for (const auto& o : obs) {
        if (!best) {
            best = &o;
            continue;
        }
        auto key = [](const Obstruction& x) { return std::pair(x.i, -x.j); };
        if (key(o) < key(*best) ||
            (key(o) == key(*best) &&
             (revlex_less(best->generator, o.generator) ||
              (best->generator == o.generator && o.s < best->s))))
            best = &o;
    }
    return best;
}

}  // namespace

CheckResult check_position(const MonomialIdeal& J, PositionKind kind, FieldSpec field) {
    auto obs = obstructions(J, kind, field);
    CheckResult r;
    if (!obs.empty()) {
        r.holds = false;
        r.obstruction = *pick(obs);
    }
    return r;
}

DqsResult dqs_test(const MonomialIdeal& J) {
    DqsResult r;
    if (J.is_zero()) return r;
    int n = J.nvars();
    int q = J.max_gen_degree();
    int ell = n;
    for (int j = 0; j <= n; ++j) {
        bool ok = true;
        for (int a = 1; a <= n - j && ok; ++a)
            if (!J.contains(Term::variable(n, a, q))) ok = false;
        if (ok) {
            ell = j;
            break;
        }
    }
    r.ell = ell;
    std::vector<Obstruction> obs;
    for (const auto& g : J.generators()) {
        int m = g.cls();
        if (m < n - ell || m == 1) continue;
        for (int i = 1; i < m; ++i) {
            Term w = g.over_var(m, g.exponent(m)).times_var(i, q);
            if (!J.contains(w)) obs.push_back({g, m, i, g.exponent(m), w});
        }
    }
    if (!obs.empty()) {
        r.holds = false;
        r.obstruction = *pick(obs);
    }
    return r;
}

bool is_noether_position(const MonomialIdeal& J) {
    if (J.is_zero()) return J.nvars() == J.dimension();
    int d = J.dimension();
    for (int i = 1; i <= J.nvars() - d; ++i)
        if (!J.contains_var_power(i)) return false;
    return true;
}

bool is_borel_fixed(const MonomialIdeal& J, FieldSpec field, int ell) {
    PositionKind kind;
    kind.base = BaseKind::StronglyStable;
    kind.scope = ell < 0 ? ScopeKind::Full : ScopeKind::Ell;
    kind.ell = ell;
    kind.p_variant = !field.rationals();
    return check_position(J, kind, field).holds;
}

ComponentwiseResult componentwise_check_direct(const PolynomialIdeal& I, BaseKind base) {
    PositionKind kind;
    kind.base = base;
    if (!check_position(I.leading_terms(), kind, I.field()).holds) return {false, -1};
    auto inv = monomial_invariants(I.leading_terms());
    if (!inv) return {false, -1};  // not quasi-stable, cannot bound the degrees
    int lo = I.min_generator_degree();
    for (int d = lo; d <= inv->regularity; ++d) {
        PolynomialIdeal comp = I.degree_component_ideal(d);
        if (comp.is_zero()) continue;
        if (!check_position(comp.leading_terms(), kind, I.field()).holds) return {false, d};
    }
    return {true, -1};
}

CriterionResult componentwise_criterion(const PolynomialIdeal& I) {
    CriterionResult r;
    auto pb = polynomial_pommaret_basis(I);
    if (!pb.finite) return r;
    r.applicable = true;
    r.basis = pb.basis;
    const auto& H = r.basis;
    auto reps = standard_representations(H);

    int mindeg = H.empty() ? 0 : H.front().degree();
    int maxdeg = 0;
    for (const auto& h : H) {
        mindeg = std::min(mindeg, h.degree());
        maxdeg = std::max(maxdeg, h.degree());
    }
    for (int d = mindeg; d <= maxdeg; ++d) {
        // Cohort of degree d: basis elements whose leading term is divided
        // by the leading term of some degree-d basis element.
        std::vector<bool> cohort(H.size(), false);
        for (size_t a = 0; a < H.size(); ++a) {
            if (H[a].degree() != d) continue;
            for (size_t b = 0; b < H.size(); ++b)
                if (H[a].leading_term().divides(H[b].leading_term())) cohort[b] = true;
        }
        const StandardRep* worst = nullptr;
        for (const auto& rep : reps) {
            if (!cohort[rep.alpha]) continue;
            bool leaves = false;
            for (size_t b = 0; b < H.size(); ++b)
                if (!rep.quotients[b].is_zero() && !cohort[b]) leaves = true;
            if (!leaves) continue;
            if (!worst ||
                revlex_less(H[worst->alpha].leading_term(), H[rep.alpha].leading_term()) ||
                (H[worst->alpha].leading_term() == H[rep.alpha].leading_term() &&
                 rep.k < worst->k))
                worst = &rep;
        }
        if (worst) {
            r.holds = false;
            r.failure = CriterionFailure{d, worst->alpha, worst->k};
            return r;
        }
    }
    r.holds = true;
    return r;
}

}  // namespace genpos
