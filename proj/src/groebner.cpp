#include "genpos/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace genpos {

namespace {

// Index of the reducer in G whose leading term divides t, revlex-greatest
// leading term first; -1 if none.
int find_reducer(const Term& t, const std::vector<Polynomial>& G, int skip = -1) {
    int best = -1;
    for (int k = 0; k < static_cast<int>(G.size()); ++k) {
        if (k == skip || G[k].is_zero()) continue;
        if (!G[k].leading_term().divides(t)) continue;
        if (best < 0 || revlex_less(G[best].leading_term(), G[k].leading_term())) best = k;
    }
    return best;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    Polynomial r = f;
    for (;;) {
        bool reduced = false;
        for (const auto& [t, c] : r.terms()) {
            int k = find_reducer(t, G);
            if (k < 0) continue;
            const Polynomial& g = G[k];
            r = r - g.times_term(t / g.leading_term()).scaled(c / g.leading_coefficient());
            reduced = true;
            break;  // term map changed; restart the scan
        }
        if (!reduced) return r;
    }
}

std::vector<Polynomial> head_autoreduce(std::vector<Polynomial> F) {
    F.erase(std::remove_if(F.begin(), F.end(), [](const Polynomial& f) { return f.is_zero(); }),
            F.end());
    for (;;) {
        bool changed = false;
        for (int k = 0; k < static_cast<int>(F.size()); ++k) {
            int r = find_reducer(F[k].leading_term(), F, k);
            if (r < 0) continue;
            const Polynomial& g = F[r];
            F[k] = F[k] - g.times_term(F[k].leading_term() / g.leading_term())
                              .scaled(F[k].leading_coefficient() / g.leading_coefficient());
            if (F[k].is_zero()) F.erase(F.begin() + k);
            changed = true;
            break;
        }
        if (!changed) return F;
    }
}

std::vector<Polynomial> complete_autoreduce(std::vector<Polynomial> F) {
    F = head_autoreduce(std::move(F));
    for (;;) {
        bool changed = false;
        for (int k = 0; k < static_cast<int>(F.size()); ++k) {
            std::vector<Polynomial> others;
            for (int r = 0; r < static_cast<int>(F.size()); ++r)
                if (r != k) others.push_back(F[r]);
            Polynomial nf = normal_form(F[k], others);
            if (!(nf == F[k])) {
                changed = true;
                if (nf.is_zero()) {
                    F.erase(F.begin() + k);
                    break;
                }
                F[k] = nf;
            }
        }
        if (!changed) return F;
    }
}

std::vector<Term> leading_tuple(const std::vector<Polynomial>& F) {
    std::vector<Term> lts;
    for (const auto& f : head_autoreduce(F)) lts.push_back(f.leading_term());
    std::sort(lts.begin(), lts.end(), RevlexGreater{});
    return lts;
}

std::strong_ordering compare_ls(const std::vector<Term>& a, const std::vector<Term>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t k = 0; k < n; ++k) {
        if (revlex_less(a[k], b[k])) return std::strong_ordering::less;
        if (revlex_less(b[k], a[k])) return std::strong_ordering::greater;
    }
    if (a.size() == b.size()) return std::strong_ordering::equal;
    return a.size() < b.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

MonomialIdeal leading_ideal(const std::vector<Polynomial>& F) {
    std::vector<Term> lts;
    int nvars = 0;
    for (const auto& f : F)
        if (!f.is_zero()) {
            lts.push_back(f.leading_term());
            nvars = f.nvars();
        }
    return MonomialIdeal(nvars, std::move(lts));
}

std::vector<Polynomial> reduced_groebner_basis(const std::vector<Polynomial>& gens) {
    std::vector<Polynomial> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(g.monic());
    if (G.empty()) return G;

    struct Pair {
        int a, b;
        Term lcm;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](int k) {
        for (int j = 0; j < k; ++j)
            pairs.push_back({j, k, G[j].leading_term().lcm(G[k].leading_term())});
    };
    for (int k = 1; k < static_cast<int>(G.size()); ++k) push_pairs(k);

    auto pick = [&]() {
        // Normal selection: smallest lcm degree, ties by degrevlex then indices.
        int best = 0;
        for (int k = 1; k < static_cast<int>(pairs.size()); ++k) {
            const Term &a = pairs[k].lcm, &b = pairs[best].lcm;
            if (degrevlex_less(a, b) ||
                (a == b && std::pair(pairs[k].a, pairs[k].b) < std::pair(pairs[best].a, pairs[best].b)))
                best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + best);
        return p;
    };

    while (!pairs.empty()) {
        Pair p = pick();
        const Term &ta = G[p.a].leading_term(), &tb = G[p.b].leading_term();
        if (ta.coprime(tb)) continue;  // product criterion
        // Chain criterion: some third element divides the lcm and both
        // companion pairs were already handled (not pending).
        bool skip = false;
        for (int k = 0; k < static_cast<int>(G.size()) && !skip; ++k) {
            if (k == p.a || k == p.b) continue;
            if (!G[k].leading_term().divides(p.lcm)) continue;
            bool pending = false;
            for (const auto& q : pairs) {
                if ((q.a == std::min(p.a, k) && q.b == std::max(p.a, k)) ||
                    (q.a == std::min(p.b, k) && q.b == std::max(p.b, k))) {
                    pending = true;
                    break;
                }
            }
            if (!pending) skip = true;
        }
        if (skip) continue;
        Polynomial s = G[p.a].times_term(p.lcm / ta) - G[p.b].times_term(p.lcm / tb);
        Polynomial nf = normal_form(s, G);
        if (nf.is_zero()) continue;
        G.push_back(nf.monic());
        push_pairs(static_cast<int>(G.size()) - 1);
    }

    // Minimalize and interreduce.
    std::vector<Polynomial> minimal;
    for (int k = 0; k < static_cast<int>(G.size()); ++k) {
        bool redundant = false;
        for (int j = 0; j < static_cast<int>(G.size()); ++j) {
            if (j == k) continue;
            if (!G[j].leading_term().divides(G[k].leading_term())) continue;
            if (G[j].leading_term() == G[k].leading_term() && j > k) continue;
            redundant = true;
            break;
        }
        if (!redundant) minimal.push_back(G[k]);
    }
    std::vector<Polynomial> reduced;
    for (int k = 0; k < static_cast<int>(minimal.size()); ++k) {
        std::vector<Polynomial> others;
        for (int j = 0; j < static_cast<int>(minimal.size()); ++j)
            if (j != k) others.push_back(minimal[j]);
        reduced.push_back(normal_form(minimal[k], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return revlex_less(b.leading_term(), a.leading_term());
    });
    return reduced;
}

std::vector<Polynomial> row_reduce(std::vector<Polynomial> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const Polynomial& f) { return f.is_zero(); }),
               rows.end());
    std::vector<Polynomial> basis;  // echelon rows with distinct leading terms
    for (auto f : rows) {
        for (;;) {
            if (f.is_zero()) break;
            bool hit = false;
            for (const auto& b : basis)
                if (b.leading_term() == f.leading_term()) {
                    f = f - b.scaled(f.leading_coefficient());
                    hit = true;
                    break;
                }
            if (!hit) break;
        }
        if (!f.is_zero()) basis.push_back(f.monic());
    }
    // Back-substitute for the reduced form.
    for (int k = 0; k < static_cast<int>(basis.size()); ++k)
        for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
            if (j == k) continue;
            Scalar c = basis[k].coefficient(basis[j].leading_term());
            if (!c.is_zero()) basis[k] = basis[k] - basis[j].scaled(c);
        }
    std::sort(basis.begin(), basis.end(), [](const Polynomial& a, const Polynomial& b) {
        return degrevlex_less(b.leading_term(), a.leading_term());
    });
    return basis;
}

bool PolynomialIdeal::is_zero() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& f) { return f.is_zero(); });
}

bool PolynomialIdeal::is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& f) { return f.is_homogeneous(); });
}

const std::vector<Polynomial>& PolynomialIdeal::groebner_basis() const {
    if (!gb_) gb_ = std::make_shared<const std::vector<Polynomial>>(reduced_groebner_basis(gens_));
    return *gb_;
}

MonomialIdeal PolynomialIdeal::leading_terms() const {
    std::vector<Term> lts;
    for (const auto& g : groebner_basis()) lts.push_back(g.leading_term());
    return MonomialIdeal(nvars_, std::move(lts));
}

bool PolynomialIdeal::contains(const Polynomial& f) const {
    return normal_form(f, groebner_basis()).is_zero();
}

long PolynomialIdeal::graded_dimension(int d) const { return leading_terms().graded_dimension(d); }

int PolynomialIdeal::min_generator_degree() const {
    int d = -1;
    for (const auto& g : groebner_basis())
        if (d < 0 || g.degree() < d) d = g.degree();
    return d;
}

std::vector<Polynomial> PolynomialIdeal::degree_component_basis(int d) const {
    std::vector<Polynomial> rows;
    for (const auto& g : groebner_basis()) {
        if (g.degree() > d) continue;
        for (const auto& t : MonomialIdeal::terms_of_degree(nvars_, d - g.degree()))
            rows.push_back(g.times_term(t));
    }
    return row_reduce(std::move(rows));
}

PolynomialIdeal PolynomialIdeal::degree_component_ideal(int d) const {
    return PolynomialIdeal(field_, nvars_, degree_component_basis(d));
}

PolynomialIdeal PolynomialIdeal::truncation(int d) const {
    // For a degrevlex Groebner basis of a homogeneous ideal, the elements
    // of degree at most d generate the ideal of all slices up to degree d.
    std::vector<Polynomial> gens;
    for (const auto& g : groebner_basis())
        if (g.degree() <= d) gens.push_back(g);
    return PolynomialIdeal(field_, nvars_, std::move(gens));
}

PolynomialIdeal PolynomialIdeal::transformed(const LinearChange& psi) const {
    return PolynomialIdeal(field_, nvars_, psi.apply(gens_));
}

}  // namespace genpos
