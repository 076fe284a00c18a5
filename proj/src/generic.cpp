#include "genpos/generic.hpp"

#include <algorithm>

#include "genpos/pommaret.hpp"
#include <set>
#include <stdexcept>

namespace genpos {

namespace {

// An x-polynomial with parameter-polynomial coefficients, terms kept in
// descending degrevlex order.
struct PPoly {
    std::map<Term, ParamPoly, DegrevlexGreater> t;

    bool is_zero() const { return t.empty(); }
    const Term& lt() const { return t.begin()->first; }
    const ParamPoly& lc() const { return t.begin()->second; }

    void add(const Term& u, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t.emplace(u, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
};

PPoly scale(const PPoly& f, const ParamPoly& c) {
    PPoly r;
    for (const auto& [u, k] : f.t) r.add(u, k * c);
    return r;
}

PPoly shift_scale(const PPoly& f, const Term& u, const ParamPoly& c) {
    PPoly r;
    for (const auto& [v, k] : f.t) r.add(v * u, k * c);
    return r;
}

PPoly sub(const PPoly& a, const PPoly& b) {
    PPoly r = a;
    for (const auto& [u, c] : b.t) r.add(u, -c);
    return r;
}

void check_capacity(const PPoly& f) {
    long total = 0;
    for (const auto& [u, c] : f.t) {
        if (c.num_terms() > 1000) throw std::runtime_error("gin capacity exceeded");
        total += c.num_terms();
    }
    if (total > 4000) throw std::runtime_error("gin capacity exceeded");
}

// Strip the overall integer content and normalize the sign of the leading
// coefficient's first term (no-op over GF(p)).
PPoly strip_content(const PPoly& f, std::int64_t p) {
    if (f.is_zero() || p > 0) return f;
    mpz_class g = 0;
    for (const auto& [u, c] : f.t)
        for (const auto& [e, z] : c.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (f.lc().terms().begin()->second < 0) g = -g;
    if (g == 1) return f;
    PPoly r;
    for (const auto& [u, c] : f.t) {
        ParamPoly d(c.nparams(), p);
        for (const auto& [e, z] : c.terms()) d.add(e, z / g);
        r.add(u, d);
    }
    return r;
}

}  // namespace

namespace {

// Castelnuovo-Mumford regularity, computed from a Pommaret basis in the
// given coordinates when possible, otherwise after a deterministic
// transformation into quasi-stable position (the regularity is invariant
// under linear changes of coordinates).
int regularity_of(const PolynomialIdeal& I) {
    if (auto inv = ideal_invariants(I)) return inv->regularity;
    auto tr = transform_to_position(I, PositionKind{BaseKind::QuasiStable});
    if (!tr.success)
        throw std::runtime_error("generic initial ideal: no quasi-stable position reached: " +
                                 tr.error);
    return ideal_invariants(tr.transformed)->regularity;
}

// Exact generic-branch computation over the parameter ring; throws a
// "gin capacity exceeded" error when the parametric minors grow beyond
// the work budget.
GinResult gin_parametric(const PolynomialIdeal& I) {
    int n = I.nvars();
    std::int64_t p = I.field().p;
    // Parameters a_km for k > m, the coefficient of x_m in the image of x_k.
    std::vector<std::vector<int>> pindex(n + 1, std::vector<int>(n + 1, -1));
    std::vector<std::string> pnames;
    int nparams = 0;
    for (int k = 2; k <= n; ++k)
        for (int m = 1; m < k; ++m) {
            pindex[k][m] = nparams++;
            pnames.push_back("a" + std::to_string(k) + std::to_string(m));
        }

    // Images of the variables under the generic change, with power cache.
    std::vector<PPoly> image(n + 1);
    std::vector<std::vector<PPoly>> powers(n + 1);
    for (int k = 1; k <= n; ++k) {
        PPoly lin;
        lin.add(Term::variable(n, k), ParamPoly::constant(nparams, p, 1));
        for (int m = 1; m < k; ++m)
            lin.add(Term::variable(n, m), ParamPoly::parameter(nparams, p, pindex[k][m]));
        image[k] = lin;
        PPoly one;
        one.add(Term(n), ParamPoly::constant(nparams, p, 1));
        powers[k] = {one, lin};
    }
    auto power = [&](int k, int e) -> const PPoly& {
        auto& cache = powers[k];
        while (static_cast<int>(cache.size()) <= e) {
            PPoly next;
            for (const auto& [u, c] : cache.back().t)
                for (const auto& [v, d] : image[k].t) next.add(u * v, c * d);
            cache.push_back(next);
        }
        return cache[e];
    };

    // Transformed generators with integral coefficients.
    std::vector<PPoly> G;
    for (const auto& f : I.generators()) {
        if (f.is_zero()) continue;
        mpz_class den = 1;
        if (p == 0)
            for (const auto& [u, c] : f.terms())
                mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den().get_mpz_t());
        PPoly g;
        for (const auto& [u, c] : f.terms()) {
            mpz_class z = p == 0 ? mpz_class(c.rational() * den) : mpz_class(c.residue());
            PPoly mono;
            mono.add(Term(n), ParamPoly::constant(nparams, p, z));
            for (int k = 1; k <= n; ++k)
                if (u.exponent(k) > 0) {
                    const PPoly& pw = power(k, u.exponent(k));
                    PPoly next;
                    for (const auto& [a, ca] : mono.t)
                        for (const auto& [b, cb] : pw.t) next.add(a * b, ca * cb);
                    mono = next;
                }
            for (const auto& [a, ca] : mono.t) g.add(a, ca);
        }
        if (!g.is_zero()) G.push_back(strip_content(g, p));
    }

    std::set<std::string> ledger;
    auto note = [&](const ParamPoly& c) {
        if (!c.is_constant()) ledger.insert(c.normalized().str(pnames));
    };

    // The generic initial ideal is generated in degrees up to the
    // regularity, and its degree-d slice consists exactly of the pivot
    // terms of a row reduction of the transformed slice I_d.  Work degree
    // by degree, skipping slices whose dimension is already accounted for
    // by the pivots found in lower degrees.
    int maxreg = regularity_of(I);
    int mindeg = -1;
    for (const auto& g : G)
        if (mindeg < 0 || g.lt().degree() < mindeg) mindeg = g.lt().degree();

    std::vector<Term> pivots;
    for (int d = mindeg; d <= maxreg; ++d) {
        MonomialIdeal J(n, pivots);
        if (J.graded_dimension(d) == I.graded_dimension(d)) continue;

        // Single-step fraction-free (Bareiss) forward elimination with lazy
        // catch-up: entry values are minors of the slice matrix, and every
        // division below is exact.  A row skipped at a pivot step has a
        // zero entry in that pivot column (its support lies weakly below
        // its own leading term), so a skipped stretch telescopes into one
        // multiplication and one exact division.
        struct Row {
            PPoly f;
            int step;  // f is the Bareiss value of this row at this step
        };
        std::vector<Row> rows;
        ParamPoly unit = ParamPoly::constant(nparams, p, 1);
        for (const auto& g : G) {
            int e = d - g.lt().degree();
            if (e < 0) continue;
            for (const auto& m : MonomialIdeal::terms_of_degree(n, e))
                rows.push_back({shift_scale(g, m, unit), 0});
        }
        std::vector<ParamPoly> piv_lc = {unit};  // p_0 = 1
        // Exact quotient of every coefficient; on the (unexpected) failure
        // of a division the undivided row is returned, which only rescales
        // the row and never changes which entries vanish.
        auto div_row = [&](PPoly f, const ParamPoly& den) {
            if (den.is_constant() && den == unit) return f;
            PPoly out;
            for (const auto& [u, c] : f.t) {
                auto q = ParamPoly::exact_div(c, den);
                if (!q) return f;
                out.add(u, *q);
            }
            return out;
        };
        auto catch_up = [&](Row& r, int k) {
            if (r.step == k) return;
            r.f = div_row(scale(r.f, piv_lc[k]), piv_lc[r.step]);
            r.step = k;
        };
        // The column order is descending degrevlex, so the pivot terms are
        // the leading terms of the generically transformed slice.
        while (!rows.empty()) {
            int best = -1;
            for (int k = 0; k < static_cast<int>(rows.size()); ++k) {
                if (best < 0) {
                    best = k;
                    continue;
                }
                const Term &a = rows[k].f.lt(), &b = rows[best].f.lt();
                if (degrevlex_less(b, a) ||
                    (a == b && rows[k].f.lc().num_terms() < rows[best].f.lc().num_terms()))
                    best = k;
            }
            int kprev = static_cast<int>(piv_lc.size()) - 1;
            Row piv = std::move(rows[best]);
            rows.erase(rows.begin() + best);
            catch_up(piv, kprev);
            note(piv.f.lc());
            pivots.push_back(piv.f.lt());
            piv_lc.push_back(piv.f.lc());
            for (auto& r : rows) {
                if (!(r.f.lt() == piv.f.lt())) continue;
                catch_up(r, kprev);
                PPoly next = sub(scale(r.f, piv.f.lc()), scale(piv.f, r.f.lc()));
                r.f = div_row(std::move(next), piv_lc[kprev]);
                r.step = kprev + 1;
                check_capacity(r.f);
            }
            std::erase_if(rows, [](const Row& r) { return r.f.is_zero(); });
            if (pivots.size() > 100000) throw std::runtime_error("gin capacity exceeded");
        }
    }

    GinResult out;
    out.gin = MonomialIdeal(n, std::move(pivots));
    out.ledger.assign(ledger.begin(), ledger.end());
    out.method = "parametric";
    return out;
}

// Fallback for ideals whose parametric minors outgrow the work budget:
// evaluate the generic unipotent change at a deterministic family of
// geometric points of increasing height and accept once two consecutive
// substitutions agree on a Borel-fixed leading ideal.  Only used over the
// rationals, where such points exhaust any proper closed locus.
GinResult gin_by_substitution(const PolynomialIdeal& I) {
    int n = I.nvars();
    const FieldSpec& field = I.field();
    MonomialIdeal prev;
    bool have_prev = false;
    for (int trial = 1; trial <= 40; ++trial) {
        std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n, Scalar::zero(field)));
        mpz_class base = trial + 2, value = 1;
        for (int k = 0; k < n; ++k) mat[k][k] = Scalar::one(field);
        for (int k = 2; k <= n; ++k)
            for (int m = 1; m < k; ++m) {
                value *= base;
                mat[k - 1][m - 1] = Scalar::from_mpz(field, value);
            }
        auto psi = LinearChange::from_matrix(field, mat);
        MonomialIdeal J = I.transformed(psi).leading_terms();
        if (have_prev && J == prev && is_borel_fixed(J, field)) {
            GinResult out;
            out.gin = std::move(J);
            out.method = "substitution";
            return out;
        }
        prev = std::move(J);
        have_prev = true;
    }
    throw std::runtime_error("gin did not stabilize under substitution fallback");
}

}  // namespace

GinResult generic_initial_ideal(const PolynomialIdeal& I) {
    try {
        return gin_parametric(I);
    } catch (const std::runtime_error& e) {
        if (I.field().p != 0 ||
            std::string_view(e.what()).find("capacity") == std::string_view::npos)
            throw;
        return gin_by_substitution(I);
    }
}

std::vector<long> beta_vector(const MonomialIdeal& J, int q) {
    std::vector<long> beta(J.nvars(), 0);
    for (const auto& t : J.members_of_degree(q)) ++beta[t.cls() - 1];
    return beta;
}

bool beta_lex_less(const std::vector<long>& a, const std::vector<long>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

BetaMaxResult is_beta_maximal(const PolynomialIdeal& I) {
    BetaMaxResult r;
    MonomialIdeal lt = I.leading_terms();
    auto inv = monomial_invariants(lt);
    if (!inv) {
        r.quasi_stable = false;
        return r;  // not quasi-stable: not beta-maximal by definition
    }
    MonomialIdeal gin = generic_initial_ideal(I).gin;
    for (int q = I.min_generator_degree(); q <= inv->regularity; ++q) {
        r.beta_ideal = beta_vector(lt, q);
        r.beta_gin = beta_vector(gin, q);
        if (r.beta_ideal != r.beta_gin) {
            r.failing_degree = q;
            return r;
        }
    }
    r.holds = true;
    return r;
}

bool is_gin_position(const PolynomialIdeal& I) {
    return I.leading_terms() == generic_initial_ideal(I).gin;
}

long pommaret_span_hilbert(const std::vector<Term>& Bq, int nvars, int q, int s) {
    if (s < q) return 0;
    long count = 0;
    for (const auto& t : Bq) {
        int c = t.cls();
        count += static_cast<long>(MonomialIdeal::terms_of_degree(nvars - c + 1, s - q).size());
    }
    return count;
}

namespace {

AnnihilatorNumbers tally(int n, const std::vector<Term>& lts) {
    AnnihilatorNumbers r;
    r.quasi_stable = true;
    int maxcls = 0;
    for (const auto& t : lts) {
        r.regularity = std::max(r.regularity, t.degree());
        maxcls = std::max(maxcls, t.cls());
    }
    r.depth = n - maxcls;
    r.alpha.assign(n, std::vector<long>(std::max(r.regularity, 1), 0));
    for (const auto& t : lts) ++r.alpha[n - t.cls()][t.degree() - 1];
    return r;
}

}  // namespace

AnnihilatorNumbers annihilator_numbers(const PolynomialIdeal& I) {
    auto pb = polynomial_pommaret_basis(I);
    if (!pb.finite) return {};
    std::vector<Term> lts;
    for (const auto& h : pb.basis) lts.push_back(h.leading_term());
    return tally(I.nvars(), lts);
}

AnnihilatorNumbers monomial_annihilator_numbers(const MonomialIdeal& J) {
    auto pb = monomial_pommaret_basis(J);
    if (!pb.finite) return {};
    return tally(J.nvars(), pb.terms);
}

AnnihilatorNumbers generic_annihilator_numbers(const PolynomialIdeal& I) {
    return monomial_annihilator_numbers(generic_initial_ideal(I).gin);
}

}  // namespace genpos
