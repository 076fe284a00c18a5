#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genpos/field.hpp"
#include "genpos/monomial_ideal.hpp"
#include "genpos/param_poly.hpp"
#include "genpos/stability.hpp"
#include "helpers.hpp"

using namespace genpos;
using testutil::mono;
using testutil::t;

namespace {

// Independent comparator written straight from the definition: higher
// total degree wins; on equal degree, a > b iff the last nonzero entry of
// a - b is negative.
bool brute_degrevlex_less(const Term& a, const Term& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.nvars(); k >= 1; --k) {
        int d = a.exponent(k) - b.exponent(k);
        if (d != 0) return d > 0;  // a < b iff last nonzero entry positive
    }
    return false;
}

std::vector<Term> all_terms_up_to(int nvars, int maxdeg) {
    std::vector<Term> out;
    for (int d = 0; d <= maxdeg; ++d)
        for (const auto& u : MonomialIdeal::terms_of_degree(nvars, d)) out.push_back(u);
    return out;
}

long binom_mod(int n, int k, long p) {
    // Pascal's triangle mod p, independent of the Lucas implementation.
    std::vector<std::vector<long>> c(n + 1, std::vector<long>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1 % p;
        for (int j = 1; j <= i; ++j) c[i][j] = (c[i - 1][j - 1] + c[i - 1][j]) % p;
    }
    return c[n][k];
}

}  // namespace

TEST_CASE("term basics") {
    Term u = t(3, "x1^2*x3");
    CHECK(u.degree() == 3);
    CHECK(u.cls() == 3);
    CHECK(u.exponent(1) == 2);
    CHECK(Term(3).cls() == 1);  // cls(1) = 1 by convention
    CHECK(Term(3).is_one());
    CHECK(t(3, "x2^4").is_pure_power());
    CHECK_FALSE(u.is_pure_power());

    CHECK(t(3, "x1*x2").divides(t(3, "x1^2*x2*x3")));
    CHECK_FALSE(t(3, "x1^2").divides(t(3, "x1*x2^3")));
    CHECK(t(3, "x1*x2^2") * t(3, "x2*x3") == t(3, "x1*x2^3*x3"));
    CHECK(t(3, "x1^2*x2*x3") / t(3, "x1*x3") == t(3, "x1*x2"));
    CHECK(t(3, "x1^2*x2").lcm(t(3, "x1*x3")) == t(3, "x1^2*x2*x3"));
    CHECK(t(3, "x1^2*x2").gcd(t(3, "x1*x3")) == t(3, "x1"));
    CHECK(t(3, "x1^2").coprime(t(3, "x2*x3")));
    CHECK(t(3, "x1*x2").times_var(3, 2) == t(3, "x1*x2*x3^2"));
    CHECK(t(3, "x1*x3^2").over_var(3) == t(3, "x1*x3"));
}

TEST_CASE("degrevlex agrees with the definitional comparator") {
    auto terms = all_terms_up_to(3, 4);
    for (const auto& a : terms)
        for (const auto& b : terms)
            CHECK(degrevlex_less(a, b) == brute_degrevlex_less(a, b));
    // spot checks: x1 > x2 > x3, and within degree 2: x1^2 > x1x2 > x2^2 > x1x3
    CHECK(degrevlex_less(t(3, "x2"), t(3, "x1")));
    CHECK(degrevlex_less(t(3, "x1*x2"), t(3, "x1^2")));
    CHECK(degrevlex_less(t(3, "x2^2"), t(3, "x1*x2")));
    CHECK(degrevlex_less(t(3, "x1*x3"), t(3, "x2^2")));
}

TEST_CASE("revlex is the degree-free tail of degrevlex") {
    auto terms = all_terms_up_to(3, 3);
    for (const auto& a : terms)
        for (const auto& b : terms) {
            if (a.degree() == b.degree())
                CHECK(revlex_less(a, b) == degrevlex_less(a, b));
            // irreflexive + asymmetric
            if (revlex_less(a, b)) CHECK_FALSE(revlex_less(b, a));
        }
    // x2^3 smaller than x1^2 under pure revlex despite higher degree
    CHECK(revlex_less(t(3, "x2^3"), t(3, "x1^2")));
}

TEST_CASE("scalar arithmetic over QQ and GF(7)") {
    FieldSpec QQ;
    Scalar a = Scalar::from_int(QQ, 2), b = Scalar::from_int(QQ, 3);
    CHECK((a / b + b / a) == Scalar::from_mpq(QQ, mpq_class(13, 6)));
    CHECK((a - a).is_zero());
    CHECK((b * b.inverse()).is_one());

    FieldSpec F7{7};
    for (int x = 1; x < 7; ++x) {
        Scalar s = Scalar::from_int(F7, x);
        CHECK((s * s.inverse()).is_one());
        CHECK((s + (-s)).is_zero());
    }
    CHECK(Scalar::from_int(F7, 10) == Scalar::from_int(F7, 3));
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(is_prime(2));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("p_admissible matches Pascal's triangle") {
    for (long p : {2L, 3L, 5L})
        for (int m = 0; m <= 12; ++m)
            for (int s = 0; s <= m; ++s)
                CHECK(p_admissible(s, m, p) == (binom_mod(m, s, p) != 0));
}

TEST_CASE("monomial ideal minimal basis and membership") {
    auto J = mono(3, {"x1^2", "x1^2*x2", "x1*x3", "x1^3*x3"});
    CHECK(J.generators().size() == 2);  // redundant generators dropped
    CHECK(J.contains(t(3, "x1^2*x2^3")));
    CHECK(J.contains(t(3, "x1*x3")));
    CHECK_FALSE(J.contains(t(3, "x1*x2^4")));
    CHECK_FALSE(mono(3, {"x1^2"}).contains(t(3, "x1*x3")));
    CHECK(J.max_gen_degree() == 2);
    CHECK(MonomialIdeal(3).is_zero());
}

TEST_CASE("monomial ideal operations against brute-force membership") {
    std::mt19937 rng(42);
    auto pool = all_terms_up_to(3, 3);
    auto probe = all_terms_up_to(3, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Term> g1, g2;
        for (const auto& u : pool) {
            if (u.is_one()) continue;
            if (rng() % 6 == 0) g1.push_back(u);
            if (rng() % 6 == 0) g2.push_back(u);
        }
        if (g1.empty() || g2.empty()) continue;
        MonomialIdeal A(3, g1), B(3, g2);
        Term v = pool[rng() % pool.size()];

        auto S = A.plus(B);
        auto X = A.intersect(B);
        auto C = A.colon(v);
        int k = 1 + static_cast<int>(rng() % 3);
        auto V = A.saturate_var(k);
        for (const auto& u : probe) {
            CHECK(S.contains(u) == (A.contains(u) || B.contains(u)));
            CHECK(X.contains(u) == (A.contains(u) && B.contains(u)));
            CHECK(C.contains(u) == A.contains(u * v));
            // u in A : x_k^inf  iff  u * x_k^s in A for some s (s <= 8 is ample here)
            bool sat = false;
            for (int s = 0; s <= 8 && !sat; ++s) sat = A.contains(u.times_var(k, s));
            CHECK(V.contains(u) == sat);
        }
        // colon by an ideal: t in A : B iff t*b in A for every generator b
        auto CI = A.colon_ideal(B);
        for (const auto& u : probe) {
            bool all = true;
            for (const auto& b : B.generators()) all = all && A.contains(u * b);
            CHECK(CI.contains(u) == all);
        }
    }
}

TEST_CASE("dimension equals the maximal free variable subset") {
    // D = max |Z| over variable subsets Z such that no generator is
    // supported inside Z.
    auto brute_dim = [](const MonomialIdeal& J) {
        int n = J.nvars(), best = 0;
        for (int mask = 0; mask < (1 << n); ++mask) {
            bool ok = true;
            for (const auto& g : J.generators()) {
                bool inside = true;
                for (int i = 1; i <= n && inside; ++i)
                    if (g.exponent(i) > 0 && !(mask & (1 << (i - 1)))) inside = false;
                if (inside) { ok = false; break; }
            }
            if (ok) best = std::max(best, __builtin_popcount(mask));
        }
        return best;
    };
    std::mt19937 rng(7);
    auto pool = all_terms_up_to(4, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Term> g;
        for (const auto& u : pool)
            if (!u.is_one() && rng() % 8 == 0) g.push_back(u);
        MonomialIdeal J(4, g);
        CHECK(J.dimension() == brute_dim(J));
    }
    CHECK(mono(4, {"x1^2", "x2^2", "x1*x4"}).dimension() == 2);
    CHECK(mono(2, {"x1*x2", "x1^3"}).dimension() == 1);
    CHECK(MonomialIdeal(3).dimension() == 3);
}

TEST_CASE("graded dimension and degree enumeration") {
    CHECK(MonomialIdeal::terms_of_degree(3, 2).size() == 6);
    CHECK(MonomialIdeal::terms_of_degree_at_most(3, 2).size() == 10);
    auto J = mono(2, {"x1"});
    CHECK(J.graded_dimension(2) == 2);  // x1^2, x1*x2
    CHECK(MonomialIdeal(2).graded_dimension(5) == 0);
    auto members = J.members_of_degree(2);
    CHECK(members.size() == 2);
    for (const auto& u : members) CHECK(J.contains(u));
}

TEST_CASE("parameter polynomial exact division") {
    const int np = 3;
    auto P = [&](std::initializer_list<std::pair<std::vector<int>, long>> terms) {
        ParamPoly r(np, 0);
        for (const auto& [e, c] : terms) r.add(e, c);
        return r;
    };
    ParamPoly a = P({{{1, 0, 0}, 2}, {{0, 1, 0}, -3}, {{0, 0, 0}, 1}});
    ParamPoly b = P({{{0, 0, 1}, 1}, {{1, 1, 0}, 5}, {{0, 0, 0}, -2}});
    auto q = ParamPoly::exact_div(a * b, b);
    REQUIRE(q.has_value());
    CHECK((*q - a).is_zero());
    auto q2 = ParamPoly::exact_div(a * b + ParamPoly::constant(np, 0, 1), b);
    CHECK_FALSE(q2.has_value());  // remainder 1: not exact
    CHECK_FALSE(ParamPoly::exact_div(a, ParamPoly(np, 0)).has_value());

    // GF(5): division by a unit times a is exact with the inverse unit
    ParamPoly a5(np, 5), b5(np, 5);
    ParamPoly ab = a * b;  // named: terms() references would dangle on a temporary
    for (const auto& [e, c] : ab.terms()) a5.add(e, c);
    for (const auto& [e, c] : b.terms()) b5.add(e, c);
    auto q5 = ParamPoly::exact_div(a5, b5);
    REQUIRE(q5.has_value());
    ParamPoly diff = *q5 * b5 - a5;
    CHECK(diff.is_zero());
}
