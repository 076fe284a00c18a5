#pragma once

#include <optional>

#include "genpos/groebner.hpp"

namespace genpos {

// Multiplicative variables of a term under the Pommaret division:
// x_cls, ..., x_n.  A variable index k is multiplicative iff k >= cls.
inline bool pommaret_multiplicative(const Term& t, int k) { return k >= t.cls(); }

// t is an involutive divisor of u: t | u and the cofactor u/t involves
// only multiplicative variables of t.
bool involutive_divides(const Term& t, const Term& u);

struct MonomialPommaret {
    bool finite = false;
    std::vector<Term> terms;  // revlex-descending when finite
};

// Pommaret basis of a monomial ideal, assembled from the complements of
// the colon ideals of the revlex-sorted minimal generators; reports an
// infinite basis when one of those colon ideals fails to be
// zero-dimensional in its prefix ring.
MonomialPommaret monomial_pommaret_basis(const MonomialIdeal& J);

struct PolynomialPommaret {
    bool finite = false;
    std::vector<Polynomial> basis;
};

// Involutive completion of the reduced Groebner basis; refuses (finite =
// false) unless the leading ideal is quasi-stable.  degree_cap < 0 picks
// the default safety cap 2 * maxdeg * nvars.
PolynomialPommaret polynomial_pommaret_basis(const PolynomialIdeal& I, int degree_cap = -1);

Polynomial involutive_normal_form(const Polynomial& f, const std::vector<Polynomial>& H);

// x_k * H[alpha] = sum_beta quotients[beta] * H[beta], with each quotient
// supported on multiplicative variables of lt(H[beta]).
struct StandardRep {
    int alpha = 0;
    int k = 0;
    std::vector<Polynomial> quotients;
};

std::vector<StandardRep> standard_representations(const std::vector<Polynomial>& H);

struct Invariants {
    int regularity = 0;
    int depth = 0;
    int dimension = 0;
};

// Castelnuovo-Mumford regularity, depth and Krull dimension read off a
// finite Pommaret basis; nullopt when the ideal is not quasi-stable.
std::optional<Invariants> ideal_invariants(const PolynomialIdeal& I);
std::optional<Invariants> monomial_invariants(const MonomialIdeal& J);

}  // namespace genpos
