#pragma once

#include "genpos/param_poly.hpp"
#include "genpos/stability.hpp"
#include "genpos/transform.hpp"

namespace genpos {

struct GinResult {
    MonomialIdeal gin;
    // Parameter polynomials assumed nonzero during the elimination,
    // content- and sign-normalized, duplicates removed.  Empty when the
    // substitution fallback was used.
    std::vector<std::string> ledger;
    // "parametric" for the exact generic-branch elimination,
    // "substitution" for the deterministic evaluation fallback.
    std::string method;
};

// Generic initial ideal for degrevlex: substitute the generic unipotent
// lower-triangular change x_k -> x_k + sum_{m<k} a_km x_m and row-reduce
// each graded slice fraction-free over the parameter ring up to the
// regularity, always taking the "pivot is nonzero" branch and recording
// the nonconstant pivots in the ledger.
GinResult generic_initial_ideal(const PolynomialIdeal& I);

// Number of degree-q members of the ideal per class, index k-1 holding
// the count of class k.
std::vector<long> beta_vector(const MonomialIdeal& J, int q);

bool beta_lex_less(const std::vector<long>& a, const std::vector<long>& b);

struct BetaMaxResult {
    bool holds = false;
    bool quasi_stable = true;  // false short-circuits before any gin work
    int failing_degree = -1;
    std::vector<long> beta_ideal, beta_gin;
};
BetaMaxResult is_beta_maximal(const PolynomialIdeal& I);

bool is_gin_position(const PolynomialIdeal& I);

// Dimension of the span of the degree-s multiples of B_q inside the
// multiplicative cones, counted by enumeration.
long pommaret_span_hilbert(const std::vector<Term>& Bq, int nvars, int q, int s);

struct AnnihilatorNumbers {
    bool quasi_stable = false;
    // alpha[i][j] = number of basis elements of class n-i and degree j+1,
    // 0 <= i < n, 0 <= j < regularity.
    std::vector<std::vector<long>> alpha;
    int regularity = 0;
    int depth = 0;
};
AnnihilatorNumbers annihilator_numbers(const PolynomialIdeal& I);
AnnihilatorNumbers monomial_annihilator_numbers(const MonomialIdeal& J);
// Annihilator numbers of the generic initial ideal.
AnnihilatorNumbers generic_annihilator_numbers(const PolynomialIdeal& I);

}  // namespace genpos
