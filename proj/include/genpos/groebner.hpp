#pragma once

#include <compare>
#include <memory>
#include <optional>

#include "genpos/linear_change.hpp"
#include "genpos/monomial_ideal.hpp"
#include "genpos/polynomial.hpp"

namespace genpos {

// Full normal form of f modulo G.  Deterministic reduction strategy: the
// greatest (degrevlex) reducible term is rewritten first, using the
// reducer whose leading term is revlex-greatest among the divisors.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

// Buchberger with normal pair selection and both standard criteria,
// followed by minimalization and full interreduction; result is monic and
// sorted with revlex-descending leading terms.
std::vector<Polynomial> reduced_groebner_basis(const std::vector<Polynomial>& gens);

// F^△: iterated top-reduction inside the set (leading terms only).
std::vector<Polynomial> head_autoreduce(std::vector<Polynomial> F);
// F^▲: fixed point of full normal forms inside the set.
std::vector<Polynomial> complete_autoreduce(std::vector<Polynomial> F);

// The ls-tuple of a set: leading terms of F^△ sorted revlex-descending.
std::vector<Term> leading_tuple(const std::vector<Polynomial>& F);

// Tuple order used by the transformation engine: entries compared by
// revlex at the first difference; a strict prefix is smaller.
std::strong_ordering compare_ls(const std::vector<Term>& a, const std::vector<Term>& b);

MonomialIdeal leading_ideal(const std::vector<Polynomial>& F);

// A homogeneous polynomial ideal with a cached reduced Groebner basis.
class PolynomialIdeal {
   public:
    PolynomialIdeal() = default;
    PolynomialIdeal(FieldSpec field, int nvars, std::vector<Polynomial> gens)
        : field_(field), nvars_(nvars), gens_(std::move(gens)) {}

    const FieldSpec& field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const;
    bool is_homogeneous() const;

    const std::vector<Polynomial>& groebner_basis() const;
    MonomialIdeal leading_terms() const;
    bool contains(const Polynomial& f) const;

    long graded_dimension(int d) const;
    int min_generator_degree() const;  // smallest degree of a Groebner element

    // Vector-space basis of the degree-d slice I_d, in reduced row echelon
    // form with columns the degree-d terms in descending degrevlex.
    std::vector<Polynomial> degree_component_basis(int d) const;
    // I_<d>: the ideal generated by the degree-d slice.
    PolynomialIdeal degree_component_ideal(int d) const;
    // I_[d]: the ideal generated by all slices of degree at most d.
    PolynomialIdeal truncation(int d) const;

    PolynomialIdeal transformed(const LinearChange& psi) const;

   private:
    FieldSpec field_;
    int nvars_ = 0;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<const std::vector<Polynomial>> gb_;
};

// Reduced row echelon form of a list of homogeneous polynomials of equal
// degree, viewed as vectors over the degree-d terms (descending degrevlex).
std::vector<Polynomial> row_reduce(std::vector<Polynomial> rows);

}  // namespace genpos
