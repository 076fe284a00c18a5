#pragma once

#include <vector>

#include "genpos/term.hpp"

namespace genpos {

// A monomial ideal, kept as its unique minimal generating set sorted in
// descending revlex order.
class MonomialIdeal {
   public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
    MonomialIdeal(int nvars, std::vector<Term> gens);

    int nvars() const { return nvars_; }
    const std::vector<Term>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool contains(const Term& t) const;
    bool contains_var_power(int i) const;  // some pure power of x_i lies in the ideal
    int max_gen_degree() const;            // 0 for the zero ideal

    MonomialIdeal plus(const MonomialIdeal& o) const;
    MonomialIdeal plus_term(const Term& t) const;
    MonomialIdeal plus_vars(int lo, int hi) const;  // add x_lo, ..., x_hi
    MonomialIdeal intersect(const MonomialIdeal& o) const;
    MonomialIdeal colon(const Term& t) const;
    MonomialIdeal colon_var(int i) const { return colon(Term::variable(nvars_, i)); }
    MonomialIdeal colon_ideal(const MonomialIdeal& o) const;
    MonomialIdeal saturate_var(int i) const;       // J : x_i^inf
    MonomialIdeal saturate_prefix(int m) const;    // J : <x_1..x_m>^inf
    MonomialIdeal saturate_ideal(const MonomialIdeal& o) const;

    bool includes(const MonomialIdeal& o) const;  // o ⊆ this
    bool operator==(const MonomialIdeal& o) const;

    // Krull dimension of the quotient ring modulo the ideal.
    int dimension() const;
    long graded_dimension(int d) const;                 // dim of the degree-d slice
    std::vector<Term> members_of_degree(int d) const;   // degree-d terms in the ideal

    static std::vector<Term> terms_of_degree(int nvars, int d);
    static std::vector<Term> terms_of_degree_at_most(int nvars, int d);

   private:
    int nvars_ = 0;
    std::vector<Term> gens_;
};

}  // namespace genpos
