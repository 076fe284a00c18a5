#pragma once

#include <map>
#include <optional>

#include "genpos/field.hpp"
#include "genpos/term.hpp"

namespace genpos {

// A polynomial with exact coefficients, stored sparsely with terms in
// descending degrevlex order so the leading term is the first entry.
class Polynomial {
   public:
    using TermMap = std::map<Term, Scalar, DegrevlexGreater>;

    Polynomial() = default;
    Polynomial(FieldSpec field, int nvars) : field_(field), nvars_(nvars) {}

    static Polynomial zero(FieldSpec field, int nvars) { return Polynomial(field, nvars); }
    static Polynomial monomial(FieldSpec field, const Term& t, const Scalar& c);
    static Polynomial term(FieldSpec field, const Term& t) {
        return monomial(field, t, Scalar::one(field));
    }

    const FieldSpec& field() const { return field_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int num_terms() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }

    const Term& leading_term() const;
    const Scalar& leading_coefficient() const;
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    Scalar coefficient(const Term& t) const;
    void add_monomial(const Term& t, const Scalar& c);

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_term(const Term& t) const;
    Polynomial monic() const;

    bool operator==(const Polynomial& o) const;

    std::string str(const std::vector<std::string>& vars = {}) const;

   private:
    FieldSpec field_;
    int nvars_ = 0;
    TermMap terms_;
};

}  // namespace genpos
