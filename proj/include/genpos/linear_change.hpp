#pragma once

#include <vector>

#include "genpos/polynomial.hpp"

namespace genpos {

// Elementary coordinate move x_j -> x_j + a*x_i with i < j (a greater
// variable is added to a smaller one, which is the only kind of move that
// can raise degrevlex leading terms).
struct Move {
    int j = 0;
    int i = 0;
    Scalar a;
};

// An invertible linear change of coordinates.  Acting on a polynomial
// substitutes x_k -> sum_j m[k][j]*x_j, i.e. f |-> f(M*x) with rows of M
// giving the image of each variable.
class LinearChange {
   public:
    LinearChange() = default;

    static LinearChange identity(FieldSpec field, int nvars);
    static LinearChange elementary(FieldSpec field, int nvars, int j, int i, const Scalar& a);
    static LinearChange from_matrix(FieldSpec field, std::vector<std::vector<Scalar>> m);

    // compose(second, first): apply `first`, then `second`.  With the
    // substitution action this is the matrix product M_first * M_second.
    static LinearChange compose(const LinearChange& second, const LinearChange& first);

    LinearChange inverse() const;

    Polynomial apply(const Polynomial& f) const;
    std::vector<Polynomial> apply(const std::vector<Polynomial>& fs) const;

    const FieldSpec& field() const { return field_; }
    int nvars() const { return n_; }
    const std::vector<std::vector<Scalar>>& matrix() const { return m_; }
    const std::vector<Move>& moves() const { return moves_; }
    bool is_identity() const;

   private:
    FieldSpec field_;
    int n_ = 0;
    std::vector<std::vector<Scalar>> m_;
    std::vector<Move> moves_;  // chronological; empty if not built from moves
};

}  // namespace genpos
