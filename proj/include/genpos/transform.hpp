#pragma once

#include <string>

#include "genpos/stability.hpp"

namespace genpos {

struct TransformOptions {
    int max_outer = 500;
    int max_inner = 200;
    bool random_a = false;  // draw move coefficients from a seeded RNG instead
    unsigned seed = 1;
};

struct TransformResult {
    bool success = false;
    std::string error;  // "field too small", iteration cap messages, ...
    LinearChange change;
    std::vector<Move> moves;
    PolynomialIdeal transformed;
    std::vector<std::vector<Term>> ls_trace;  // ls-tuple after each accepted step
    int outer_iterations = 0;
};

// The elementary move (j, i) suggested by the selected obstruction: for
// the quasi-stable and stable families the moved variable is the class of
// the offending generator, for the strongly stable family it is the
// divisor index of the obstruction; i is the replacement index.
std::optional<std::pair<int, int>> find_obstruction_move(const MonomialIdeal& J,
                                                         PositionKind kind, FieldSpec field);

// Drive the ideal into the requested position by elementary moves.  In
// characteristic zero a rejected unit move is re-applied to the already
// transformed basis (the cumulative coefficient walks 1, 2, 3, ...); over
// GF(p) each retry restarts from the pre-move basis with the next field
// element, failing with "field too small" when they are exhausted.
TransformResult transform_to_position(const PolynomialIdeal& I, PositionKind kind,
                                      const TransformOptions& opt = {});

// Noether position: weakly D-quasi-stable with D the dimension.
TransformResult transform_to_noether(const PolynomialIdeal& I,
                                     const TransformOptions& opt = {});

// Two stages: ordinary position first, then the representation criterion
// drives further moves until every component ideal is in position.
TransformResult transform_componentwise(const PolynomialIdeal& I, BaseKind base,
                                        const TransformOptions& opt = {});

}  // namespace genpos
