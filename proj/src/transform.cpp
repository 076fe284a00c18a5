#include "genpos/transform.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace genpos {

std::optional<std::pair<int, int>> find_obstruction_move(const MonomialIdeal& J,
                                                         PositionKind kind, FieldSpec field) {
    auto r = check_position(J, kind, field);
    if (r.holds) return std::nullopt;
    // For the quasi-stable family the obstruction's moved index is already
    // the generator class; for strongly stable it is the divisor index.
    return std::pair(r.obstruction->j, r.obstruction->i);
}

namespace {

// A chosen move together with the progress measure used to accept it.  The
// default measure (empty function) is the ls tuple of the full reduced
// Groebner basis; componentwise transforms instead measure the failing
// degree component, whose leading ideal the move is meant to change.
struct MoveChoice {
    int j = 0;
    int i = 0;
    std::function<std::vector<Term>(const PolynomialIdeal&)> measure;
};

using MoveFinder = std::function<std::optional<MoveChoice>(const PolynomialIdeal&)>;

TransformResult drive(const PolynomialIdeal& I, const MoveFinder& next_move,
                      const TransformOptions& opt) {
    TransformResult res;
    FieldSpec field = I.field();
    int n = I.nvars();
    res.change = LinearChange::identity(field, n);
    PolynomialIdeal cur(field, n, I.groebner_basis());
    res.ls_trace.push_back(leading_tuple(cur.generators()));

    std::mt19937 rng(opt.seed);
    for (res.outer_iterations = 0; res.outer_iterations < opt.max_outer;
         ++res.outer_iterations) {
        auto mv = next_move(cur);
        if (!mv) {
            res.success = true;
            res.transformed = cur;
            return res;
        }
        auto [j, i, measure] = *mv;
        // cand is always an already reduced Groebner basis of the candidate
        auto measure_of = [&](const std::vector<Polynomial>& cand) {
            return measure ? measure(PolynomialIdeal(field, n, cand)) : leading_tuple(cand);
        };
        std::vector<Term> ls_old = measure_of(cur.generators());

        if (field.rationals()) {
            // Re-apply the unit move to the already transformed basis; the
            // cumulative coefficient walks through 1, 2, 3, ...
            std::vector<Polynomial> basis = cur.generators();
            mpz_class a_cum = 0;
            bool accepted = false;
            for (int inner = 0; inner < opt.max_inner; ++inner) {
                std::int64_t step =
                    opt.random_a ? std::uniform_int_distribution<int>(1, 5)(rng) : 1;
                LinearChange psi =
                    LinearChange::elementary(field, n, j, i, Scalar::from_int(field, step));
                basis = reduced_groebner_basis(psi.apply(basis));
                a_cum += step;
                if (compare_ls(ls_old, measure_of(basis)) == std::strong_ordering::less) {
                    accepted = true;
                    break;
                }
            }
            if (!accepted) {
                res.error = "inner iteration cap exceeded";
                res.transformed = cur;
                return res;
            }
            Scalar a = Scalar::from_mpz(field, a_cum);
            res.moves.push_back({j, i, a});
            res.change = LinearChange::compose(LinearChange::elementary(field, n, j, i, a),
                                               res.change);
            cur = PolynomialIdeal(field, n, std::move(basis));
        } else {
            // Retry on the original basis with each nonzero field element.
            std::vector<std::int64_t> schedule;
            for (std::int64_t a = 1; a < field.p; ++a) schedule.push_back(a);
            if (opt.random_a) std::shuffle(schedule.begin(), schedule.end(), rng);
            bool accepted = false;
            for (std::int64_t a : schedule) {
                LinearChange psi =
                    LinearChange::elementary(field, n, j, i, Scalar::from_int(field, a));
                std::vector<Polynomial> cand =
                    reduced_groebner_basis(psi.apply(cur.generators()));
                if (compare_ls(ls_old, measure_of(cand)) == std::strong_ordering::less) {
                    res.moves.push_back({j, i, Scalar::from_int(field, a)});
                    res.change = LinearChange::compose(psi, res.change);
                    cur = PolynomialIdeal(field, n, std::move(cand));
                    accepted = true;
                    break;
                }
            }
            if (!accepted) {
                res.error = "field too small";
                res.transformed = cur;
                return res;
            }
        }
        res.ls_trace.push_back(leading_tuple(cur.generators()));
    }
    res.error = "outer iteration cap exceeded";
    res.transformed = cur;
    return res;
}

}  // namespace

TransformResult transform_to_position(const PolynomialIdeal& I, PositionKind kind,
                                      const TransformOptions& opt) {
    return drive(I,
                 [&](const PolynomialIdeal& cur) -> std::optional<MoveChoice> {
                     auto mv = find_obstruction_move(cur.leading_terms(), kind, cur.field());
                     if (!mv) return std::nullopt;
                     return MoveChoice{mv->first, mv->second, {}};
                 },
                 opt);
}

TransformResult transform_to_noether(const PolynomialIdeal& I, const TransformOptions& opt) {
    int d = I.leading_terms().dimension();  // invariant under linear changes
    PositionKind kind;
    kind.base = BaseKind::QuasiStable;
    kind.scope = ScopeKind::WeakEll;
    kind.ell = d;
    return transform_to_position(I, kind, opt);
}

TransformResult transform_componentwise(const PolynomialIdeal& I, BaseKind base,
                                        const TransformOptions& opt) {
    PositionKind ordinary;
    ordinary.base = base;
    TransformResult stage1 = transform_to_position(I, ordinary, opt);
    if (!stage1.success) return stage1;

    MoveFinder finder = [&](const PolynomialIdeal& cur) -> std::optional<MoveChoice> {
        auto mv = find_obstruction_move(cur.leading_terms(), ordinary, cur.field());
        if (mv) return MoveChoice{mv->first, mv->second, {}};
        // The representation criterion is a cheap sufficient test; when it
        // holds we are done without examining the components one by one.
        if (base == BaseKind::QuasiStable) {
            CriterionResult crit = componentwise_criterion(cur);
            if (crit.applicable && crit.holds) return std::nullopt;
        }
        // The direct component-by-component test decides termination.
        ComponentwiseResult direct = componentwise_check_direct(cur, base);
        if (direct.holds) return std::nullopt;
        // Move against the combinatorial obstruction of the first failing
        // component.  A move that fixes this component may leave the leading
        // ideal of the full ideal unchanged, so progress is measured on the
        // component itself.
        int d = direct.failing_degree;
        PolynomialIdeal comp = cur.degree_component_ideal(d);
        auto cmv = find_obstruction_move(comp.leading_terms(), ordinary, cur.field());
        if (!cmv) return std::nullopt;  // unreachable: the component just failed
        auto component_ls = [d](const PolynomialIdeal& P) {
            PolynomialIdeal c = P.degree_component_ideal(d);
            return leading_tuple(c.groebner_basis());
        };
        return MoveChoice{cmv->first, cmv->second, component_ls};
    };

    TransformResult stage2 = drive(stage1.transformed, finder, opt);
    // Stitch the two stages together for the reported change and trace.
    stage2.change = LinearChange::compose(stage2.change, stage1.change);
    std::vector<Move> moves = stage1.moves;
    moves.insert(moves.end(), stage2.moves.begin(), stage2.moves.end());
    stage2.moves = std::move(moves);
    std::vector<std::vector<Term>> trace = stage1.ls_trace;
    trace.insert(trace.end(), stage2.ls_trace.begin() + 1, stage2.ls_trace.end());
    stage2.ls_trace = std::move(trace);
    stage2.outer_iterations += stage1.outer_iterations;
    return stage2;
}

}  // namespace genpos
