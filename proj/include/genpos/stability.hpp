#pragma once

#include <optional>

#include "genpos/pommaret.hpp"

namespace genpos {

enum class BaseKind { QuasiStable, Stable, StronglyStable };
enum class ScopeKind { Full, Ell, WeakEll };

// One of the combinatorial stability variants, checked on the minimal
// generators of a monomial ideal.  ell is only read for the Ell/WeakEll
// scopes; p_variant restricts to p-admissible elementary moves and is only
// meaningful over GF(p) with the Stable/StronglyStable bases.
struct PositionKind {
    BaseKind base = BaseKind::QuasiStable;
    ScopeKind scope = ScopeKind::Full;
    int ell = 0;
    bool p_variant = false;
};

// A violated membership: the elementary move replacing x_j^s by x_i^s in
// `generator` leaves the ideal (for the quasi-stable family s is the full
// exponent of x_j and the replacement power is the maximal generator
// degree q).  `witness` is the monomial that fails to lie in the ideal.
struct Obstruction {
    Term generator;
    int j = 0;
    int i = 0;
    int s = 0;
    Term witness;
};

struct CheckResult {
    bool holds = true;
    std::optional<Obstruction> obstruction;
};

// digit-wise comparison of base-p expansions; true iff binom(m, s) is
// nonzero modulo p (Lucas).
bool p_admissible(int s, int m, std::int64_t p);

std::vector<Obstruction> obstructions(const MonomialIdeal& J, PositionKind kind,
                                      FieldSpec field);
CheckResult check_position(const MonomialIdeal& J, PositionKind kind, FieldSpec field);

// Deterministic quasi-stability test: find the largest saturated variable
// range, then check the generators of high class against it.
struct DqsResult {
    bool holds = true;
    int ell = 0;
    std::optional<Obstruction> obstruction;
};
DqsResult dqs_test(const MonomialIdeal& J);

// Noether position of the quotient modulo the ideal with leading ideal J:
// pure powers of x_1..x_{n-D} lie in J, D the dimension.
bool is_noether_position(const MonomialIdeal& J);

// Borel-fixedness of a monomial ideal: strongly stable in characteristic
// zero, strongly p-stable over GF(p).  ell < 0 means the full variant.
bool is_borel_fixed(const MonomialIdeal& J, FieldSpec field, int ell = -1);

struct ComponentwiseResult {
    bool holds = true;
    int failing_degree = -1;
};
// Direct test: the ordinary position for lt I first, then every component
// ideal I_<d> up to the regularity.
ComponentwiseResult componentwise_check_direct(const PolynomialIdeal& I, BaseKind base);

// Sufficient criterion via involutive standard representations: every
// representation starting inside the degree-d cohort of the Pommaret basis
// must stay inside it.
struct CriterionFailure {
    int degree = 0;
    int alpha = 0;  // index into basis
    int k = 0;      // non-multiplicative variable of the failing representation
};
struct CriterionResult {
    bool applicable = false;  // false when the ideal is not quasi-stable
    bool holds = false;
    std::optional<CriterionFailure> failure;
    std::vector<Polynomial> basis;
};
CriterionResult componentwise_criterion(const PolynomialIdeal& I);

}  // namespace genpos
