#pragma once

// Rational operations on spliffer behaviors. Every result is again labeled by
// generators only; product and star go through a transient epsilon-augmented
// machine that is eliminated before returning.

#include "spliffer/spliffer.hpp"

namespace spliffer {

/// Disjoint union; the states of `m2` follow those of `m1`.
Spliffer union_of(const Spliffer& m1, const Spliffer& m2);

/// Behavior { t1 * t2 : t1 in |m1|, t2 in |m2| }.
Spliffer product(const Spliffer& m1, const Spliffer& m2);

/// Behavior |m|*, including the identity. State 0 of the result is a fresh
/// initial and final state.
Spliffer star(const Spliffer& m);

/// Keeps the states that are both accessible and co-accessible, renumbered in
/// their original order. When none remain the result is a one-state machine
/// with an empty behavior.
Spliffer trim(const Spliffer& m);

/// One-state machines with behavior {} and {(-, -, -)}: the neutral elements
/// of union and product.
Spliffer empty_machine(std::vector<Letter> alphabet);
Spliffer identity_machine(std::vector<Letter> alphabet);

}  // namespace spliffer
