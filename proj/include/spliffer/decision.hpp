#pragma once

// Functionality and equivalence of splitters.
//
// Functionality runs two copies of the splitter in lockstep on the same input
// (the square automaton) and values every reachable state pair with the
// bidimensional lead-or-delay of the two runs' outputs. The splitter is
// functional iff every pair receives a single value and every final pair is
// balanced. Equivalence of functional splitters then reduces to equality of
// domains plus functionality of their union.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "spliffer/lead_or_delay.hpp"
#include "spliffer/spliffer.hpp"

namespace spliffer {

struct SquareTransition {
	std::size_t src = 0;
	std::size_t dst = 0;
	Tape first_tape = Tape::Left;
	Tape second_tape = Tape::Left;
	Letter letter;

	OutputPair first_output() const { return output_of(first_tape, letter); }
	OutputPair second_output() const { return output_of(second_tape, letter); }
};

/// Trim part of the product of a splitter with itself, synchronized on the
/// input letter. State ids index `states`.
struct SquareAutomaton {
	std::vector<std::pair<StateId, StateId>> states;
	/// Sorted by source.
	std::vector<SquareTransition> transitions;
	std::vector<std::size_t> initial;
	std::vector<std::size_t> final;
	/// Accessible pairs built before trimming.
	std::size_t built_states = 0;

	std::span<const SquareTransition> outgoing(std::size_t state) const;
	std::optional<std::size_t> find(StateId first, StateId second) const;

	std::vector<std::size_t> offsets;
};

SquareAutomaton square(const Spliffer& m);

struct Valuation {
	std::vector<PairValue> values;
	/// Transition through which each state was first reached; empty for initial pairs.
	std::vector<std::optional<std::size_t>> parent;
};

struct Conflict {
	std::size_t state = 0;
	PairValue stored;
	PairValue incoming;
	/// Transition indices from an initial pair to `state`.
	std::vector<std::size_t> stored_path;
	std::vector<std::size_t> incoming_path;
	/// Values assigned before the conflict was found.
	std::vector<std::optional<PairValue>> values;
};

struct ValuationResult {
	std::variant<Valuation, Conflict> outcome;
	/// (state, value) configurations created; at most |states| + 1.
	std::size_t configurations = 0;

	bool is_valuation() const { return std::holds_alternative<Valuation>(outcome); }
};

/// Breadth-first propagation of delta2 from the balanced value at every
/// initial pair, stopping at the first pair that receives a second value.
ValuationResult valuation(const SquareAutomaton& sq);

struct DecisionStats {
	std::size_t square_states_built = 0;
	std::size_t square_states = 0;
	std::size_t valuation_configurations = 0;
};

struct Functional {};

/// One input word and two distinct outputs the splitter produces on it, sorted.
struct NotFunctional {
	Word input;
	OutputPair first;
	OutputPair second;
};

using FunctionalityVerdict = std::variant<Functional, NotFunctional>;

FunctionalityVerdict is_functional(const Spliffer& m, DecisionStats* stats = nullptr);

inline bool functional(const FunctionalityVerdict& v)
{
	return std::holds_alternative<Functional>(v);
}

struct Equivalent {};

struct DifferentDomain {
	/// Shortest input in exactly one of the two domains.
	Word witness;
	bool in_first = false;
};

struct DifferentOutputs {
	Word input;
	/// Output of the first machine on `input`.
	OutputPair first;
	/// Output of the second machine on `input`.
	OutputPair second;
};

struct InputNotFunctional {
	/// 1 or 2.
	int machine = 1;
	NotFunctional witness;
};

using EquivalenceVerdict = std::variant<Equivalent, DifferentDomain, DifferentOutputs, InputNotFunctional>;

inline bool equivalent(const EquivalenceVerdict& v)
{
	return std::holds_alternative<Equivalent>(v);
}

/// General pipeline: functionality of both inputs, domain equality through
/// subset construction (worst-case exponential), then functionality of the
/// union.
EquivalenceVerdict equivalent_functional(const Spliffer& m1, const Spliffer& m2, DecisionStats* stats = nullptr);

/// Quadratic pipeline for deterministic splitters: the input automata are
/// already DFAs and functionality of the inputs is not re-checked. Throws
/// PreconditionError when either machine is not deterministic.
EquivalenceVerdict equivalent_deterministic(const Spliffer& m1, const Spliffer& m2,
					    DecisionStats* stats = nullptr);

}  // namespace spliffer
