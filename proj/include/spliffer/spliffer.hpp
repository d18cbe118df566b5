#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spliffer/monoid.hpp"

namespace spliffer {

using StateId = std::size_t;

struct Transition {
	StateId src = 0;
	Generator label;
	StateId dst = 0;

	friend bool operator==(const Transition&, const Transition&) = default;
};

/// Canonical order: source, letter, tape, destination.
bool operator<(const Transition& a, const Transition& b);

/// Raised when an operation receives a value outside its precondition.
class PreconditionError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Finite automaton whose transitions are labeled by generators of the
/// Shuffling Monoid. Read as a splitter the third coordinate is the input and
/// the first two are output tapes.
///
/// The constructor normalizes the alphabet, transitions and the initial/final
/// sets into sorted sets; it does not check ranges, use validate() for that.
class Spliffer {
public:
	Spliffer() = default;
	Spliffer(std::vector<Letter> alphabet, std::size_t state_count, std::vector<Transition> transitions,
		 std::vector<StateId> initial, std::vector<StateId> final);

	const std::vector<Letter>& alphabet() const { return alphabet_; }
	std::size_t state_count() const { return state_count_; }
	const std::vector<Transition>& transitions() const { return transitions_; }
	const std::vector<StateId>& initial() const { return initial_; }
	const std::vector<StateId>& final() const { return final_; }

	bool is_initial(StateId q) const;
	bool is_final(StateId q) const;

	/// Transitions leaving `q`, in canonical order.
	std::span<const Transition> outgoing(StateId q) const;

	friend bool operator==(const Spliffer& a, const Spliffer& b)
	{
		return a.alphabet_ == b.alphabet_ && a.state_count_ == b.state_count_ &&
		       a.transitions_ == b.transitions_ && a.initial_ == b.initial_ && a.final_ == b.final_;
	}

private:
	std::vector<Letter> alphabet_;
	std::size_t state_count_ = 0;
	std::vector<Transition> transitions_;
	std::vector<StateId> initial_;
	std::vector<StateId> final_;
	std::vector<std::size_t> offsets_;
	std::vector<bool> initial_mask_;
	std::vector<bool> final_mask_;
};

struct Violation {
	enum class Kind { NoStates, NoInitial, OutOfRange, UnknownLetter };
	Kind kind;
	std::string detail;
};

const char* kind_name(Violation::Kind kind);

std::vector<Violation> validate(const Spliffer& m);

/// Throws PreconditionError listing the first violation, if any.
void require_valid(const Spliffer& m);

/// Membership of `t` in the behavior of `m`. Throws PreconditionError when `t`
/// is not an element of U.
bool accepts(const Spliffer& m, const UTriple& t);

/// Number of distinct successful runs labeled `t`.
std::uint64_t count_accepting_runs(const Spliffer& m, const UTriple& t);

/// All output pairs the splitter produces on input `s`, sorted.
std::set<OutputPair> split(const Spliffer& m, const Word& s);

/// Every element of the behavior whose shuffled word has length <= max_len.
std::set<UTriple> enumerate_behavior(const Spliffer& m, std::size_t max_len);

struct DeterminismViolation {
	enum class Kind { InitialCount, MixedTapes, RepeatedLetter };
	Kind kind;
	std::optional<StateId> state;
	std::string detail;
};

struct DeterminismReport {
	bool deterministic = true;
	std::optional<DeterminismViolation> witness;

	explicit operator bool() const { return deterministic; }
};

DeterminismReport is_deterministic(const Spliffer& m);

struct OutputTransition {
	StateId src = 0;
	Tape tape = Tape::Left;
	Letter letter;
	StateId dst = 0;

	OutputPair label() const { return output_of(tape, letter); }

	friend bool operator==(const OutputTransition&, const OutputTransition&) = default;
};

/// The splitter with its input tape erased: a two-tape transducer whose labels
/// are (a, -) or (-, a).
struct OutputTransducer {
	std::vector<Letter> alphabet;
	std::size_t state_count = 0;
	std::vector<OutputTransition> transitions;
	std::vector<StateId> initial;
	std::vector<StateId> final;

	/// Output pairs of successful runs of at most `max_steps` transitions.
	std::set<OutputPair> relation(std::size_t max_steps) const;
};

class Nfa;

Nfa input_projection(const Spliffer& m);
OutputTransducer output_projection(const Spliffer& m);

/// Groups enumerate_behavior(m, max_len) by input word.
bool is_functional_bruteforce(const Spliffer& m, std::size_t max_len);
/// Groups enumerate_behavior(m, max_len) by output pair.
bool is_injective_bruteforce(const Spliffer& m, std::size_t max_len);

}  // namespace spliffer
