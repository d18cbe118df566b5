#pragma once

// Classical automata over A*, used for the domain (input language) of splitters.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "spliffer/monoid.hpp"
#include "spliffer/spliffer.hpp"

namespace spliffer {

struct NfaTransition {
	StateId src = 0;
	Letter letter;
	StateId dst = 0;

	friend bool operator==(const NfaTransition&, const NfaTransition&) = default;
	friend auto operator<=>(const NfaTransition&, const NfaTransition&) = default;
};

class Nfa {
public:
	Nfa() = default;
	Nfa(std::vector<Letter> alphabet, std::size_t state_count, std::vector<NfaTransition> transitions,
	    std::vector<StateId> initial, std::vector<StateId> final);

	const std::vector<Letter>& alphabet() const { return alphabet_; }
	std::size_t state_count() const { return state_count_; }
	const std::vector<NfaTransition>& transitions() const { return transitions_; }
	const std::vector<StateId>& initial() const { return initial_; }
	const std::vector<StateId>& final() const { return final_; }

	bool is_final(StateId q) const;
	std::span<const NfaTransition> outgoing(StateId q) const;

	/// At most one initial state and at most one transition per state and letter.
	bool is_deterministic() const;
	/// Deterministic, exactly one initial state, and a transition for every
	/// state and alphabet letter.
	bool is_complete_dfa() const;

	bool accepts(const Word& w) const;

	/// The accepted words of length <= max_len.
	std::set<Word> language(std::size_t max_len) const;

	friend bool operator==(const Nfa& a, const Nfa& b)
	{
		return a.alphabet_ == b.alphabet_ && a.state_count_ == b.state_count_ &&
		       a.transitions_ == b.transitions_ && a.initial_ == b.initial_ && a.final_ == b.final_;
	}

private:
	std::vector<Letter> alphabet_;
	std::size_t state_count_ = 0;
	std::vector<NfaTransition> transitions_;
	std::vector<StateId> initial_;
	std::vector<StateId> final_;
	std::vector<std::size_t> offsets_;
	std::vector<bool> final_mask_;
};

/// Subset construction over `alphabet` (defaults to the automaton's own).
/// The result is a complete DFA; the empty subset becomes the sink.
Nfa nfa_to_dfa(const Nfa& n, std::optional<std::vector<Letter>> alphabet = std::nullopt);

/// Extends a deterministic automaton with a sink so that it is complete over
/// `alphabet`, which must contain the automaton's own alphabet.
Nfa complete_dfa(const Nfa& d, const std::vector<Letter>& alphabet);

struct DfaComparison {
	bool equivalent = true;
	/// Shortest word accepted by exactly one of the two automata.
	std::optional<Word> witness;

	explicit operator bool() const { return equivalent; }
};

/// Language equality of two complete DFAs over the same alphabet.
DfaComparison dfa_equivalent(const Nfa& d1, const Nfa& d2);

}  // namespace spliffer
