#pragma once

// Test-only oracles. These are deliberately naive and share no code paths with
// the library algorithms they check: merges and paths are enumerated
// exhaustively, without dynamic programming or deduplication.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spliffer/monoid.hpp"
#include "spliffer/spliffer.hpp"
#include "spliffer/text_format.hpp"

namespace spliffer::testing {

inline Spliffer fixture(const std::string& name)
{
	return load_spliffer(std::string(SPLIFFER_FIXTURES_DIR) + "/" + name);
}

inline std::string fixture_path(const std::string& name)
{
	return std::string(SPLIFFER_FIXTURES_DIR) + "/" + name;
}

/// Every merge of `l` and `r`, one per tape sequence (with repetitions).
inline std::vector<Word> all_merges(const Word& l, const Word& r)
{
	std::vector<Word> out;
	const std::size_t n = l.size() + r.size();
	for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
		if (static_cast<std::size_t>(__builtin_popcountll(mask)) != l.size())
			continue;
		Word s;
		std::size_t i = 0, j = 0;
		for (std::size_t k = 0; k < n; ++k)
			s.push_back((mask >> k) & 1 ? l[i++] : r[j++]);
		out.push_back(std::move(s));
	}
	return out;
}

inline std::vector<Word> words_up_to(const std::vector<Letter>& alphabet, std::size_t max_len)
{
	std::vector<Word> out{Word{}};
	for (std::size_t begin = 0; begin < out.size(); ++begin) {
		if (out[begin].size() == max_len)
			continue;
		for (const Letter& a : alphabet) {
			Word w = out[begin];
			w.push_back(a);
			out.push_back(std::move(w));
		}
	}
	return out;
}

/// Labels of all successful paths with at most `max_len` transitions, with
/// the number of distinct paths carrying each label.
inline std::map<UTriple, std::size_t> successful_paths(const Spliffer& m, std::size_t max_len)
{
	std::map<UTriple, std::size_t> out;
	std::function<void(StateId, UTriple&)> walk = [&](StateId q, UTriple& t) {
		if (m.is_final(q))
			++out[t];
		if (t.shuffled.size() == max_len)
			return;
		for (const Transition& e : m.transitions()) {
			if (e.src != q)
				continue;
			Word& tape = e.label.tape == Tape::Left ? t.left : t.right;
			tape.push_back(e.label.letter);
			t.shuffled.push_back(e.label.letter);
			walk(e.dst, t);
			tape.pop_back();
			t.shuffled.pop_back();
		}
	};
	for (StateId q : m.initial()) {
		UTriple t;
		walk(q, t);
	}
	return out;
}

inline std::set<UTriple> behavior_by_paths(const Spliffer& m, std::size_t max_len)
{
	std::set<UTriple> out;
	for (const auto& [t, count] : successful_paths(m, max_len))
		out.insert(t);
	return out;
}

inline UTriple multiply(const UTriple& a, const UTriple& b)
{
	return {concat(a.left, b.left), concat(a.right, b.right), concat(a.shuffled, b.shuffled)};
}

/// Outputs of one input word, grouped from an enumerated behavior.
inline std::map<Word, std::set<OutputPair>> image_by_input(const std::set<UTriple>& behavior)
{
	std::map<Word, std::set<OutputPair>> out;
	for (const UTriple& t : behavior)
		out[t.shuffled].insert({t.left, t.right});
	return out;
}

struct RandomMachineOptions {
	std::size_t min_states = 1;
	std::size_t max_states = 4;
	std::vector<Letter> alphabet = {"a", "b"};
	/// Probability of each possible (src, generator, dst) transition.
	double density = 0.2;
	double final_probability = 0.4;
	bool multiple_initial = true;
};

inline Spliffer random_spliffer(std::mt19937& rng, const RandomMachineOptions& opt)
{
	std::uniform_int_distribution<std::size_t> count(opt.min_states, opt.max_states);
	std::bernoulli_distribution edge(opt.density);
	std::bernoulli_distribution final(opt.final_probability);
	std::bernoulli_distribution extra_initial(0.25);
	const std::size_t n = count(rng);
	std::vector<Transition> transitions;
	for (StateId p = 0; p < n; ++p)
		for (const Letter& a : opt.alphabet)
			for (Tape tape : {Tape::Left, Tape::Right})
				for (StateId q = 0; q < n; ++q)
					if (edge(rng))
						transitions.push_back({p, Generator{tape, a}, q});
	std::vector<StateId> initial{0}, finals;
	for (StateId q = 0; q < n; ++q) {
		if (final(rng))
			finals.push_back(q);
		if (opt.multiple_initial && q > 0 && extra_initial(rng))
			initial.push_back(q);
	}
	return Spliffer(opt.alphabet, n, std::move(transitions), std::move(initial), std::move(finals));
}

/// One tape per state, at most one transition per state and letter.
inline Spliffer random_deterministic(std::mt19937& rng, std::size_t states, const std::vector<Letter>& alphabet,
				     double density = 0.7, double final_probability = 0.4)
{
	std::bernoulli_distribution edge(density);
	std::bernoulli_distribution left(0.5);
	std::bernoulli_distribution final(final_probability);
	std::uniform_int_distribution<StateId> target(0, states - 1);
	std::vector<Transition> transitions;
	std::vector<StateId> finals;
	for (StateId p = 0; p < states; ++p) {
		const Tape tape = left(rng) ? Tape::Left : Tape::Right;
		for (const Letter& a : alphabet)
			if (edge(rng))
				transitions.push_back({p, Generator{tape, a}, target(rng)});
		if (final(rng))
			finals.push_back(p);
	}
	return Spliffer(alphabet, states, std::move(transitions), {0}, std::move(finals));
}

/// Same machine with states renamed by a random permutation that keeps the
/// behavior.
inline Spliffer permuted(std::mt19937& rng, const Spliffer& m)
{
	std::vector<StateId> perm(m.state_count());
	for (StateId q = 0; q < perm.size(); ++q)
		perm[q] = q;
	std::shuffle(perm.begin(), perm.end(), rng);
	std::vector<Transition> transitions;
	for (const Transition& t : m.transitions())
		transitions.push_back({perm[t.src], t.label, perm[t.dst]});
	std::vector<StateId> initial, finals;
	for (StateId q : m.initial())
		initial.push_back(perm[q]);
	for (StateId q : m.final())
		finals.push_back(perm[q]);
	return Spliffer(m.alphabet(), m.state_count(), std::move(transitions), std::move(initial), std::move(finals));
}

/// Unrolls the machine once: two copies, every transition crosses to the
/// other copy. Deterministic inputs stay deterministic and the behavior is
/// unchanged.
inline Spliffer doubled(const Spliffer& m)
{
	const StateId n = m.state_count();
	std::vector<Transition> transitions;
	for (const Transition& t : m.transitions()) {
		transitions.push_back({t.src, t.label, t.dst + n});
		transitions.push_back({t.src + n, t.label, t.dst});
	}
	std::vector<StateId> finals;
	for (StateId q : m.final()) {
		finals.push_back(q);
		finals.push_back(q + n);
	}
	return Spliffer(m.alphabet(), 2 * n, std::move(transitions), m.initial(), std::move(finals));
}

}  // namespace spliffer::testing
