#include "spliffer/rational_ops.hpp"

#include <algorithm>
#include <deque>

namespace spliffer {

namespace {

std::vector<Letter> merged_alphabet(const Spliffer& m1, const Spliffer& m2)
{
	std::vector<Letter> letters = m1.alphabet();
	letters.insert(letters.end(), m2.alphabet().begin(), m2.alphabet().end());
	return letters;
}

/// A spliffer with additional unlabeled edges, used while building products
/// and stars.
struct EpsilonMachine {
	std::vector<Letter> alphabet;
	std::size_t state_count = 0;
	std::vector<Transition> transitions;
	std::vector<std::pair<StateId, StateId>> epsilon;
	std::vector<StateId> initial;
	std::vector<StateId> final;

	StateId add_copy(const Spliffer& m)
	{
		const StateId offset = state_count;
		for (const Transition& t : m.transitions())
			transitions.push_back({t.src + offset, t.label, t.dst + offset});
		state_count += m.state_count();
		return offset;
	}

	// Each state inherits the labeled edges and finality of everything in its
	// epsilon closure, which is the fixpoint of copying v's edges onto u for
	// every epsilon edge u -> v.
	Spliffer eliminate() &&
	{
		std::vector<std::vector<StateId>> eps_out(state_count);
		for (const auto& [u, v] : epsilon)
			eps_out[u].push_back(v);
		std::vector<std::vector<Transition>> out(state_count);
		for (const Transition& t : transitions)
			out[t.src].push_back(t);
		std::vector<bool> is_final(state_count, false);
		for (StateId q : final)
			is_final[q] = true;

		std::vector<Transition> result;
		std::vector<StateId> result_final;
		for (StateId u = 0; u < state_count; ++u) {
			std::vector<bool> seen(state_count, false);
			std::vector<StateId> stack{u};
			seen[u] = true;
			bool final_here = false;
			while (!stack.empty()) {
				const StateId v = stack.back();
				stack.pop_back();
				final_here = final_here || is_final[v];
				for (const Transition& t : out[v])
					result.push_back({u, t.label, t.dst});
				for (StateId w : eps_out[v]) {
					if (!seen[w]) {
						seen[w] = true;
						stack.push_back(w);
					}
				}
			}
			if (final_here)
				result_final.push_back(u);
		}
		return Spliffer(std::move(alphabet), state_count, std::move(result), std::move(initial),
				std::move(result_final));
	}
};

}  // namespace

Spliffer union_of(const Spliffer& m1, const Spliffer& m2)
{
	const StateId offset = m1.state_count();
	std::vector<Transition> transitions = m1.transitions();
	for (const Transition& t : m2.transitions())
		transitions.push_back({t.src + offset, t.label, t.dst + offset});
	std::vector<StateId> initial = m1.initial();
	for (StateId q : m2.initial())
		initial.push_back(q + offset);
	std::vector<StateId> final = m1.final();
	for (StateId q : m2.final())
		final.push_back(q + offset);
	return Spliffer(merged_alphabet(m1, m2), m1.state_count() + m2.state_count(), std::move(transitions),
			std::move(initial), std::move(final));
}

Spliffer product(const Spliffer& m1, const Spliffer& m2)
{
	EpsilonMachine e;
	e.alphabet = merged_alphabet(m1, m2);
	const StateId first = e.add_copy(m1);
	const StateId second = e.add_copy(m2);
	for (StateId f : m1.final())
		for (StateId i : m2.initial())
			e.epsilon.emplace_back(f + first, i + second);
	for (StateId i : m1.initial())
		e.initial.push_back(i + first);
	for (StateId f : m2.final())
		e.final.push_back(f + second);
	return std::move(e).eliminate();
}

Spliffer star(const Spliffer& m)
{
	EpsilonMachine e;
	e.alphabet = m.alphabet();
	e.state_count = 1;
	const StateId body = e.add_copy(m);
	for (StateId i : m.initial())
		e.epsilon.emplace_back(0, i + body);
	for (StateId f : m.final())
		e.epsilon.emplace_back(f + body, 0);
	e.initial = {0};
	e.final = {0};
	return std::move(e).eliminate();
}

Spliffer trim(const Spliffer& m)
{
	const std::size_t n = m.state_count();
	std::vector<std::vector<StateId>> forward(n), backward(n);
	for (const Transition& t : m.transitions()) {
		forward[t.src].push_back(t.dst);
		backward[t.dst].push_back(t.src);
	}
	auto search = [n](const std::vector<StateId>& roots, const std::vector<std::vector<StateId>>& edges) {
		std::vector<bool> seen(n, false);
		std::deque<StateId> queue;
		for (StateId q : roots) {
			if (!seen[q]) {
				seen[q] = true;
				queue.push_back(q);
			}
		}
		while (!queue.empty()) {
			const StateId q = queue.front();
			queue.pop_front();
			for (StateId r : edges[q]) {
				if (!seen[r]) {
					seen[r] = true;
					queue.push_back(r);
				}
			}
		}
		return seen;
	};
	const auto accessible = search(m.initial(), forward);
	const auto coaccessible = search(m.final(), backward);

	constexpr StateId removed = static_cast<StateId>(-1);
	std::vector<StateId> rename(n, removed);
	std::size_t kept = 0;
	for (StateId q = 0; q < n; ++q)
		if (accessible[q] && coaccessible[q])
			rename[q] = kept++;
	if (kept == 0)
		return empty_machine(m.alphabet());

	std::vector<Transition> transitions;
	for (const Transition& t : m.transitions())
		if (rename[t.src] != removed && rename[t.dst] != removed)
			transitions.push_back({rename[t.src], t.label, rename[t.dst]});
	std::vector<StateId> initial, final;
	for (StateId q : m.initial())
		if (rename[q] != removed)
			initial.push_back(rename[q]);
	for (StateId q : m.final())
		if (rename[q] != removed)
			final.push_back(rename[q]);
	return Spliffer(m.alphabet(), kept, std::move(transitions), std::move(initial), std::move(final));
}

Spliffer empty_machine(std::vector<Letter> alphabet)
{
	return Spliffer(std::move(alphabet), 1, {}, {0}, {});
}

Spliffer identity_machine(std::vector<Letter> alphabet)
{
	return Spliffer(std::move(alphabet), 1, {}, {0}, {0});
}

}  // namespace spliffer
