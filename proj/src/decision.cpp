#include "spliffer/decision.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "spliffer/nfa.hpp"
#include "spliffer/rational_ops.hpp"

namespace spliffer {

std::span<const SquareTransition> SquareAutomaton::outgoing(std::size_t state) const
{
	if (state + 1 >= offsets.size())
		return {};
	return std::span<const SquareTransition>(transitions).subspan(offsets[state], offsets[state + 1] - offsets[state]);
}

std::optional<std::size_t> SquareAutomaton::find(StateId first, StateId second) const
{
	const auto it = std::find(states.begin(), states.end(), std::pair{first, second});
	if (it == states.end())
		return std::nullopt;
	return static_cast<std::size_t>(it - states.begin());
}

SquareAutomaton square(const Spliffer& m)
{
	require_valid(m);

	// Accessible part, numbered in breadth-first order.
	std::map<std::pair<StateId, StateId>, std::size_t> ids;
	std::vector<std::pair<StateId, StateId>> pairs;
	std::vector<SquareTransition> edges;
	auto intern = [&](StateId p, StateId q) {
		auto [it, inserted] = ids.try_emplace({p, q}, pairs.size());
		if (inserted)
			pairs.emplace_back(p, q);
		return it->second;
	};
	for (StateId p : m.initial())
		for (StateId q : m.initial())
			intern(p, q);
	const std::size_t initial_count = pairs.size();
	for (std::size_t id = 0; id < pairs.size(); ++id) {
		const auto [p, q] = pairs[id];
		for (const Transition& e1 : m.outgoing(p))
			for (const Transition& e2 : m.outgoing(q))
				if (e1.label.letter == e2.label.letter)
					edges.push_back({id, intern(e1.dst, e2.dst), e1.label.tape, e2.label.tape, e1.label.letter});
	}

	// Co-accessible part.
	std::vector<std::vector<std::size_t>> backward(pairs.size());
	for (const SquareTransition& t : edges)
		backward[t.dst].push_back(t.src);
	std::vector<bool> useful(pairs.size(), false);
	std::deque<std::size_t> queue;
	for (std::size_t id = 0; id < pairs.size(); ++id) {
		if (m.is_final(pairs[id].first) && m.is_final(pairs[id].second)) {
			useful[id] = true;
			queue.push_back(id);
		}
	}
	while (!queue.empty()) {
		const std::size_t id = queue.front();
		queue.pop_front();
		for (std::size_t prev : backward[id]) {
			if (!useful[prev]) {
				useful[prev] = true;
				queue.push_back(prev);
			}
		}
	}

	SquareAutomaton sq;
	sq.built_states = pairs.size();
	std::vector<std::size_t> rename(pairs.size(), 0);
	for (std::size_t id = 0; id < pairs.size(); ++id) {
		if (!useful[id])
			continue;
		rename[id] = sq.states.size();
		sq.states.push_back(pairs[id]);
		if (id < initial_count)
			sq.initial.push_back(rename[id]);
		if (m.is_final(pairs[id].first) && m.is_final(pairs[id].second))
			sq.final.push_back(rename[id]);
	}
	for (const SquareTransition& t : edges) {
		if (useful[t.src] && useful[t.dst]) {
			SquareTransition kept = t;
			kept.src = rename[t.src];
			kept.dst = rename[t.dst];
			sq.transitions.push_back(std::move(kept));
		}
	}
	// Edges were emitted in source order, so the renamed list is still sorted.
	sq.offsets.assign(sq.states.size() + 1, 0);
	for (const SquareTransition& t : sq.transitions)
		++sq.offsets[t.src + 1];
	for (std::size_t id = 0; id < sq.states.size(); ++id)
		sq.offsets[id + 1] += sq.offsets[id];
	return sq;
}

namespace {

std::vector<std::size_t> path_to(const std::vector<std::optional<std::size_t>>& parent,
				 const std::vector<SquareTransition>& transitions, std::size_t state)
{
	std::vector<std::size_t> path;
	while (parent[state]) {
		path.push_back(*parent[state]);
		state = transitions[*parent[state]].src;
	}
	std::reverse(path.begin(), path.end());
	return path;
}

// Shortest continuation from `state` to a final pair. Exists because the
// square is trim.
std::vector<std::size_t> completion(const SquareAutomaton& sq, std::size_t state)
{
	std::vector<bool> is_final(sq.states.size(), false);
	for (std::size_t f : sq.final)
		is_final[f] = true;
	std::vector<std::optional<std::size_t>> parent(sq.states.size());
	std::vector<bool> seen(sq.states.size(), false);
	std::deque<std::size_t> queue{state};
	seen[state] = true;
	while (!queue.empty()) {
		const std::size_t at = queue.front();
		queue.pop_front();
		if (is_final[at]) {
			std::vector<std::size_t> path;
			for (std::size_t cur = at; cur != state;) {
				path.push_back(*parent[cur]);
				cur = sq.transitions[*parent[cur]].src;
			}
			std::reverse(path.begin(), path.end());
			return path;
		}
		for (std::size_t k = sq.offsets[at]; k < sq.offsets[at + 1]; ++k) {
			const std::size_t next = sq.transitions[k].dst;
			if (!seen[next]) {
				seen[next] = true;
				parent[next] = k;
				queue.push_back(next);
			}
		}
	}
	throw std::logic_error("square automaton is not trim");
}

PairValue evaluate(const SquareAutomaton& sq, std::span<const std::size_t> path)
{
	PairValue v = PairValue::balanced();
	for (std::size_t k : path) {
		v = delta2(v, sq.transitions[k].first_output(), sq.transitions[k].second_output());
		if (v.left.is_zero() && v.right.is_zero())
			break;
	}
	return v;
}

NotFunctional witness_of(const SquareAutomaton& sq, std::span<const std::size_t> path)
{
	NotFunctional w;
	for (std::size_t k : path) {
		const SquareTransition& t = sq.transitions[k];
		w.input.push_back(t.letter);
		(t.first_tape == Tape::Left ? w.first.left : w.first.right).push_back(t.letter);
		(t.second_tape == Tape::Left ? w.second.left : w.second.right).push_back(t.letter);
	}
	if (w.second < w.first)
		std::swap(w.first, w.second);
	return w;
}

}  // namespace

ValuationResult valuation(const SquareAutomaton& sq)
{
	ValuationResult result;
	Valuation val;
	const std::size_t n = sq.states.size();
	std::vector<std::optional<PairValue>> values(n);
	val.parent.assign(n, std::nullopt);

	std::deque<std::size_t> queue;
	for (std::size_t i : sq.initial) {
		values[i] = PairValue::balanced();
		++result.configurations;
		queue.push_back(i);
	}
	while (!queue.empty()) {
		const std::size_t at = queue.front();
		queue.pop_front();
		for (std::size_t k = sq.offsets[at]; k < sq.offsets[at + 1]; ++k) {
			const SquareTransition& t = sq.transitions[k];
			PairValue next = delta2(*values[at], t.first_output(), t.second_output());
			if (!values[t.dst]) {
				values[t.dst] = std::move(next);
				val.parent[t.dst] = k;
				++result.configurations;
				queue.push_back(t.dst);
			} else if (*values[t.dst] != next) {
				++result.configurations;
				Conflict c;
				c.state = t.dst;
				c.stored = *values[t.dst];
				c.incoming = std::move(next);
				c.stored_path = path_to(val.parent, sq.transitions, t.dst);
				c.incoming_path = path_to(val.parent, sq.transitions, at);
				c.incoming_path.push_back(k);
				c.values = std::move(values);
				result.outcome = std::move(c);
				return result;
			}
		}
	}
	val.values.reserve(n);
	for (auto& v : values)
		val.values.push_back(v.value_or(PairValue::balanced()));
	result.outcome = std::move(val);
	return result;
}

FunctionalityVerdict is_functional(const Spliffer& m, DecisionStats* stats)
{
	const SquareAutomaton sq = square(m);
	const ValuationResult res = valuation(sq);
	if (stats) {
		stats->square_states_built = sq.built_states;
		stats->square_states = sq.states.size();
		stats->valuation_configurations = res.configurations;
	}

	if (const auto* conflict = std::get_if<Conflict>(&res.outcome)) {
		// Extend both runs by the same continuation; by semi-injectivity at
		// least one of them ends unbalanced (or at Zero).
		const auto tail = completion(sq, conflict->state);
		for (const auto* head : {&conflict->stored_path, &conflict->incoming_path}) {
			std::vector<std::size_t> path = *head;
			path.insert(path.end(), tail.begin(), tail.end());
			if (!evaluate(sq, path).is_balanced())
				return witness_of(sq, path);
		}
		throw std::logic_error("conflicting valuation without an unbalanced completion");
	}

	const auto& val = std::get<Valuation>(res.outcome);
	for (std::size_t f : sq.final)
		if (!val.values[f].is_balanced())
			return witness_of(sq, path_to(val.parent, sq.transitions, f));
	return Functional{};
}

namespace {

std::vector<Letter> joint_alphabet(const Spliffer& m1, const Spliffer& m2)
{
	std::vector<Letter> letters = m1.alphabet();
	letters.insert(letters.end(), m2.alphabet().begin(), m2.alphabet().end());
	std::sort(letters.begin(), letters.end());
	letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
	return letters;
}

EquivalenceVerdict compare_outputs(const Spliffer& m1, const Spliffer& m2, DecisionStats* stats)
{
	const auto verdict = is_functional(union_of(m1, m2), stats);
	if (functional(verdict))
		return Equivalent{};
	const auto& w = std::get<NotFunctional>(verdict);
	DifferentOutputs diff{w.input, w.first, w.second};
	const auto out1 = split(m1, w.input);
	const auto out2 = split(m2, w.input);
	if (out1.size() == 1 && out2.size() == 1) {
		diff.first = *out1.begin();
		diff.second = *out2.begin();
	}
	return diff;
}

EquivalenceVerdict domain_mismatch(const DfaComparison& cmp, const Nfa& first_domain)
{
	DifferentDomain d;
	d.witness = cmp.witness.value_or(Word{});
	d.in_first = first_domain.accepts(d.witness);
	return d;
}

}  // namespace

EquivalenceVerdict equivalent_functional(const Spliffer& m1, const Spliffer& m2, DecisionStats* stats)
{
	require_valid(m1);
	require_valid(m2);
	int index = 1;
	for (const Spliffer* m : {&m1, &m2}) {
		auto verdict = is_functional(*m);
		if (!functional(verdict))
			return InputNotFunctional{index, std::get<NotFunctional>(std::move(verdict))};
		++index;
	}

	const auto letters = joint_alphabet(m1, m2);
	const Nfa domain1 = input_projection(m1);
	const Nfa d1 = nfa_to_dfa(domain1, letters);
	const Nfa d2 = nfa_to_dfa(input_projection(m2), letters);
	if (const auto cmp = dfa_equivalent(d1, d2); !cmp)
		return domain_mismatch(cmp, domain1);

	return compare_outputs(m1, m2, stats);
}

EquivalenceVerdict equivalent_deterministic(const Spliffer& m1, const Spliffer& m2, DecisionStats* stats)
{
	require_valid(m1);
	require_valid(m2);
	if (const auto r = is_deterministic(m1); !r)
		throw PreconditionError("first machine is not deterministic: " + r.witness->detail);
	if (const auto r = is_deterministic(m2); !r)
		throw PreconditionError("second machine is not deterministic: " + r.witness->detail);

	const auto letters = joint_alphabet(m1, m2);
	const Nfa domain1 = input_projection(m1);
	const Nfa d1 = complete_dfa(domain1, letters);
	const Nfa d2 = complete_dfa(input_projection(m2), letters);
	if (const auto cmp = dfa_equivalent(d1, d2); !cmp)
		return domain_mismatch(cmp, domain1);

	return compare_outputs(m1, m2, stats);
}

}  // namespace spliffer
