#include "spliffer/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace spliffer {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v)
{
	std::sort(v.begin(), v.end());
	v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Single successor of `q` on `a` in a deterministic automaton.
std::optional<StateId> step(const Nfa& d, StateId q, const Letter& a)
{
	for (const NfaTransition& t : d.outgoing(q))
		if (t.letter == a)
			return t.dst;
	return std::nullopt;
}

class UnionFind {
public:
	explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

	std::size_t find(std::size_t x)
	{
		while (parent_[x] != x) {
			parent_[x] = parent_[parent_[x]];
			x = parent_[x];
		}
		return x;
	}

	/// False when already merged.
	bool unite(std::size_t a, std::size_t b)
	{
		a = find(a);
		b = find(b);
		if (a == b)
			return false;
		parent_[b] = a;
		return true;
	}

private:
	std::vector<std::size_t> parent_;
};

}  // namespace

Nfa::Nfa(std::vector<Letter> alphabet, std::size_t state_count, std::vector<NfaTransition> transitions,
	 std::vector<StateId> initial, std::vector<StateId> final)
	: alphabet_(std::move(alphabet)), state_count_(state_count), transitions_(std::move(transitions)),
	  initial_(std::move(initial)), final_(std::move(final))
{
	sort_unique(alphabet_);
	sort_unique(transitions_);
	sort_unique(initial_);
	sort_unique(final_);

	offsets_.assign(state_count_ + 1, 0);
	for (const NfaTransition& t : transitions_)
		if (t.src < state_count_)
			++offsets_[t.src + 1];
	for (std::size_t q = 0; q < state_count_; ++q)
		offsets_[q + 1] += offsets_[q];

	final_mask_.assign(state_count_, false);
	for (StateId q : final_)
		if (q < state_count_)
			final_mask_[q] = true;
}

bool Nfa::is_final(StateId q) const
{
	return q < state_count_ && final_mask_[q];
}

std::span<const NfaTransition> Nfa::outgoing(StateId q) const
{
	if (q >= state_count_)
		return {};
	return std::span<const NfaTransition>(transitions_).subspan(offsets_[q], offsets_[q + 1] - offsets_[q]);
}

bool Nfa::is_deterministic() const
{
	if (initial_.size() > 1)
		return false;
	for (std::size_t k = 1; k < transitions_.size(); ++k) {
		const auto& a = transitions_[k - 1];
		const auto& b = transitions_[k];
		if (a.src == b.src && a.letter == b.letter)
			return false;
	}
	return true;
}

bool Nfa::is_complete_dfa() const
{
	if (initial_.size() != 1 || !is_deterministic())
		return false;
	for (StateId q = 0; q < state_count_; ++q) {
		const auto out = outgoing(q);
		if (out.size() != alphabet_.size())
			return false;
		for (std::size_t k = 0; k < out.size(); ++k)
			if (out[k].letter != alphabet_[k])
				return false;
	}
	return true;
}

bool Nfa::accepts(const Word& w) const
{
	std::vector<StateId> current = initial_;
	for (const Letter& a : w) {
		std::vector<StateId> next;
		for (StateId q : current)
			for (const NfaTransition& t : outgoing(q))
				if (t.letter == a)
					next.push_back(t.dst);
		sort_unique(next);
		current = std::move(next);
	}
	return std::any_of(current.begin(), current.end(), [this](StateId q) { return is_final(q); });
}

std::set<Word> Nfa::language(std::size_t max_len) const
{
	std::set<Word> result;
	std::set<std::pair<StateId, Word>> layer;
	for (StateId q : initial_)
		layer.insert({q, Word{}});
	for (std::size_t depth = 0;; ++depth) {
		for (const auto& [q, w] : layer)
			if (is_final(q))
				result.insert(w);
		if (depth == max_len || layer.empty())
			break;
		std::set<std::pair<StateId, Word>> next;
		for (const auto& [q, w] : layer) {
			for (const NfaTransition& t : outgoing(q)) {
				Word extended = w;
				extended.push_back(t.letter);
				next.insert({t.dst, std::move(extended)});
			}
		}
		layer = std::move(next);
	}
	return result;
}

Nfa nfa_to_dfa(const Nfa& n, std::optional<std::vector<Letter>> alphabet)
{
	std::vector<Letter> letters = alphabet ? std::move(*alphabet) : n.alphabet();
	sort_unique(letters);

	using Subset = std::vector<StateId>;
	std::map<Subset, StateId> ids;
	std::vector<Subset> subsets;
	std::vector<NfaTransition> transitions;
	std::vector<StateId> final;

	auto intern = [&](Subset s) {
		auto [it, inserted] = ids.try_emplace(s, subsets.size());
		if (inserted)
			subsets.push_back(std::move(s));
		return it->second;
	};

	Subset start = n.initial();
	start.erase(std::remove_if(start.begin(), start.end(), [&](StateId q) { return q >= n.state_count(); }),
		    start.end());
	intern(std::move(start));
	for (StateId id = 0; id < subsets.size(); ++id) {
		if (std::any_of(subsets[id].begin(), subsets[id].end(), [&](StateId q) { return n.is_final(q); }))
			final.push_back(id);
		for (const Letter& a : letters) {
			Subset next;
			for (StateId q : subsets[id])
				for (const NfaTransition& t : n.outgoing(q))
					if (t.letter == a)
						next.push_back(t.dst);
			sort_unique(next);
			transitions.push_back({id, a, intern(std::move(next))});
		}
	}
	return Nfa(std::move(letters), subsets.size(), std::move(transitions), {0}, std::move(final));
}

Nfa complete_dfa(const Nfa& d, const std::vector<Letter>& alphabet)
{
	std::vector<Letter> letters = alphabet;
	sort_unique(letters);
	const StateId sink = d.state_count();
	std::vector<NfaTransition> transitions = d.transitions();
	bool sink_used = d.initial().empty();
	for (StateId q = 0; q < d.state_count(); ++q) {
		for (const Letter& a : letters) {
			if (!step(d, q, a)) {
				transitions.push_back({q, a, sink});
				sink_used = true;
			}
		}
	}
	if (!sink_used)
		return Nfa(std::move(letters), d.state_count(), std::move(transitions), d.initial(), d.final());
	for (const Letter& a : letters)
		transitions.push_back({sink, a, sink});
	std::vector<StateId> initial = d.initial().empty() ? std::vector<StateId>{sink} : d.initial();
	return Nfa(std::move(letters), d.state_count() + 1, std::move(transitions), std::move(initial), d.final());
}

DfaComparison dfa_equivalent(const Nfa& d1, const Nfa& d2)
{
	if (!d1.is_complete_dfa() || !d2.is_complete_dfa())
		throw PreconditionError("dfa_equivalent expects complete DFAs");
	if (d1.alphabet() != d2.alphabet())
		throw PreconditionError("dfa_equivalent expects a shared alphabet");

	// Hopcroft-Karp: merge the two initial states and propagate along every
	// letter; any merged class mixing final and non-final states disproves
	// equality. States of d2 are offset by |d1|.
	const std::size_t offset = d1.state_count();
	UnionFind classes(d1.state_count() + d2.state_count());
	std::deque<std::pair<StateId, StateId>> pending;
	const StateId i1 = d1.initial().front();
	const StateId i2 = d2.initial().front();
	classes.unite(i1, i2 + offset);
	pending.emplace_back(i1, i2);
	bool equal = true;
	while (!pending.empty() && equal) {
		const auto [p, q] = pending.front();
		pending.pop_front();
		if (d1.is_final(p) != d2.is_final(q)) {
			equal = false;
			break;
		}
		const auto out1 = d1.outgoing(p);
		const auto out2 = d2.outgoing(q);
		for (std::size_t k = 0; k < out1.size(); ++k)
			if (classes.unite(out1[k].dst, out2[k].dst + offset))
				pending.emplace_back(out1[k].dst, out2[k].dst);
	}
	if (equal)
		return {};

	// The merge order does not yield shortest counterexamples, so the witness
	// comes from a breadth-first search of the product.
	std::map<std::pair<StateId, StateId>, std::pair<std::pair<StateId, StateId>, std::size_t>> parent;
	std::deque<std::pair<StateId, StateId>> queue{{i1, i2}};
	parent[{i1, i2}] = {{i1, i2}, d1.alphabet().size()};
	while (!queue.empty()) {
		const auto pq = queue.front();
		queue.pop_front();
		if (d1.is_final(pq.first) != d2.is_final(pq.second)) {
			Word w;
			for (auto at = pq; at != std::pair{i1, i2};) {
				const auto& [prev, letter] = parent.at(at);
				w.push_back(d1.alphabet()[letter]);
				at = prev;
			}
			std::reverse(w.begin(), w.end());
			return {false, std::move(w)};
		}
		const auto out1 = d1.outgoing(pq.first);
		const auto out2 = d2.outgoing(pq.second);
		for (std::size_t k = 0; k < out1.size(); ++k) {
			const std::pair next{out1[k].dst, out2[k].dst};
			if (parent.try_emplace(next, pq, k).second)
				queue.push_back(next);
		}
	}
	return {false, std::nullopt};
}

}  // namespace spliffer
