#include "spliffer/spliffer.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "spliffer/nfa.hpp"

namespace spliffer {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v)
{
	std::sort(v.begin(), v.end());
	v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string describe(const Transition& t)
{
	std::ostringstream os;
	os << t.src << ' ' << t.label.letter << ' ' << tape_code(t.label.tape) << ' ' << t.dst;
	return os.str();
}

}  // namespace

bool operator<(const Transition& a, const Transition& b)
{
	return std::tie(a.src, a.label.letter, a.label.tape, a.dst) <
	       std::tie(b.src, b.label.letter, b.label.tape, b.dst);
}

Spliffer::Spliffer(std::vector<Letter> alphabet, std::size_t state_count, std::vector<Transition> transitions,
		   std::vector<StateId> initial, std::vector<StateId> final)
	: alphabet_(std::move(alphabet)), state_count_(state_count), transitions_(std::move(transitions)),
	  initial_(std::move(initial)), final_(std::move(final))
{
	sort_unique(alphabet_);
	sort_unique(transitions_);
	sort_unique(initial_);
	sort_unique(final_);

	offsets_.assign(state_count_ + 1, 0);
	for (const Transition& t : transitions_)
		if (t.src < state_count_)
			++offsets_[t.src + 1];
	for (std::size_t q = 0; q < state_count_; ++q)
		offsets_[q + 1] += offsets_[q];

	initial_mask_.assign(state_count_, false);
	final_mask_.assign(state_count_, false);
	for (StateId q : initial_)
		if (q < state_count_)
			initial_mask_[q] = true;
	for (StateId q : final_)
		if (q < state_count_)
			final_mask_[q] = true;
}

bool Spliffer::is_initial(StateId q) const
{
	return q < state_count_ && initial_mask_[q];
}

bool Spliffer::is_final(StateId q) const
{
	return q < state_count_ && final_mask_[q];
}

std::span<const Transition> Spliffer::outgoing(StateId q) const
{
	if (q >= state_count_)
		return {};
	return std::span<const Transition>(transitions_).subspan(offsets_[q], offsets_[q + 1] - offsets_[q]);
}

const char* kind_name(Violation::Kind kind)
{
	switch (kind) {
	case Violation::Kind::NoStates: return "NoStates";
	case Violation::Kind::NoInitial: return "NoInitial";
	case Violation::Kind::OutOfRange: return "OutOfRange";
	case Violation::Kind::UnknownLetter: return "UnknownLetter";
	}
	return "?";
}

std::vector<Violation> validate(const Spliffer& m)
{
	std::vector<Violation> out;
	const std::size_t n = m.state_count();
	if (n == 0)
		out.push_back({Violation::Kind::NoStates, "machine has no states"});
	if (m.initial().empty())
		out.push_back({Violation::Kind::NoInitial, "machine has no initial state"});
	for (StateId q : m.initial())
		if (q >= n)
			out.push_back({Violation::Kind::OutOfRange, "initial state " + std::to_string(q) + " out of range"});
	for (StateId q : m.final())
		if (q >= n)
			out.push_back({Violation::Kind::OutOfRange, "final state " + std::to_string(q) + " out of range"});
	for (const Transition& t : m.transitions()) {
		if (t.src >= n || t.dst >= n)
			out.push_back({Violation::Kind::OutOfRange, "transition " + describe(t) + " has an endpoint out of range"});
		if (!std::binary_search(m.alphabet().begin(), m.alphabet().end(), t.label.letter))
			out.push_back({Violation::Kind::UnknownLetter,
				       "transition " + describe(t) + " uses letter '" + t.label.letter + "' outside the alphabet"});
	}
	return out;
}

void require_valid(const Spliffer& m)
{
	const auto violations = validate(m);
	if (!violations.empty())
		throw PreconditionError("invalid spliffer: " + violations.front().detail);
}

namespace {

// Configurations (state, i, j): i letters of t.left and j of t.right consumed.
// Since every generator emits exactly one shuffled letter, position i + j of
// t.shuffled is the next one to emit. Counting runs instead of flags lets
// accepts() and count_accepting_runs() share the sweep, which goes by
// increasing i + j since every transition increases it by one.
std::uint64_t run_table(const Spliffer& m, const UTriple& t, bool saturate)
{
	if (!t.well_formed())
		throw PreconditionError("not an element of the Shuffling Monoid: " + to_string(t));
	const std::size_t n = m.state_count();
	const std::size_t rows = t.left.size() + 1;
	const std::size_t cols = t.right.size() + 1;
	auto index = [&](StateId q, std::size_t i, std::size_t j) { return (i * cols + j) * n + q; };

	std::vector<std::uint64_t> runs(rows * cols * n, 0);
	for (StateId q : m.initial())
		if (q < n)
			runs[index(q, 0, 0)] = 1;

	for (std::size_t k = 0; k < t.shuffled.size(); ++k) {
		for (std::size_t i = 0; i <= std::min(k, t.left.size()); ++i) {
			const std::size_t j = k - i;
			if (j > t.right.size())
				continue;
			for (StateId q = 0; q < n; ++q) {
				const std::uint64_t here = runs[index(q, i, j)];
				if (here == 0)
					continue;
				for (const Transition& e : m.outgoing(q)) {
					if (e.label.letter != t.shuffled[k])
						continue;
					std::uint64_t* next = nullptr;
					if (e.label.tape == Tape::Left && i < t.left.size() && t.left[i] == e.label.letter)
						next = &runs[index(e.dst, i + 1, j)];
					else if (e.label.tape == Tape::Right && j < t.right.size() && t.right[j] == e.label.letter)
						next = &runs[index(e.dst, i, j + 1)];
					if (next)
						*next = saturate ? 1 : *next + here;
				}
			}
		}
	}

	std::uint64_t total = 0;
	for (StateId q : m.final())
		if (q < n)
			total += runs[index(q, t.left.size(), t.right.size())];
	return total;
}

}  // namespace

bool accepts(const Spliffer& m, const UTriple& t)
{
	return run_table(m, t, true) > 0;
}

std::uint64_t count_accepting_runs(const Spliffer& m, const UTriple& t)
{
	return run_table(m, t, false);
}

std::set<OutputPair> split(const Spliffer& m, const Word& s)
{
	// Distinct partial outputs per state after reading each prefix of s.
	std::set<std::pair<StateId, OutputPair>> layer;
	for (StateId q : m.initial())
		layer.insert({q, OutputPair{}});
	for (const Letter& a : s) {
		std::set<std::pair<StateId, OutputPair>> next;
		for (const auto& [q, out] : layer) {
			for (const Transition& e : m.outgoing(q)) {
				if (e.label.letter != a)
					continue;
				OutputPair extended = out;
				(e.label.tape == Tape::Left ? extended.left : extended.right).push_back(a);
				next.insert({e.dst, std::move(extended)});
			}
		}
		layer = std::move(next);
	}
	std::set<OutputPair> result;
	for (const auto& [q, out] : layer)
		if (m.is_final(q))
			result.insert(out);
	return result;
}

std::set<UTriple> enumerate_behavior(const Spliffer& m, std::size_t max_len)
{
	std::set<UTriple> result;
	std::set<std::pair<StateId, UTriple>> layer;
	for (StateId q : m.initial())
		layer.insert({q, UTriple{}});
	for (std::size_t depth = 0;; ++depth) {
		for (const auto& [q, t] : layer)
			if (m.is_final(q))
				result.insert(t);
		if (depth == max_len || layer.empty())
			break;
		std::set<std::pair<StateId, UTriple>> next;
		for (const auto& [q, t] : layer) {
			for (const Transition& e : m.outgoing(q)) {
				UTriple extended = t;
				(e.label.tape == Tape::Left ? extended.left : extended.right).push_back(e.label.letter);
				extended.shuffled.push_back(e.label.letter);
				next.insert({e.dst, std::move(extended)});
			}
		}
		layer = std::move(next);
	}
	return result;
}

DeterminismReport is_deterministic(const Spliffer& m)
{
	auto fail = [](DeterminismViolation v) { return DeterminismReport{false, std::move(v)}; };

	if (m.initial().size() != 1)
		return fail({DeterminismViolation::Kind::InitialCount, std::nullopt,
			     std::to_string(m.initial().size()) + " initial states"});

	for (StateId q = 0; q < m.state_count(); ++q) {
		const auto out = m.outgoing(q);
		if (out.empty())
			continue;
		for (const Transition& e : out) {
			if (e.label.tape != out.front().label.tape) {
				return fail({DeterminismViolation::Kind::MixedTapes, q,
					     "state " + std::to_string(q) + " writes to both tapes (" + describe(out.front()) +
						     " and " + describe(e) + ")"});
			}
		}
		// Canonical order groups transitions by letter.
		for (std::size_t k = 1; k < out.size(); ++k) {
			if (out[k].label.letter == out[k - 1].label.letter) {
				return fail({DeterminismViolation::Kind::RepeatedLetter, q,
					     "state " + std::to_string(q) + " has two transitions on '" + out[k].label.letter + "'"});
			}
		}
	}
	return {};
}

std::set<OutputPair> OutputTransducer::relation(std::size_t max_steps) const
{
	std::set<OutputPair> result;
	std::set<std::pair<StateId, OutputPair>> layer;
	for (StateId q : initial)
		layer.insert({q, OutputPair{}});
	auto is_final = [&](StateId q) { return std::binary_search(final.begin(), final.end(), q); };
	for (std::size_t depth = 0;; ++depth) {
		for (const auto& [q, out] : layer)
			if (is_final(q))
				result.insert(out);
		if (depth == max_steps || layer.empty())
			break;
		std::set<std::pair<StateId, OutputPair>> next;
		for (const auto& [q, out] : layer) {
			for (const OutputTransition& e : transitions) {
				if (e.src != q)
					continue;
				OutputPair extended = out;
				(e.tape == Tape::Left ? extended.left : extended.right).push_back(e.letter);
				next.insert({e.dst, std::move(extended)});
			}
		}
		layer = std::move(next);
	}
	return result;
}

Nfa input_projection(const Spliffer& m)
{
	std::vector<NfaTransition> transitions;
	transitions.reserve(m.transitions().size());
	for (const Transition& t : m.transitions())
		transitions.push_back({t.src, t.label.letter, t.dst});
	return Nfa(m.alphabet(), m.state_count(), std::move(transitions), m.initial(), m.final());
}

OutputTransducer output_projection(const Spliffer& m)
{
	OutputTransducer out;
	out.alphabet = m.alphabet();
	out.state_count = m.state_count();
	for (const Transition& t : m.transitions())
		out.transitions.push_back({t.src, t.label.tape, t.label.letter, t.dst});
	out.initial = m.initial();
	out.final = m.final();
	return out;
}

bool is_functional_bruteforce(const Spliffer& m, std::size_t max_len)
{
	std::map<Word, OutputPair> image;
	for (const UTriple& t : enumerate_behavior(m, max_len)) {
		OutputPair out{t.left, t.right};
		auto [it, inserted] = image.try_emplace(t.shuffled, out);
		if (!inserted && it->second != out)
			return false;
	}
	return true;
}

bool is_injective_bruteforce(const Spliffer& m, std::size_t max_len)
{
	std::map<OutputPair, Word> preimage;
	for (const UTriple& t : enumerate_behavior(m, max_len)) {
		auto [it, inserted] = preimage.try_emplace(OutputPair{t.left, t.right}, t.shuffled);
		if (!inserted && it->second != t.shuffled)
			return false;
	}
	return true;
}

}  // namespace spliffer
