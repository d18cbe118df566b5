#pragma once

// The Lead-or-Delay action: tracks how far one output word runs ahead of
// another as both are extended on the right. A value is a lead (f, -), a delay
// (-, g), or the absorbing Zero for words where neither is a prefix of the other.

#include <compare>
#include <span>
#include <string>

#include "spliffer/monoid.hpp"

namespace spliffer {

class LeadOrDelay {
public:
	enum class Kind : std::uint8_t { Lead, Delay, Zero };

	/// (-, -); always represented as an empty lead.
	static LeadOrDelay balanced() { return LeadOrDelay(Kind::Lead, {}); }
	static LeadOrDelay lead(Word w) { return LeadOrDelay(Kind::Lead, std::move(w)); }
	static LeadOrDelay delay(Word w)
	{
		if (w.empty())
			return balanced();
		return LeadOrDelay(Kind::Delay, std::move(w));
	}
	static LeadOrDelay zero() { return LeadOrDelay(Kind::Zero, {}); }

	Kind kind() const { return kind_; }
	/// The lead or delay word; empty for Zero.
	const Word& word() const { return word_; }

	bool is_zero() const { return kind_ == Kind::Zero; }
	bool is_balanced() const { return kind_ == Kind::Lead && word_.empty(); }

	/// The pair (h_l, h_r) this value stands for; both empty for Zero.
	const Word& first_component() const;
	const Word& second_component() const;

	friend bool operator==(const LeadOrDelay&, const LeadOrDelay&) = default;
	friend auto operator<=>(const LeadOrDelay&, const LeadOrDelay&) = default;

private:
	LeadOrDelay(Kind kind, Word w) : kind_(kind), word_(std::move(w)) {}

	Kind kind_ = Kind::Lead;
	Word word_;
};

/// "lead(ab)", "delay(a)", "0"; the balanced value prints as "lead(-)".
std::string to_string(const LeadOrDelay& h);

/// h . (f, g): with h = (h_l, h_r), compares h_l f against h_r g and keeps the
/// residual of the longer one, or Zero when neither is a prefix of the other.
LeadOrDelay delta(const LeadOrDelay& h, std::span<const Letter> f, std::span<const Letter> g);

/// Componentwise pair of lead-or-delay values: `left` compares the left
/// outputs of two runs, `right` their right outputs.
struct PairValue {
	LeadOrDelay left = LeadOrDelay::balanced();
	LeadOrDelay right = LeadOrDelay::balanced();

	static PairValue balanced() { return {}; }
	bool is_balanced() const { return left.is_balanced() && right.is_balanced(); }
	bool has_zero() const { return left.is_zero() || right.is_zero(); }

	friend bool operator==(const PairValue&, const PairValue&) = default;
	friend auto operator<=>(const PairValue&, const PairValue&) = default;
};

std::string to_string(const PairValue& v);

/// The bidimensional action: `first` and `second` are the outputs of the two
/// runs being compared.
PairValue delta2(const PairValue& v, const OutputPair& first, const OutputPair& second);

}  // namespace spliffer
