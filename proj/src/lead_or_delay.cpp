#include "spliffer/lead_or_delay.hpp"

#include <algorithm>

namespace spliffer {

namespace {

const Word empty_word;

}  // namespace

const Word& LeadOrDelay::first_component() const
{
	return kind_ == Kind::Lead ? word_ : empty_word;
}

const Word& LeadOrDelay::second_component() const
{
	return kind_ == Kind::Delay ? word_ : empty_word;
}

std::string to_string(const LeadOrDelay& h)
{
	switch (h.kind()) {
	case LeadOrDelay::Kind::Lead: return "lead(" + render_word(h.word()) + ")";
	case LeadOrDelay::Kind::Delay: return "delay(" + render_word(h.word()) + ")";
	case LeadOrDelay::Kind::Zero: return "0";
	}
	return "?";
}

LeadOrDelay delta(const LeadOrDelay& h, std::span<const Letter> f, std::span<const Letter> g)
{
	if (h.is_zero())
		return h;

	// upper = h_l f and lower = h_r g, read in place.
	const Word& hl = h.first_component();
	const Word& hr = h.second_component();
	const std::size_t upper_size = hl.size() + f.size();
	const std::size_t lower_size = hr.size() + g.size();
	auto upper = [&](std::size_t i) -> const Letter& { return i < hl.size() ? hl[i] : f[i - hl.size()]; };
	auto lower = [&](std::size_t i) -> const Letter& { return i < hr.size() ? hr[i] : g[i - hr.size()]; };

	const std::size_t common = std::min(upper_size, lower_size);
	for (std::size_t i = 0; i < common; ++i)
		if (upper(i) != lower(i))
			return LeadOrDelay::zero();

	Word rest;
	if (upper_size >= lower_size) {
		rest.reserve(upper_size - lower_size);
		for (std::size_t i = lower_size; i < upper_size; ++i)
			rest.push_back(upper(i));
		return LeadOrDelay::lead(std::move(rest));
	}
	rest.reserve(lower_size - upper_size);
	for (std::size_t i = upper_size; i < lower_size; ++i)
		rest.push_back(lower(i));
	return LeadOrDelay::delay(std::move(rest));
}

std::string to_string(const PairValue& v)
{
	return "(" + to_string(v.left) + ", " + to_string(v.right) + ")";
}

PairValue delta2(const PairValue& v, const OutputPair& first, const OutputPair& second)
{
	return {delta(v.left, first.left, second.left), delta(v.right, first.right, second.right)};
}

}  // namespace spliffer
