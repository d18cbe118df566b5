#include "spliffer/monoid.hpp"

#include <algorithm>

namespace spliffer {

Word word(std::string_view text)
{
	Word w;
	w.reserve(text.size());
	for (char c : text)
		w.emplace_back(1, c);
	return w;
}

Word concat(const Word& lhs, const Word& rhs)
{
	Word w;
	w.reserve(lhs.size() + rhs.size());
	w.insert(w.end(), lhs.begin(), lhs.end());
	w.insert(w.end(), rhs.begin(), rhs.end());
	return w;
}

bool is_prefix(std::span<const Letter> prefix, std::span<const Letter> w)
{
	return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

std::string render_word(const Word& w)
{
	if (w.empty())
		return "-";
	const bool single = std::all_of(w.begin(), w.end(), [](const Letter& a) { return a.size() == 1; });
	std::string out;
	for (std::size_t i = 0; i < w.size(); ++i) {
		if (!single && i > 0)
			out += '.';
		out += w[i];
	}
	return out;
}

char tape_code(Tape tape)
{
	return tape == Tape::Left ? 'L' : 'R';
}

OutputPair output_of(Tape tape, const Letter& letter)
{
	if (tape == Tape::Left)
		return {{letter}, {}};
	return {{}, {letter}};
}

bool UTriple::well_formed() const
{
	return shuffled.size() == left.size() + right.size() && is_interleaving(left, right, shuffled);
}

std::string to_string(const UTriple& t)
{
	return render_word(t.left) + " | " + render_word(t.right) + " | " + render_word(t.shuffled);
}

std::string to_string(const OutputPair& p)
{
	return render_word(p.left) + " | " + render_word(p.right);
}

namespace {

// reachable[i][j]: the first i letters of l and j letters of r can be merged
// into the first i + j letters of s. Counts are kept instead of booleans so the
// same table serves both membership and decomposition counting.
std::uint64_t count_merges(std::span<const Letter> l, std::span<const Letter> r, std::span<const Letter> s)
{
	if (s.size() != l.size() + r.size())
		return 0;
	const std::size_t cols = r.size() + 1;
	std::vector<std::uint64_t> table((l.size() + 1) * cols, 0);
	table[0] = 1;
	for (std::size_t i = 0; i <= l.size(); ++i) {
		for (std::size_t j = 0; j <= r.size(); ++j) {
			const std::uint64_t here = table[i * cols + j];
			if (here == 0)
				continue;
			const std::size_t k = i + j;
			if (k == s.size())
				continue;
			if (i < l.size() && l[i] == s[k])
				table[(i + 1) * cols + j] += here;
			if (j < r.size() && r[j] == s[k])
				table[i * cols + j + 1] += here;
		}
	}
	return table.back();
}

}  // namespace

bool is_interleaving(std::span<const Letter> l, std::span<const Letter> r, std::span<const Letter> s)
{
	return count_merges(l, r, s) > 0;
}

UTriple product(std::span<const Generator> gens)
{
	UTriple t;
	for (const Generator& g : gens) {
		(g.tape == Tape::Left ? t.left : t.right).push_back(g.letter);
		t.shuffled.push_back(g.letter);
	}
	return t;
}

std::uint64_t count_decompositions(const UTriple& t)
{
	return count_merges(t.left, t.right, t.shuffled);
}

}  // namespace spliffer
