#pragma once

// The Shuffling Monoid: triples (l, r, s) where s is an interleaving of l and r,
// generated by (a, -, a) and (-, a, a) for every letter a.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spliffer {

using Letter = std::string;
using Word = std::vector<Letter>;

/// Splits `text` into one single-character letter per byte.
Word word(std::string_view text);

Word concat(const Word& lhs, const Word& rhs);

/// True iff `prefix` is a prefix of `w`.
bool is_prefix(std::span<const Letter> prefix, std::span<const Letter> w);

/// "-" for the empty word; letters are concatenated when all of them are one
/// character long and joined with '.' otherwise.
std::string render_word(const Word& w);

enum class Tape : std::uint8_t { Left, Right };

char tape_code(Tape tape);

struct Generator {
	Tape tape = Tape::Left;
	Letter letter;

	static Generator left(Letter a) { return {Tape::Left, std::move(a)}; }
	static Generator right(Letter a) { return {Tape::Right, std::move(a)}; }

	friend bool operator==(const Generator&, const Generator&) = default;
	friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// A pair of output words, one per tape.
struct OutputPair {
	Word left;
	Word right;

	friend bool operator==(const OutputPair&, const OutputPair&) = default;
	friend auto operator<=>(const OutputPair&, const OutputPair&) = default;
};

/// The (left, right) projection of a single generator.
OutputPair output_of(Tape tape, const Letter& letter);

struct UTriple {
	Word left;
	Word right;
	Word shuffled;

	/// Both monoid invariants: the length grading and the interleaving property.
	bool well_formed() const;

	friend bool operator==(const UTriple&, const UTriple&) = default;
	friend auto operator<=>(const UTriple&, const UTriple&) = default;
};

/// Renders as "l | r | s".
std::string to_string(const UTriple& t);
std::string to_string(const OutputPair& p);

/// True iff `s` is a merge of `l` and `r` preserving the order of both.
bool is_interleaving(std::span<const Letter> l, std::span<const Letter> r, std::span<const Letter> s);

UTriple product(std::span<const Generator> gens);

/// Number of generator sequences whose product is `t` (0 when `t` is not in U).
std::uint64_t count_decompositions(const UTriple& t);

}  // namespace spliffer
