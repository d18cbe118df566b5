#pragma once

// Line-oriented machine files:
//
//   # comment
//   alphabet: a b
//   states: 6
//   initial: 0
//   final: 5
//   trans: 0 a L 1      (L writes (a, -, a), R writes (-, a, a))
//
// Input automata use the same headers with "trans: SRC LETTER DST".

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spliffer/nfa.hpp"
#include "spliffer/spliffer.hpp"

namespace spliffer {

class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t line, std::size_t column, const std::string& message);

	std::size_t line() const { return line_; }
	std::size_t column() const { return column_; }

private:
	std::size_t line_;
	std::size_t column_;
};

/// Syntax only; ranges and letters are left to validate().
Spliffer parse_spliffer(std::string_view text);
Nfa parse_nfa(std::string_view text);

/// Canonical text: headers in fixed order, transitions in canonical order.
std::string serialize(const Spliffer& m);
std::string serialize(const Nfa& n);

/// "-" is the empty word; a word containing '.' is split on it; otherwise
/// every character is a letter.
Word parse_word(std::string_view text);

std::string read_file(const std::filesystem::path& path);
Spliffer load_spliffer(const std::filesystem::path& path);

}  // namespace spliffer
