#include "spliffer/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace spliffer {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
	: std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
	  line_(line), column_(column)
{
}

namespace {

struct Token {
	std::string_view text;
	std::size_t column;
};

std::vector<Token> tokenize(std::string_view line, std::size_t first_column)
{
	std::vector<Token> tokens;
	std::size_t i = 0;
	while (i < line.size()) {
		while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
			++i;
		const std::size_t start = i;
		while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
			++i;
		if (i > start)
			tokens.push_back({line.substr(start, i - start), first_column + start});
	}
	return tokens;
}

bool valid_letter(std::string_view token)
{
	return token != "-" && token.find_first_of(".|#:") == std::string_view::npos;
}

// Everything both file flavours share; `spliffer` selects the transition arity.
struct RawMachine {
	std::vector<Letter> alphabet;
	std::size_t states = 0;
	std::vector<StateId> initial;
	std::vector<StateId> final;
	std::vector<Transition> transitions;
	std::vector<NfaTransition> nfa_transitions;
};

RawMachine parse_raw(std::string_view text, bool spliffer)
{
	RawMachine raw;
	bool seen_alphabet = false, seen_states = false, seen_initial = false, seen_final = false;
	std::size_t line_no = 0;

	auto number = [&](const Token& t) {
		StateId value = 0;
		const auto* end = t.text.data() + t.text.size();
		const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
		if (ec != std::errc() || ptr != end)
			throw ParseError(line_no, t.column, "expected a state number, got '" + std::string(t.text) + "'");
		return value;
	};
	auto letter = [&](const Token& t) {
		if (!valid_letter(t.text))
			throw ParseError(line_no, t.column, "invalid letter '" + std::string(t.text) + "'");
		return Letter(t.text);
	};
	auto once = [&](bool& seen, const std::string& key) {
		if (seen)
			throw ParseError(line_no, 1, "duplicate '" + key + "' directive");
		seen = true;
	};

	std::size_t start = 0;
	while (start <= text.size()) {
		const std::size_t end = std::min(text.find('\n', start), text.size());
		std::string_view line = text.substr(start, end - start);
		start = end + 1;
		++line_no;
		if (const auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		if (!line.empty() && line.back() == '\r')
			line.remove_suffix(1);

		const auto first = line.find_first_not_of(" \t");
		if (first == std::string_view::npos)
			continue;
		const auto colon = line.find(':');
		if (colon == std::string_view::npos)
			throw ParseError(line_no, first + 1, "expected 'key: values'");
		const auto key_tokens = tokenize(line.substr(0, colon), 1);
		if (key_tokens.size() != 1)
			throw ParseError(line_no, first + 1, "expected a single directive name before ':'");
		const std::string key(key_tokens.front().text);
		const auto args = tokenize(line.substr(colon + 1), colon + 2);

		if (key == "alphabet") {
			once(seen_alphabet, key);
			for (const Token& t : args)
				raw.alphabet.push_back(letter(t));
		} else if (key == "states") {
			once(seen_states, key);
			if (args.size() != 1)
				throw ParseError(line_no, colon + 2, "'states' takes exactly one number");
			raw.states = number(args.front());
		} else if (key == "initial") {
			once(seen_initial, key);
			for (const Token& t : args)
				raw.initial.push_back(number(t));
		} else if (key == "final") {
			once(seen_final, key);
			for (const Token& t : args)
				raw.final.push_back(number(t));
		} else if (key == "trans") {
			const std::size_t arity = spliffer ? 4 : 3;
			if (args.size() != arity) {
				const std::size_t column = args.size() > arity ? args[arity].column : line.size() + 1;
				throw ParseError(line_no, column,
						 spliffer ? "expected 'trans: SRC LETTER L|R DST'" : "expected 'trans: SRC LETTER DST'");
			}
			const StateId src = number(args[0]);
			Letter a = letter(args[1]);
			if (spliffer) {
				Tape tape;
				if (args[2].text == "L")
					tape = Tape::Left;
				else if (args[2].text == "R")
					tape = Tape::Right;
				else
					throw ParseError(line_no, args[2].column,
							 "tape must be L or R, got '" + std::string(args[2].text) + "'");
				raw.transitions.push_back({src, Generator{tape, std::move(a)}, number(args[3])});
			} else {
				raw.nfa_transitions.push_back({src, std::move(a), number(args[2])});
			}
		} else {
			throw ParseError(line_no, first + 1, "unknown directive '" + key + "'");
		}
	}
	if (!seen_alphabet)
		throw ParseError(line_no, 1, "missing 'alphabet' directive");
	if (!seen_states)
		throw ParseError(line_no, 1, "missing 'states' directive");
	return raw;
}

void write_headers(std::ostringstream& os, const std::vector<Letter>& alphabet, std::size_t states,
		   const std::vector<StateId>& initial, const std::vector<StateId>& final)
{
	os << "alphabet:";
	for (const Letter& a : alphabet)
		os << ' ' << a;
	os << "\nstates: " << states << "\ninitial:";
	for (StateId q : initial)
		os << ' ' << q;
	os << "\nfinal:";
	for (StateId q : final)
		os << ' ' << q;
	os << '\n';
}

}  // namespace

Spliffer parse_spliffer(std::string_view text)
{
	RawMachine raw = parse_raw(text, true);
	return Spliffer(std::move(raw.alphabet), raw.states, std::move(raw.transitions), std::move(raw.initial),
			std::move(raw.final));
}

Nfa parse_nfa(std::string_view text)
{
	RawMachine raw = parse_raw(text, false);
	return Nfa(std::move(raw.alphabet), raw.states, std::move(raw.nfa_transitions), std::move(raw.initial),
		   std::move(raw.final));
}

std::string serialize(const Spliffer& m)
{
	std::ostringstream os;
	write_headers(os, m.alphabet(), m.state_count(), m.initial(), m.final());
	for (const Transition& t : m.transitions())
		os << "trans: " << t.src << ' ' << t.label.letter << ' ' << tape_code(t.label.tape) << ' ' << t.dst << '\n';
	return os.str();
}

std::string serialize(const Nfa& n)
{
	std::ostringstream os;
	write_headers(os, n.alphabet(), n.state_count(), n.initial(), n.final());
	for (const NfaTransition& t : n.transitions())
		os << "trans: " << t.src << ' ' << t.letter << ' ' << t.dst << '\n';
	return os.str();
}

Word parse_word(std::string_view text)
{
	if (text == "-" || text.empty())
		return {};
	if (text.find('.') == std::string_view::npos)
		return word(text);
	Word w;
	std::size_t start = 0;
	while (start <= text.size()) {
		const std::size_t end = std::min(text.find('.', start), text.size());
		if (end > start)
			w.emplace_back(text.substr(start, end - start));
		start = end + 1;
	}
	return w;
}

std::string read_file(const std::filesystem::path& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw std::runtime_error("cannot open " + path.string());
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

Spliffer load_spliffer(const std::filesystem::path& path)
{
	return parse_spliffer(read_file(path));
}

}  // namespace spliffer
