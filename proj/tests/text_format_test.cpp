#include <doctest.h>

#include <random>

#include "spliffer/rational_ops.hpp"
#include "spliffer/text_format.hpp"
#include "support/oracles.hpp"

using namespace spliffer;
using namespace spliffer::testing;

TEST_CASE("parse fixtures")
{
	const Spliffer fig1 = fixture("fig1.spl");
	CHECK(fig1.state_count() == 6);
	CHECK(fig1.transitions().size() == 6);
	CHECK(fig1.alphabet() == std::vector<Letter>{"a", "b"});
	CHECK(fig1.initial() == std::vector<StateId>{0});
	CHECK(fig1.final() == std::vector<StateId>{5});

	for (const char* name :
	     {"fig1.spl", "fig2a.spl", "fig2b.spl", "fig3.spl", "fig4.spl", "single_left_a.spl", "single_right_a.spl"})
		CHECK_MESSAGE(validate(fixture(name)).empty(), name);
}

TEST_CASE("parse errors carry a location")
{
	const std::string bad_tape = "alphabet: a\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 a X 1\n";
	try {
		parse_spliffer(bad_tape);
		FAIL("expected a parse error");
	} catch (const ParseError& e) {
		CHECK(e.line() == 5);
		CHECK(e.column() == 12);
		CHECK(std::string(e.what()).starts_with("5:12: "));
	}

	CHECK_THROWS_AS(parse_spliffer("states: 2\n"), ParseError);
	CHECK_THROWS_AS(parse_spliffer("alphabet: a\n"), ParseError);
	CHECK_THROWS_AS(parse_spliffer("alphabet: a\nalphabet: b\nstates: 1\n"), ParseError);
	CHECK_THROWS_AS(parse_spliffer("alphabet: a\nstates: x\n"), ParseError);
	CHECK_THROWS_AS(parse_spliffer("alphabet: a\nstates: 2\ntrans: 0 a L\n"), ParseError);
	CHECK_THROWS_AS(parse_spliffer("alphabet: a\nstates: 2\ntrans: 0 a L 1 2\n"), ParseError);
	CHECK_THROWS_AS(parse_spliffer("alphabet: a.b\nstates: 1\n"), ParseError);
	CHECK_THROWS_AS(parse_spliffer("alphabet: -\nstates: 1\n"), ParseError);
	CHECK_THROWS_AS(parse_spliffer("alphabet: a\nstates: 1\nbogus: 1\n"), ParseError);
	CHECK_THROWS_AS(parse_spliffer("alphabet: a\nstates: 1\nno colon here\n"), ParseError);
	CHECK_THROWS_AS(parse_nfa("alphabet: a\nstates: 2\ntrans: 0 a L 1\n"), ParseError);
}

TEST_CASE("parsing is lenient about layout and keeps set semantics")
{
	const Spliffer m = parse_spliffer("  # header\r\n"
					  "alphabet:  a   b\r\n"
					  "states: 2   # two\n"
					  "initial: 0\n"
					  "final: 1\n"
					  "trans: 0 a L 1\n"
					  "\n"
					  "trans: 0   a L 1\n"
					  "trans: 0 b R 1");
	CHECK(m.transitions().size() == 2);
	CHECK(m.alphabet() == std::vector<Letter>{"a", "b"});

	// Ranges are validate()'s job, not the parser's.
	const Spliffer out_of_range = parse_spliffer("alphabet: a\nstates: 1\ninitial: 3\n");
	CHECK_FALSE(validate(out_of_range).empty());
}

TEST_CASE("serialize")
{
	const Spliffer m({"a"}, 1, {}, {0}, {});
	CHECK(serialize(m) == "alphabet: a\nstates: 1\ninitial: 0\nfinal:\n");
	CHECK(parse_spliffer(serialize(m)) == m);

	const Spliffer fig2a = fixture("fig2a.spl");
	CHECK(serialize(fig2a) == "alphabet: a b\n"
				  "states: 5\n"
				  "initial: 0\n"
				  "final: 4\n"
				  "trans: 0 a L 1\n"
				  "trans: 1 b L 2\n"
				  "trans: 2 a R 3\n"
				  "trans: 3 b R 4\n"
				  "trans: 4 a L 1\n");

	const Spliffer u = union_of(fixture("single_left_a.spl"), fixture("single_right_a.spl"));
	CHECK(serialize(u) == "alphabet: a\n"
			      "states: 4\n"
			      "initial: 0 2\n"
			      "final: 1 3\n"
			      "trans: 0 a L 1\n"
			      "trans: 2 a R 3\n");

	const Nfa n = input_projection(fixture("fig4.spl"));
	CHECK(serialize(n) == "alphabet: a b\nstates: 2\ninitial: 0\nfinal: 1\ntrans: 0 b 1\ntrans: 1 a 1\n");
	CHECK(parse_nfa(serialize(n)) == n);
}

TEST_CASE("property: serialization round-trips")
{
	for (const char* name :
	     {"fig1.spl", "fig2a.spl", "fig2b.spl", "fig3.spl", "fig4.spl", "single_left_a.spl", "single_right_a.spl"}) {
		const Spliffer m = fixture(name);
		CHECK(parse_spliffer(serialize(m)) == m);
		CHECK(parse_spliffer(read_file(fixture_path(name))) == m);
	}

	std::mt19937 rng(123);
	RandomMachineOptions opt;
	opt.max_states = 8;
	opt.alphabet = {"a", "b", "cd"};
	for (int round = 0; round < 200; ++round) {
		const Spliffer m = random_spliffer(rng, opt);
		const std::string text = serialize(m);
		const Spliffer back = parse_spliffer(text);
		REQUIRE(back == m);
		REQUIRE(serialize(back) == text);
	}
}

TEST_CASE("parse_word")
{
	CHECK(parse_word("-").empty());
	CHECK(parse_word("").empty());
	CHECK(parse_word("aba") == word("aba"));
	CHECK(parse_word("ab.c") == Word{"ab", "c"});
	CHECK(parse_word("a.") == Word{"a"});
}

TEST_CASE("load_spliffer reports missing files")
{
	CHECK_THROWS_AS(load_spliffer(fixture_path("does-not-exist.spl")), std::runtime_error);
}
