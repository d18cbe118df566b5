#include <doctest.h>

#include <random>

#include "spliffer/rational_ops.hpp"
#include "support/oracles.hpp"

using namespace spliffer;
using namespace spliffer::testing;

namespace {

UTriple T(const char* l, const char* r, const char* s)
{
	return {word(l), word(r), word(s)};
}

Spliffer path_machine(const std::vector<Generator>& gens)
{
	std::vector<Transition> transitions;
	for (StateId k = 0; k < gens.size(); ++k)
		transitions.push_back({k, gens[k], k + 1});
	return Spliffer({"a", "b"}, gens.size() + 1, std::move(transitions), {0}, {gens.size()});
}

std::set<UTriple> products_up_to(const std::set<UTriple>& a, const std::set<UTriple>& b, std::size_t k)
{
	std::set<UTriple> out;
	for (const UTriple& x : a)
		for (const UTriple& y : b)
			if (x.shuffled.size() + y.shuffled.size() <= k)
				out.insert(multiply(x, y));
	return out;
}

std::set<UTriple> star_up_to(const std::set<UTriple>& a, std::size_t k)
{
	std::set<UTriple> out{UTriple{}};
	for (bool grew = true; grew;) {
		grew = false;
		for (const UTriple& t : products_up_to(out, a, k))
			grew = out.insert(t).second || grew;
	}
	return out;
}

void check_labels_in_generators(const Spliffer& m)
{
	REQUIRE(validate(m).empty());
	for (const Transition& t : m.transitions())
		REQUIRE(t.label.letter.size() == 1);
}

}  // namespace

TEST_CASE("union")
{
	const Spliffer ab = path_machine({Generator::left("a"), Generator::right("b")});
	const Spliffer ba = path_machine({Generator::right("b"), Generator::left("a")});
	CHECK(enumerate_behavior(union_of(ab, ba), 4) == std::set<UTriple>{T("a", "b", "ab"), T("a", "b", "ba")});

	const Spliffer fig1 = fixture("fig1.spl");
	CHECK(enumerate_behavior(union_of(fig1, empty_machine({"a", "b"})), 8) == enumerate_behavior(fig1, 8));

	const auto x = enumerate_behavior(union_of(fixture("fig2a.spl"), fixture("fig2b.spl")), 8);
	CHECK(x == std::set<UTriple>{T("ab", "ab", "abab"), T("abab", "abab", "abababab")});

	const Spliffer u = union_of(ab, ba);
	CHECK(u.state_count() == ab.state_count() + ba.state_count());
	CHECK(u.initial() == std::vector<StateId>{0, 3});
}

TEST_CASE("product")
{
	const Spliffer ba = path_machine({Generator::left("b"), Generator::right("a")});
	CHECK(enumerate_behavior(product(ba, ba), 8) == std::set<UTriple>{T("bb", "aa", "baba")});

	const Spliffer fig1 = fixture("fig1.spl");
	CHECK(enumerate_behavior(product(fig1, identity_machine({"a", "b"})), 8) == enumerate_behavior(fig1, 8));
	CHECK(enumerate_behavior(product(identity_machine({"a", "b"}), fig1), 8) == enumerate_behavior(fig1, 8));

	const Spliffer fig4 = fixture("fig4.spl");
	const auto squared = enumerate_behavior(product(fig4, fig4), 6);
	CHECK(squared.contains(T("bb", "aaa", "babaa")));
	CHECK(squared.contains(T("bb", "aaa", "baaba")));
	check_labels_in_generators(product(fig4, fig4));
}

TEST_CASE("star")
{
	CHECK(enumerate_behavior(star(empty_machine({"a"})), 8) == std::set<UTriple>{UTriple{}});

	const Spliffer fig4 = fixture("fig4.spl");
	CHECK_FALSE(is_injective_bruteforce(star(fig4), 6));

	std::set<UTriple> expected;
	for (std::size_t n = 0; n <= 8; ++n) {
		const Word w(n, "a");
		expected.insert({w, {}, w});
	}
	CHECK(enumerate_behavior(star(path_machine({Generator::left("a")})), 8) == expected);

	// Initial states with incoming edges must not become final.
	const Spliffer loop({"a", "b"}, 2, {{0, Generator::left("a"), 1}, {1, Generator::right("b"), 0}}, {0}, {1});
	const auto looped = enumerate_behavior(star(loop), 4);
	CHECK(looped.contains(T("aa", "", "aa")));
	CHECK(looped.contains(T("aa", "b", "aba")));
	CHECK_FALSE(looped.contains(T("a", "b", "ab")));
	CHECK(looped == star_up_to(enumerate_behavior(loop, 4), 4));
}

TEST_CASE("trim")
{
	const Spliffer fig1 = fixture("fig1.spl");
	CHECK(trim(fig1) == fig1);

	const Spliffer extra({"a"}, 3, {{0, Generator::left("a"), 2}}, {0}, {2});
	const Spliffer trimmed = trim(extra);
	CHECK(trimmed.state_count() == 2);
	CHECK(trimmed.transitions() == std::vector<Transition>{{0, Generator::left("a"), 1}});
	CHECK(trimmed.final() == std::vector<StateId>{1});

	const Spliffer nothing = trim(empty_machine({"a"}));
	CHECK(nothing.state_count() == 1);
	CHECK(validate(nothing).empty());
	CHECK(enumerate_behavior(nothing, 4).empty());
}

TEST_CASE("property: constructions match set operations on enumerations")
{
	std::mt19937 rng(4242);
	RandomMachineOptions opt;
	opt.max_states = 3;
	opt.density = 0.12;
	constexpr std::size_t k = 8;
	for (int round = 0; round < 40; ++round) {
		const Spliffer m1 = random_spliffer(rng, opt);
		const Spliffer m2 = random_spliffer(rng, opt);
		const auto b1 = enumerate_behavior(m1, k);
		const auto b2 = enumerate_behavior(m2, k);

		const Spliffer u = union_of(m1, m2);
		const Spliffer p = product(m1, m2);
		const Spliffer s = star(m1);
		check_labels_in_generators(u);
		check_labels_in_generators(p);
		check_labels_in_generators(s);

		std::set<UTriple> both = b1;
		both.insert(b2.begin(), b2.end());
		REQUIRE(enumerate_behavior(u, k) == both);
		REQUIRE(enumerate_behavior(p, k) == products_up_to(b1, b2, k));
		REQUIRE(enumerate_behavior(s, k) == star_up_to(b1, k));
	}
}

TEST_CASE("property: trim preserves behavior, never grows, and is idempotent")
{
	std::mt19937 rng(17);
	RandomMachineOptions opt;
	opt.max_states = 5;
	opt.density = 0.1;
	for (int round = 0; round < 100; ++round) {
		const Spliffer m = random_spliffer(rng, opt);
		const Spliffer t = trim(m);
		REQUIRE(validate(t).empty());
		REQUIRE(t.state_count() <= m.state_count());
		REQUIRE(trim(t) == t);
		REQUIRE(enumerate_behavior(t, 8) == enumerate_behavior(m, 8));
	}
}
