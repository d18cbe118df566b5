#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "spliffer/decision.hpp"
#include "spliffer/nfa.hpp"
#include "spliffer/rational_ops.hpp"
#include "spliffer/report.hpp"
#include "spliffer/text_format.hpp"

namespace spliffer::cli {

namespace {

// Thrown for bad machines and arguments after CLI11 has accepted the command line.
struct UsageFailure : std::runtime_error {
	using std::runtime_error::runtime_error;
};

Spliffer load_valid(const std::string& path)
{
	Spliffer m;
	try {
		m = load_spliffer(path);
	} catch (const ParseError& e) {
		throw UsageFailure(path + ":" + e.what());
	}
	if (const auto violations = validate(m); !violations.empty())
		throw UsageFailure(path + ": invalid machine\n" + report(violations));
	return m;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
	if (path.empty()) {
		out << text;
		return;
	}
	std::ofstream file(path, std::ios::binary);
	if (!file)
		throw UsageFailure("cannot write " + path);
	file << text;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Shuffle/split automata over the Shuffling Monoid", "spliffer"};
	app.require_subcommand(1);

	std::function<int()> action;
	std::string file1, file2, output, left, right, shuffled;
	std::size_t max_len = 8;
	bool det = false;

	auto* validate_cmd = app.add_subcommand("validate", "Check the machine invariants");
	validate_cmd->add_option("F", file1, "Machine file")->required();
	validate_cmd->callback([&] {
		action = [&] {
			Spliffer m;
			try {
				m = load_spliffer(file1);
			} catch (const ParseError& e) {
				throw UsageFailure(file1 + ":" + e.what());
			}
			const auto violations = validate(m);
			out << report(violations);
			return violations.empty() ? Affirmative : Negative;
		};
	});

	auto* det_cmd = app.add_subcommand("check-det", "Decide whether the splitter is deterministic");
	det_cmd->add_option("F", file1, "Machine file")->required();
	det_cmd->callback([&] {
		action = [&] {
			const auto r = is_deterministic(load_valid(file1));
			out << report(r);
			return r.deterministic ? Affirmative : Negative;
		};
	});

	auto* fun_cmd = app.add_subcommand("check-fun", "Decide whether the splitter is functional");
	fun_cmd->add_option("F", file1, "Machine file")->required();
	fun_cmd->callback([&] {
		action = [&] {
			const auto v = is_functional(load_valid(file1));
			out << report(v);
			return functional(v) ? Affirmative : Negative;
		};
	});

	auto* inj_cmd = app.add_subcommand("check-inj", "Bounded brute-force injectivity check");
	inj_cmd->add_option("F", file1, "Machine file")->required();
	inj_cmd->add_option("--max-len", max_len, "Longest input considered")->capture_default_str();
	inj_cmd->callback([&] {
		action = [&] {
			const bool injective = is_injective_bruteforce(load_valid(file1), max_len);
			out << (injective ? "INJECTIVE UP TO " : "NOT INJECTIVE UP TO ") << max_len << '\n';
			return injective ? Affirmative : Negative;
		};
	});

	auto* equiv_cmd = app.add_subcommand("equiv", "Decide equivalence of two functional splitters");
	equiv_cmd->add_option("F1", file1, "First machine")->required();
	equiv_cmd->add_option("F2", file2, "Second machine")->required();
	equiv_cmd->add_flag("--det", det, "Require deterministic inputs and use the quadratic procedure");
	equiv_cmd->callback([&] {
		action = [&] {
			const Spliffer m1 = load_valid(file1);
			const Spliffer m2 = load_valid(file2);
			const auto v = det ? equivalent_deterministic(m1, m2) : equivalent_functional(m1, m2);
			out << report(v);
			return equivalent(v) ? Affirmative : Negative;
		};
	});

	auto* accepts_cmd = app.add_subcommand("accepts", "Membership of the triple (L, R, S); '-' is the empty word");
	accepts_cmd->add_option("F", file1, "Machine file")->required();
	accepts_cmd->add_option("L", left, "Left word")->required();
	accepts_cmd->add_option("R", right, "Right word")->required();
	accepts_cmd->add_option("S", shuffled, "Shuffled word")->required();
	accepts_cmd->callback([&] {
		action = [&] {
			const Spliffer m = load_valid(file1);
			const UTriple t{parse_word(left), parse_word(right), parse_word(shuffled)};
			if (!t.well_formed())
				throw UsageFailure("not an interleaving: " + to_string(t));
			const bool ok = accepts(m, t);
			out << (ok ? "ACCEPTED\n" : "REJECTED\n");
			return ok ? Affirmative : Negative;
		};
	});

	auto* split_cmd = app.add_subcommand("split", "All ways the splitter splits S");
	split_cmd->add_option("F", file1, "Machine file")->required();
	split_cmd->add_option("S", shuffled, "Input word")->required();
	split_cmd->callback([&] {
		action = [&] {
			const auto pairs = split(load_valid(file1), parse_word(shuffled));
			out << report(pairs);
			return pairs.empty() ? Negative : Affirmative;
		};
	});

	auto* enum_cmd = app.add_subcommand("enumerate", "Behavior restricted to shuffled words of bounded length");
	enum_cmd->add_option("F", file1, "Machine file")->required();
	enum_cmd->add_option("--max-len", max_len, "Longest shuffled word")->capture_default_str();
	enum_cmd->callback([&] {
		action = [&] {
			out << report(enumerate_behavior(load_valid(file1), max_len));
			return Affirmative;
		};
	});

	auto binary_op = [&](const std::string& name, const std::string& help,
			     Spliffer (*op)(const Spliffer&, const Spliffer&)) {
		auto* cmd = app.add_subcommand(name, help);
		cmd->add_option("F1", file1, "First machine")->required();
		cmd->add_option("F2", file2, "Second machine")->required();
		cmd->add_option("-o,--output", output, "Output file (stdout when omitted)");
		cmd->callback([&, op] {
			action = [&, op] {
				emit(serialize(op(load_valid(file1), load_valid(file2))), output, out);
				return Affirmative;
			};
		});
	};
	auto unary_op = [&](const std::string& name, const std::string& help, std::function<std::string(const Spliffer&)> op) {
		auto* cmd = app.add_subcommand(name, help);
		cmd->add_option("F", file1, "Machine file")->required();
		cmd->add_option("-o,--output", output, "Output file (stdout when omitted)");
		cmd->callback([&, op] {
			action = [&, op] {
				emit(op(load_valid(file1)), output, out);
				return Affirmative;
			};
		});
	};
	binary_op("union", "Machine accepting the union of both behaviors", &union_of);
	binary_op("product", "Machine accepting the pointwise product of both behaviors",
		  static_cast<Spliffer (*)(const Spliffer&, const Spliffer&)>(&product));
	unary_op("star", "Machine accepting the Kleene star of the behavior",
		 [](const Spliffer& m) { return serialize(star(m)); });
	unary_op("trim", "Accessible and co-accessible part", [](const Spliffer& m) { return serialize(trim(m)); });
	unary_op("project-input", "Underlying input automaton",
		 [](const Spliffer& m) { return serialize(input_projection(m)); });

	std::reverse(args.begin(), args.end());
	try {
		app.parse(args);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? Affirmative : UsageError;
	}

	try {
		return action();
	} catch (const UsageFailure& e) {
		err << "error: " << e.what() << '\n';
	} catch (const PreconditionError& e) {
		err << "error: " << e.what() << '\n';
	} catch (const std::runtime_error& e) {
		err << "error: " << e.what() << '\n';
	}
	return UsageError;
}

}  // namespace spliffer::cli
