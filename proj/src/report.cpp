#include "spliffer/report.hpp"

#include <sstream>

namespace spliffer {

namespace {

const char* violation_tag(DeterminismViolation::Kind kind)
{
	switch (kind) {
	case DeterminismViolation::Kind::InitialCount: return "initial-count";
	case DeterminismViolation::Kind::MixedTapes: return "mixed-tapes";
	case DeterminismViolation::Kind::RepeatedLetter: return "repeated-letter";
	}
	return "?";
}

void write_witness(std::ostringstream& os, const NotFunctional& w)
{
	os << "input: " << render_word(w.input) << '\n';
	os << "output: " << to_string(w.first) << '\n';
	os << "output: " << to_string(w.second) << '\n';
}

}  // namespace

std::string report(const std::vector<Violation>& violations)
{
	if (violations.empty())
		return "VALID\n";
	std::ostringstream os;
	os << "INVALID\n";
	for (const Violation& v : violations)
		os << kind_name(v.kind) << ": " << v.detail << '\n';
	return os.str();
}

std::string report(const DeterminismReport& r)
{
	if (r.deterministic)
		return "DETERMINISTIC\n";
	std::ostringstream os;
	os << "NOT DETERMINISTIC\n";
	if (r.witness) {
		os << "violation: " << violation_tag(r.witness->kind) << '\n';
		if (r.witness->state)
			os << "state: " << *r.witness->state << '\n';
		os << "detail: " << r.witness->detail << '\n';
	}
	return os.str();
}

std::string report(const FunctionalityVerdict& v)
{
	if (functional(v))
		return "FUNCTIONAL\n";
	std::ostringstream os;
	os << "NOT FUNCTIONAL\n";
	write_witness(os, std::get<NotFunctional>(v));
	return os.str();
}

std::string report(const EquivalenceVerdict& v)
{
	std::ostringstream os;
	if (std::holds_alternative<Equivalent>(v)) {
		os << "EQUIVALENT\n";
	} else if (const auto* d = std::get_if<DifferentDomain>(&v)) {
		os << "DIFFERENT DOMAIN\n";
		os << "input: " << render_word(d->witness) << '\n';
		os << "accepted-by: " << (d->in_first ? "first" : "second") << '\n';
	} else if (const auto* d = std::get_if<DifferentOutputs>(&v)) {
		os << "DIFFERENT OUTPUTS\n";
		os << "input: " << render_word(d->input) << '\n';
		os << "first: " << to_string(d->first) << '\n';
		os << "second: " << to_string(d->second) << '\n';
	} else if (const auto* d = std::get_if<InputNotFunctional>(&v)) {
		os << "INPUT NOT FUNCTIONAL\n";
		os << "machine: " << (d->machine == 1 ? "first" : "second") << '\n';
		write_witness(os, d->witness);
	}
	return os.str();
}

std::string report(const std::set<OutputPair>& pairs)
{
	std::string out;
	for (const OutputPair& p : pairs)
		out += to_string(p) + '\n';
	return out;
}

std::string report(const std::set<UTriple>& triples)
{
	std::string out;
	for (const UTriple& t : triples)
		out += to_string(t) + '\n';
	return out;
}

}  // namespace spliffer
