#pragma once

// Line-oriented verdict reports: a tag line followed by "key: value" lines.
// Empty words render as "-".

#include <set>
#include <string>
#include <vector>

#include "spliffer/decision.hpp"
#include "spliffer/spliffer.hpp"

namespace spliffer {

std::string report(const std::vector<Violation>& violations);
std::string report(const DeterminismReport& r);
std::string report(const FunctionalityVerdict& v);
std::string report(const EquivalenceVerdict& v);

/// One "l | r" line per pair.
std::string report(const std::set<OutputPair>& pairs);
/// One "l | r | s" line per triple.
std::string report(const std::set<UTriple>& triples);

}  // namespace spliffer
