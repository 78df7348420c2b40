#pragma once

#include <string>
#include <vector>

#include "cayley/configurations.hpp"
#include "cayley/phase_regions.hpp"
#include "cayley/verifier.hpp"

namespace cayley {

/// Rule wire format: {"subgroup": {"kind", "A"}, "k", "table":
/// [{"parent", "vertex", "spin"}, ...]} with table rows in canonical
/// pair order. Rationals elsewhere travel as "p/q" strings, never floats.
std::string rule_to_json(const WeakPeriodicRule& rule);
WeakPeriodicRule rule_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& report);
std::string theorem_report_to_json(const TheoremReport& report);
std::string census_to_json(const CensusTable& table);

/// Combined classify output: region label plus ground-state descriptor.
std::string region_report_to_json(int order, const Coupling& j, const RegionLabel& label,
                                  const GroundStateDescriptor& descriptor);

std::string enumeration_to_json(const std::vector<EnumeratedGroundState>& results);

/// Combined check output; all_agree mirrors the process exit status.
std::string check_suite_to_json(const CensusTable& census,
                                const std::vector<TheoremReport>& theorem2,
                                const std::vector<TheoremReport>& theorem3);

/// Single rule verification as emitted by the CLI verify subcommand.
std::string verification_to_json(const WeakPeriodicRule& rule,
                                 const VerificationReport& report);

}  // namespace cayley
