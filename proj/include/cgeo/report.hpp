#pragma once

#include <string>

#include "cgeo/morse.hpp"

namespace cgeo {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_output_format(const std::string& name);

/// All emitters produce byte-deterministic output with stable field order.
/// JSON payloads carry a "schema" version tag.
std::string emit_betti_table(const BettiTable& table, OutputFormat fmt);
std::string emit_iterate_table(const GeodesicRecord& rec, const std::vector<IterateRow>& rows,
                               OutputFormat fmt);
std::string emit_morse_table(const GeodesicConfig& config, const MorseTable& table,
                             OutputFormat fmt);
std::string emit_resonance(const ManifoldClass& mc, const ResonanceResult& result,
                           OutputFormat fmt);
std::string emit_tuple(const GeodesicConfig& config, const CijTuple& tuple,
                       const CijTuple* paired, OutputFormat fmt);
std::string emit_audit_report(const GeodesicConfig& config, const AuditReport& report,
                              OutputFormat fmt);

}  // namespace cgeo
