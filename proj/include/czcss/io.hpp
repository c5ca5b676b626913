#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "czcss/constructions.hpp"
#include "czcss/verify.hpp"

namespace czcss {

/// One parsed sequence file. Exactly one of pair/set/family is populated,
/// according to kind:
///   "gcp", "czcp", "czcp_mate", "pair", "quadruple" -> pair (+ mate for gcp;
///   quadruple stores (p,q) in pair and (u,v) in mate),
///   "czcs" -> set,
///   "czcss", "szccs" -> family.
struct SequenceFileContent {
    std::string kind;
    int q = 2;
    std::optional<ConstructionParams> params;
    std::optional<SequencePair> pair;
    std::optional<SequencePair> mate;
    std::optional<CodeSet> set;
    std::optional<CodeFamily> family;
    std::optional<int> claimed_Z;
};

std::string sequence_file_json(const PhaseSequence& seq);
std::string pair_file_json(const SequencePair& pair, const std::string& kind,
                           const std::optional<ConstructionParams>& params,
                           const SequencePair* mate = nullptr);
std::string set_file_json(const CodeSet& set, int claimed_Z,
                          const std::optional<ConstructionParams>& params);
std::string family_file_json(const CodeFamily& family, const std::string& kind,
                             const std::optional<ConstructionParams>& params);

SequenceFileContent parse_sequence_file(const std::string& text);
SequenceFileContent load_sequence_file(const std::string& path);

/// Paper-style listing: one sequence per line, space-separated residues.
std::string render_phase_rows(const SequenceFileContent& content);

std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

/// Correlation tables for every property relevant to the subject, all shifts
/// -(N-1)..N-1, as CSV rows: table,p,p2,tau,c0..c{q-1},magnitude,is_zero.
void write_correlation_tables_csv(std::ostream& out, const SequenceFileContent& content);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace czcss
