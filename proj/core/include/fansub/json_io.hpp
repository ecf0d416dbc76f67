#pragma once

#include <filesystem>
#include <string>

#include "fansub/infeasibility.hpp"
#include "fansub/reduction.hpp"
#include "fansub/verifier.hpp"

namespace fansub {

inline constexpr int kSchemaVersion = 1;

/// Candidate document: speeds array plus states keyed "left", "r1", ...,
/// "rN", "right"; each state {rho, m:[x,y], U:{u11,u12}, q, F:[x,y]}.
/// Serialization is lossless (doubles round-trip exactly).
std::string subsolution_to_json(const FanSubsolution& sub);
std::string candidate_to_json(const Candidate& candidate, const PressureLaw& law,
                              const PotentialContext& ctx);

/// Parse a candidate document. Boundary regions contribute (rho, m); the
/// derived boundary fields present in the document are ignored. Throws
/// StructuralError naming the offending field by JSON pointer.
Candidate candidate_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& report);
std::string summary_to_json(const ScanSummary& summary);
std::string certificate_to_json(const ContradictionCertificate& certificate);

void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

}  // namespace fansub
