#pragma once

#include <json.hpp>

#include "embtop/bounds.hpp"
#include "embtop/linking.hpp"
#include "embtop/linkscan.hpp"
#include "embtop/setsystem.hpp"

namespace embtop {

/// All machine-readable reports use insertion-ordered JSON so that output is
/// reproducible byte for byte (keys in a fixed order, values deterministic).
using Json = nlohmann::ordered_json;

/// Serializes an mpz as a JSON number when it fits a 64-bit integer and as a
/// decimal string beyond that, keeping every value exact.
Json json_int(const mpz_class& z);

Json scan_report_json(const ObstructionReport& report, bool with_timing);

Json analyze_report_json(const SimplicialComplex& K);

Json lemma_chain_json(const LemmaChainReport& report);

Json triple_identity_json(const TripleIdentity& t);

Json linking_trace_json(const LinkingResult& result);

Json bounds_table_json(int d_max, std::optional<long long> n);

}  // namespace embtop
