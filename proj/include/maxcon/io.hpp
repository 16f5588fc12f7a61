#pragma once

// JSON surfaces: schedule and pool files, trace/mortality/fault reports,
// generator specs. Indices in JSON are 1-based.

#include "maxcon/consensus.hpp"
#include "maxcon/generators.hpp"
#include "maxcon/mortality.hpp"
#include "maxcon/tropical.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace maxcon {

using Json = nlohmann::ordered_json;

Json to_json(ExtendedReal x);  // integer, or the string "-inf"
ExtendedReal extended_real_from_json(const Json& j);
Json to_json(const StateVector& x);

// [{"step": k, "values": [...], "converged": bool}, ...]
Json trace_to_json(const Trace& trace);

// A matrix entry in a pool or schedule file is one of
//   "path/to/file"                  matrix text file, relative to base_dir
//   [[0, "-inf"], ["-inf", 0]]      inline rows of 0 / "-inf"
//   {"n": 2, "edges": [[1, 2]]}     edge list, 1-based
AdjMatrix matrix_from_json(const Json& j, const std::filesystem::path& base_dir);

// Either a bare list of matrix entries or an object with a "pool" list.
std::vector<AdjMatrix> pool_from_json(const Json& j, const std::filesystem::path& base_dir);

// {"n": N, "pool": [...], "sequence": [1-based indices]}
SwitchingSchedule schedule_from_json(const Json& j, const std::filesystem::path& base_dir);

// {"mortal": bool, "witness": [1-based] | null, "witness_length": int | null}
Json mortality_result_to_json(const MortalityResult& r);

// {"family": ..., "n": ..., "p"/"k"/"beta"/"m": ..., "seed": ...}
GenSpec genspec_from_json(const Json& j);

Json fault_report_to_json(const FaultReport& r, std::size_t expected_steps);
Json diameter_summary_to_json(const DiameterSummary& s);

// Parses a whole file as JSON, mapping syntax errors to ParseError.
Json read_json_file(const std::filesystem::path& path);

}  // namespace maxcon
