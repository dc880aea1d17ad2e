#pragma once

#include <string>

#include "lawkit.hpp"
#include "spectra.hpp"
#include "verify.hpp"
#include "walks.hpp"

namespace lawforge {

// Stable JSON records (keys sorted, two-space indent) for golden-file tests.
// Wall time is emitted only on request so default reports are reproducible
// byte-for-byte.
std::string to_json(const LawCertificate& cert, bool include_timing = false);
std::string to_json(const LawRecipe& recipe);
std::string to_json(const SpectrumReport& report);
std::string to_csv(const SpectrumReport& report);
std::string to_json(const DensityReport& report);
std::string to_json(const TupleCount& count);
std::string to_json(const MixingReport& report);
std::string to_json(const AlmostLawResult& result);
std::string to_json(const ShortestLawResult& result, const std::string& group, uint32_t max_length);
std::string to_json(const VanishingSet& set, const std::string& group, const std::string& word);
std::string to_json(const CoverageReport& report);
std::string diameter_json(const std::string& group, uint64_t order, uint32_t diameter,
                          const std::vector<uint32_t>& generator_indices, uint64_t seed);

// Wraps a report with the resolved run configuration.
std::string with_config(const std::string& config_json, const std::string& report_json);

}  // namespace lawforge
