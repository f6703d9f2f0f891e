#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "csusy/coherent.hpp"
#include "csusy/ladder.hpp"
#include "csusy/spectral.hpp"
#include "csusy/uncertainty.hpp"
#include "csusy/verification.hpp"

namespace csusy {

using Json = nlohmann::ordered_json;

/// 17 significant digits, lowercase scientific ("%.16e"); "null" for
/// non-finite values.
std::string format_double(double value);

/// Deterministic serialization: insertion key order, format_double for every
/// floating value, two-space indent, trailing newline.
std::string dump_json(const Json& value);

/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never see a partial file. Throws std::runtime_error on I/O failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

Json to_json(const VerificationReport& report);
Json to_json(const LemmaReport& report);
Json to_json(const EigenstateRecord& record);
Json to_json(const SpectrumReport& report);
Json to_json(const CoherentState& state);
Json to_json(const HalfLoweringCheck& check);
Json to_json(const FullLoweringCheck& check);
Json to_json(const UncertaintyResult& result);
Json to_json(const XpResult& result);
Json to_json(std::complex<double> z);

/// index,computed,theory,rel_error
std::string to_csv(const SpectrumReport& report);
/// level,abs_sq
std::string to_csv(const CoherentState& state);
/// x,value
std::string samples_csv(const std::vector<double>& xs, const std::vector<double>& values);

}  // namespace csusy
