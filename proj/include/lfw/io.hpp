#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfw/affine.hpp"
#include "lfw/checks.hpp"
#include "lfw/family.hpp"
#include "lfw/mra.hpp"

namespace lfw {

inline constexpr int kFormatVersion = 1;

using Json = nlohmann::ordered_json;

// --- function files -------------------------------------------------------
// {format_version, field:{p,c,reduction}, side, window:{M,N},
//  values:[[re,im],...], meta?}  Bit-exact round trip.

Json field_to_json(const FieldRef& f);
FieldRef field_from_json(const Json& j);

Json function_to_json(const TestFunction& f, const Json& meta = Json());
TestFunction function_from_json(const Json& j);

void write_function_file(const std::filesystem::path& path, const TestFunction& f,
                         const Json& meta = Json());
TestFunction read_function_file(const std::filesystem::path& path);

// Loads member files into a frequency-side family; point-side files are
// transformed first.
WaveletFamily family_from_files(const std::vector<std::filesystem::path>& paths);

// --- reports ---------------------------------------------------------------

Json laurent_to_json(const Laurent& x);  // sorted [exponent, [coeffs...]] list
Json cell_to_json(const FieldRef& f, const FrequencyCell& cell);
Json check_to_json(const FieldRef& f, const CheckReport& rep);
Json verdict_to_json(const FieldRef& f, const VerdictReport& v);
Json gramian_to_json(const FieldRef& f, const std::vector<GramianSlice>& slices);
Json frame_bounds_to_json(const FieldRef& f, const FrameBounds& fb);
Json scaling_recovery_to_json(const FieldRef& f, const ScalingRecovery& rec);

// Per-cell residual/dimension tables, plot-ready.
std::string dimension_map_to_csv(const FieldRef& f, const DimensionMap& map);
std::string verdict_to_csv(const VerdictReport& v);

void write_text_file(const std::filesystem::path& path, const std::string& text);
Json read_json_file(const std::filesystem::path& path);

}  // namespace lfw
