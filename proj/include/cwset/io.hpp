#pragma once

#include "cwset/fourier.hpp"
#include "cwset/groups.hpp"
#include "cwset/tiling.hpp"
#include "cwset/wavelet.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cwset {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending line or field.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kRegionSchema = "cwset.region/1";
inline constexpr const char* kMultisetSchema = "cwset.multiset/1";
inline constexpr const char* kTilingSchema = "cwset.tiling_report/1";
inline constexpr const char* kVerdictSchema = "cwset.wavelet_verdict/1";
inline constexpr const char* kFourierSchema = "cwset.fourier_report/1";
inline constexpr const char* kGroupSchema = "cwset.group/1";

/// {"schema": "cwset.region/1", "pieces": [[["x", "y"], ...], ...]} with
/// coordinates in Scalar text form.
Json region_to_json(const Region& r);
Region region_from_json(const Json& j);
/// Canonical text: two-space indent, trailing newline.
std::string write_region(const Region& r);
Region read_region(std::string_view text);

Json multiset_to_json(const std::vector<Region>& regions);
std::vector<Region> read_multiset(std::string_view text);

Json report_to_json(const TilingReport& r);
Json verdict_to_json(const WaveletVerdict& v);
Json fourier_report_to_json(const FourierCheckReport& r);
/// Lattice basis and coset table of a group.
Json group_to_json(const WallpaperGroup& g);

/// Whole file contents; throws FormatError when unreadable.
std::string read_file(const std::string& path);

}  // namespace cwset
