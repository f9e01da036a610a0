#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wscatter/resonance.hpp"
#include "wscatter/scattering.hpp"

namespace wscatter {

inline constexpr const char* kToolVersion = "wscatter 1.0.0";

inline constexpr const char* kCsvHeader =
    "axis,T,reflection,k1,k3,det_res,symp_res,plateau_res,unitarity_defect,"
    "x_range,status";

// One row per computed point.  Numeric fields are present iff status == ok.
struct OutputRecord {
  double axis_value = 0.0;
  std::optional<ScatterOutcome> outcome;
  std::string status = "ok";
};

OutputRecord make_record(double axis_value, const ScatterOutcome& outcome);
OutputRecord make_record(const ScanPoint& point);

// Locale-independent "%.12g" formatting.
std::string format_double(double v);

std::string csv_row(const OutputRecord& rec);

// Full CSV document: header line then one row per record.
std::string to_csv(const std::vector<OutputRecord>& records);

// JSON document with a `meta` object (flags echoed plus tool version) and a
// `records` array.  Output is deterministic for identical inputs.
std::string to_json(const std::map<std::string, std::string>& meta,
                    const std::vector<OutputRecord>& records);

std::string peaks_to_csv(const std::vector<ResonancePeak>& peaks);
std::string peaks_to_json(const std::map<std::string, std::string>& meta,
                          const std::vector<ResonancePeak>& peaks);

}  // namespace wscatter
