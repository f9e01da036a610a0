#include "wscatter/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace wscatter {

namespace {

using nlohmann::json;

json record_json(const OutputRecord& rec) {
  json j;
  j["axis"] = rec.axis_value;
  j["status"] = rec.status;
  if (rec.outcome) {
    const ScatterOutcome& o = *rec.outcome;
    j["T"] = o.transmission;
    j["reflection"] = o.reflection;
    j["k1"] = o.k1;
    j["k3"] = o.k3;
    j["det_res"] = o.det_residual_max;
    j["symp_res"] = o.symplectic_res;
    j["plateau_res"] = o.plateau_residual_max;
    j["unitarity_defect"] = o.unitarity_defect;
    j["x_range"] = o.x_range;
  } else {
    for (const char* key : {"T", "reflection", "k1", "k3", "det_res",
                            "symp_res", "plateau_res", "unitarity_defect",
                            "x_range"})
      j[key] = nullptr;
  }
  return j;
}

}  // namespace

OutputRecord make_record(double axis_value, const ScatterOutcome& outcome) {
  return OutputRecord{axis_value, outcome, "ok"};
}

OutputRecord make_record(const ScanPoint& point) {
  return OutputRecord{point.axis_value, point.outcome, point.status};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_row(const OutputRecord& rec) {
  std::string row = format_double(rec.axis_value);
  if (rec.outcome) {
    const ScatterOutcome& o = *rec.outcome;
    for (double v : {o.transmission, o.reflection, o.k1, o.k3,
                     o.det_residual_max, o.symplectic_res,
                     o.plateau_residual_max, o.unitarity_defect, o.x_range})
      row += "," + format_double(v);
  } else {
    for (int i = 0; i < 9; ++i) row += ",";
  }
  row += "," + rec.status;
  return row;
}

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& rec : records) {
    out += csv_row(rec);
    out += '\n';
  }
  return out;
}

std::string to_json(const std::map<std::string, std::string>& meta,
                    const std::vector<OutputRecord>& records) {
  json j;
  j["meta"] = json::object();
  for (const auto& [k, v] : meta) j["meta"][k] = v;
  j["meta"]["version"] = kToolVersion;
  j["records"] = json::array();
  for (const auto& rec : records) j["records"].push_back(record_json(rec));
  return j.dump(2) + "\n";
}

std::string peaks_to_csv(const std::vector<ResonancePeak>& peaks) {
  std::string out = "v0,T,half_width,epsilon\n";
  for (const auto& p : peaks) {
    out += format_double(p.v0) + "," + format_double(p.transmission) + "," +
           format_double(p.half_width) + "," + format_double(p.epsilon) + "\n";
  }
  return out;
}

std::string peaks_to_json(const std::map<std::string, std::string>& meta,
                          const std::vector<ResonancePeak>& peaks) {
  json j;
  j["meta"] = json::object();
  for (const auto& [k, v] : meta) j["meta"][k] = v;
  j["meta"]["version"] = kToolVersion;
  j["peaks"] = json::array();
  for (const auto& p : peaks) {
    json pj;
    pj["v0"] = p.v0;
    pj["T"] = p.transmission;
    pj["half_width"] = p.half_width;
    pj["epsilon"] = p.epsilon;
    j["peaks"].push_back(pj);
  }
  return j.dump(2) + "\n";
}

}  // namespace wscatter
