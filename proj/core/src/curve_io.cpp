// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/curve_io.hpp"

#include <cstdio>
#include <stdexcept>

#include "io_util.hpp"

namespace binaura {

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void emit_curve(const SpatialCurve& curve, CurveFormat format,
                const std::string& path) {
  if (curve.frame_times.size() != curve.values.size())
    throw std::invalid_argument("emit_curve: malformed curve");

  std::string out;
  if (format == CurveFormat::Csv) {
    out += "time_s,sd_spl_db,direction\n";
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
      out += format_decimal(curve.frame_times[i]);
      out += ',';
      out += format_decimal(curve.values[i]);
      out += ',';
      out += to_string(direction(curve.values[i]));
      out += '\n';
    }
  } else {
    out += "{\"frames\":[";
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
      if (i > 0) out += ',';
      out += "\n  {\"time_s\":";
      out += format_decimal(curve.frame_times[i]);
      out += ",\"sd_spl_db\":";
      out += format_decimal(curve.values[i]);
      out += ",\"direction\":\"";
      out += to_string(direction(curve.values[i]));
      out += "\"}";
    }
    out += curve.values.empty() ? "]}\n" : "\n]}\n";
  }
  detail::write_atomically(path, out);
}

void emit_report_json(const MetricReport& report, const std::string& path) {
  std::string out = "{\n";
  out += "  \"stft_distance\": " + format_decimal(report.stft_distance) + ",\n";
  out += "  \"env_distance\": " + format_decimal(report.env_distance) + ",\n";
  out += "  \"wave_l2\": " + format_decimal(report.wave_l2) + ",\n";
  out += "  \"mrstft\": " + format_decimal(report.mrstft) + ",\n";
  out += std::string("  \"mrstft_sc_skipped\": ") +
         (report.mrstft_sc_skipped ? "true" : "false") + ",\n";
  out += "  \"snr_db\": " + format_decimal(report.snr_db) + ",\n";
  out += "  \"spl_distance\": " + format_decimal(report.spl_distance) + "\n";
  out += "}\n";
  detail::write_atomically(path, out);
}

}  // namespace binaura
