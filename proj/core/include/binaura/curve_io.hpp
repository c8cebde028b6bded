// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <string>

#include "binaura/metrics.hpp"

namespace binaura {

enum class CurveFormat { Csv, Json };

// Formats with 9 significant digits, always keeping a decimal point (or an
// exponent) so values read back as floating point.
std::string format_decimal(double v);

// Serializes a spatial-perception curve. CSV uses the header
// `time_s,sd_spl_db,direction`; JSON mirrors the same three fields per
// frame under a top-level "frames" array. Written atomically.
void emit_curve(const SpatialCurve& curve, CurveFormat format,
                const std::string& path);

// Serializes a metric report as a flat JSON object. Written atomically.
void emit_report_json(const MetricReport& report, const std::string& path);

}  // namespace binaura
