// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binaura/mask.hpp"
#include "binaura/spectral.hpp"

namespace binaura {

// On-disk container of per-window complex masks, used to feed externally
// generated masks into the binauralization pipeline. Little-endian layout:
//
//   offset size  field
//   0      8     magic "BINAURMK"
//   8      4     u32 version (currently 1)
//   12     4     u32 sample_rate
//   16     4     u32 window_len        (STFT analysis window, samples)
//   20     4     u32 hop_len           (STFT hop, samples)
//   24     4     u32 fft_size
//   28     8     u64 segment_samples   (sliding-window length)
//   36     8     u64 hop_samples       (sliding-window hop)
//   44     8     u64 total_samples     (clip length the plan covers)
//   52     4     u32 num_windows
//   56     4     u32 reserved (0)
//
// followed by num_windows records, each:
//
//   u64 window_index                   (must equal the record's position)
//   u32 bins
//   u32 frames
//   f64 data[bins * frames * 2]        (row-major over bins; re, im pairs)
struct MaskFile {
  StftConfig config;
  std::uint64_t segment_samples = 0;
  std::uint64_t hop_samples = 0;
  std::uint64_t total_samples = 0;
  std::vector<ComplexMask> masks;  // position == window index
};

// Writes atomically (temp file + rename). Throws IoError on failure.
void write_mask_file(const std::string& path, const MaskFile& file);

// Validates magic, version, counts and exact payload size; throws ParseError
// (with the offending byte offset) on malformed input.
MaskFile read_mask_file(const std::string& path);

}  // namespace binaura
