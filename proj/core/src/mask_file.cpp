// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/mask_file.hpp"

#include <array>
#include <cstring>
#include <fstream>

#include "binaura/errors.hpp"
#include "io_util.hpp"

namespace binaura {

namespace {

constexpr std::array<char, 8> kMagic = {'B', 'I', 'N', 'A', 'U', 'R', 'M', 'K'};
constexpr std::uint32_t kVersion = 1;

// The layout is little-endian; this code assumes a little-endian host (the
// common case for every supported platform).
template <typename T>
void put(std::string& out, T value) {
  const auto* bytes = reinterpret_cast<const char*>(&value);
  out.append(bytes, sizeof(T));
}

template <typename T>
T take(const std::string& in, std::uint64_t& offset) {
  if (offset + sizeof(T) > in.size())
    throw ParseError("mask file truncated", offset);
  T value;
  std::memcpy(&value, in.data() + offset, sizeof(T));
  offset += sizeof(T);
  return value;
}

}  // namespace

void write_mask_file(const std::string& path, const MaskFile& file) {
  file.config.validate();
  std::string bytes;
  bytes.append(kMagic.data(), kMagic.size());
  put<std::uint32_t>(bytes, kVersion);
  put<std::uint32_t>(bytes, static_cast<std::uint32_t>(file.config.sample_rate));
  put<std::uint32_t>(bytes, static_cast<std::uint32_t>(file.config.window_len));
  put<std::uint32_t>(bytes, static_cast<std::uint32_t>(file.config.hop_len));
  put<std::uint32_t>(bytes, static_cast<std::uint32_t>(file.config.fft_size));
  put<std::uint64_t>(bytes, file.segment_samples);
  put<std::uint64_t>(bytes, file.hop_samples);
  put<std::uint64_t>(bytes, file.total_samples);
  put<std::uint32_t>(bytes, static_cast<std::uint32_t>(file.masks.size()));
  put<std::uint32_t>(bytes, 0);  // reserved

  for (std::size_t i = 0; i < file.masks.size(); ++i) {
    const ComplexMask& mask = file.masks[i];
    put<std::uint64_t>(bytes, static_cast<std::uint64_t>(i));
    put<std::uint32_t>(bytes, static_cast<std::uint32_t>(mask.bins()));
    put<std::uint32_t>(bytes, static_cast<std::uint32_t>(mask.frames()));
    for (std::size_t b = 0; b < mask.bins(); ++b) {
      for (std::size_t f = 0; f < mask.frames(); ++f) {
        const auto& v = mask.data.at(b, f);
        put<double>(bytes, v.real());
        put<double>(bytes, v.imag());
      }
    }
  }
  detail::write_atomically(path, bytes);
}

MaskFile read_mask_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open mask file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());

  std::uint64_t offset = 0;
  if (bytes.size() < kMagic.size() ||
      std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0)
    throw ParseError("not a mask file (bad magic)", 0);
  offset = kMagic.size();

  const auto version = take<std::uint32_t>(bytes, offset);
  if (version != kVersion)
    throw ParseError("unsupported mask file version " +
                         std::to_string(version),
                     offset - sizeof(std::uint32_t));

  MaskFile file;
  file.config.sample_rate =
      static_cast<int>(take<std::uint32_t>(bytes, offset));
  file.config.window_len = static_cast<int>(take<std::uint32_t>(bytes, offset));
  file.config.hop_len = static_cast<int>(take<std::uint32_t>(bytes, offset));
  file.config.fft_size = static_cast<int>(take<std::uint32_t>(bytes, offset));
  file.segment_samples = take<std::uint64_t>(bytes, offset);
  file.hop_samples = take<std::uint64_t>(bytes, offset);
  file.total_samples = take<std::uint64_t>(bytes, offset);
  const auto num_windows = take<std::uint32_t>(bytes, offset);
  (void)take<std::uint32_t>(bytes, offset);  // reserved

  try {
    file.config.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid transform configuration: ") +
                         e.what(),
                     kMagic.size() + sizeof(std::uint32_t));
  }

  file.masks.reserve(num_windows);
  for (std::uint32_t i = 0; i < num_windows; ++i) {
    const std::uint64_t record_offset = offset;
    const auto index = take<std::uint64_t>(bytes, offset);
    if (index != i)
      throw ParseError("window record " + std::to_string(i) +
                           " carries index " + std::to_string(index),
                       record_offset);
    const auto bins = take<std::uint32_t>(bytes, offset);
    const auto frames = take<std::uint32_t>(bytes, offset);
    if (bins != static_cast<std::uint32_t>(file.config.bins()))
      throw ParseError("window " + std::to_string(i) + " has " +
                           std::to_string(bins) + " bins, expected " +
                           std::to_string(file.config.bins()),
                       record_offset + sizeof(std::uint64_t));
    const std::uint64_t values =
        static_cast<std::uint64_t>(bins) * frames * 2;
    if (offset + values * sizeof(double) > bytes.size())
      throw ParseError("mask file truncated: expected " +
                           std::to_string(values * sizeof(double)) +
                           " payload bytes for window " + std::to_string(i),
                       offset);
    ComplexMask mask;
    mask.data = ComplexMatrix(bins, frames);
    for (std::uint32_t b = 0; b < bins; ++b) {
      for (std::uint32_t f = 0; f < frames; ++f) {
        const double re = take<double>(bytes, offset);
        const double im = take<double>(bytes, offset);
        mask.data.at(b, f) = {re, im};
      }
    }
    file.masks.push_back(std::move(mask));
  }
  if (offset != bytes.size())
    throw ParseError("trailing bytes after last window record", offset);
  return file;
}

}  // namespace binaura
