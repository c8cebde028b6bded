// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "binaura/audio.hpp"
#include "binaura/errors.hpp"

namespace binaura {

enum class WavEncoding { Pcm16, Float32 };

struct AudioFileDescriptor {
  std::string path;
  WavEncoding encoding = WavEncoding::Pcm16;
  int channels = 0;
  int sample_rate = 0;
  std::size_t num_samples = 0;  // per channel
};

using AudioContent = std::variant<Waveform, StereoWaveform>;

struct WavFile {
  AudioFileDescriptor descriptor;
  AudioContent audio;
};

// Reads a RIFF/WAVE file with PCM16 or IEEE float32 payload, 1 or 2
// channels. PCM16 samples are scaled to [-1, 1) by 1/32768; stereo payloads
// are de-interleaved. Throws ParseError (with byte offset) on malformed
// input and IoError when the file cannot be opened.
WavFile read_wav(const std::string& path);

struct WavWriteResult {
  AudioFileDescriptor descriptor;
  std::size_t clipped_samples = 0;  // samples clamped into [-1, 1)
};

// Writes a WAV file deterministically (identical input gives identical
// bytes). Samples outside [-1, 1) are clamped and counted. The file appears
// atomically (temp file + rename). Throws on non-finite samples or I/O
// failure.
WavWriteResult write_wav(const std::string& path, const AudioContent& audio,
                         WavEncoding encoding);

}  // namespace binaura
