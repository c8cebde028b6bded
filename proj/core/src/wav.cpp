// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "io_util.hpp"

namespace binaura {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatIeeeFloat = 0x0003;

template <typename T>
T take(const std::string& in, std::uint64_t& offset, const char* what) {
  if (offset + sizeof(T) > in.size())
    throw ParseError(std::string("unexpected end of file reading ") + what,
                     offset);
  T value;
  std::memcpy(&value, in.data() + offset, sizeof(T));
  offset += sizeof(T);
  return value;
}

template <typename T>
void put(std::string& out, T value) {
  const auto* bytes = reinterpret_cast<const char*>(&value);
  out.append(bytes, sizeof(T));
}

bool tag_is(const std::string& in, std::uint64_t offset, const char* tag) {
  return offset + 4 <= in.size() &&
         std::memcmp(in.data() + offset, tag, 4) == 0;
}

struct FmtChunk {
  std::uint16_t format_tag = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits_per_sample = 0;
};

}  // namespace

WavFile read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open WAV file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());

  std::uint64_t offset = 0;
  if (!tag_is(bytes, 0, "RIFF"))
    throw ParseError("missing RIFF tag", 0);
  offset = 4;
  (void)take<std::uint32_t>(bytes, offset, "RIFF size");
  if (!tag_is(bytes, offset, "WAVE"))
    throw ParseError("missing WAVE tag", offset);
  offset += 4;

  FmtChunk fmt;
  bool have_fmt = false;
  std::uint64_t data_offset = 0;
  std::uint32_t data_size = 0;
  bool have_data = false;

  while (offset + 8 <= bytes.size()) {
    const std::uint64_t chunk_header = offset;
    char id[4];
    std::memcpy(id, bytes.data() + offset, 4);
    offset += 4;
    const auto chunk_size = take<std::uint32_t>(bytes, offset, "chunk size");

    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (chunk_size < 16)
        throw ParseError("fmt chunk too small", chunk_header);
      std::uint64_t p = offset;
      fmt.format_tag = take<std::uint16_t>(bytes, p, "format tag");
      fmt.channels = take<std::uint16_t>(bytes, p, "channel count");
      fmt.sample_rate = take<std::uint32_t>(bytes, p, "sample rate");
      (void)take<std::uint32_t>(bytes, p, "byte rate");
      fmt.block_align = take<std::uint16_t>(bytes, p, "block align");
      fmt.bits_per_sample = take<std::uint16_t>(bytes, p, "bits per sample");
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data_offset = offset;
      data_size = chunk_size;
      have_data = true;
      if (data_offset + data_size > bytes.size())
        throw ParseError(
            "data chunk declares " + std::to_string(data_size) +
                " bytes but only " +
                std::to_string(bytes.size() - data_offset) + " are present",
            chunk_header);
    }
    offset += chunk_size + (chunk_size % 2);  // chunks are word-aligned
  }

  if (!have_fmt) throw ParseError("no fmt chunk", bytes.size());
  if (!have_data) throw ParseError("no data chunk", bytes.size());

  WavEncoding encoding;
  if (fmt.format_tag == kFormatPcm && fmt.bits_per_sample == 16) {
    encoding = WavEncoding::Pcm16;
  } else if (fmt.format_tag == kFormatIeeeFloat && fmt.bits_per_sample == 32) {
    encoding = WavEncoding::Float32;
  } else {
    throw ParseError("unsupported encoding (format tag " +
                         std::to_string(fmt.format_tag) + ", " +
                         std::to_string(fmt.bits_per_sample) +
                         " bits); only PCM16 and IEEE float32 are supported",
                     12);
  }
  if (fmt.channels != 1 && fmt.channels != 2)
    throw ParseError("unsupported channel count " +
                         std::to_string(fmt.channels) +
                         "; only mono and stereo are supported",
                     12);
  if (fmt.sample_rate == 0) throw ParseError("zero sample rate", 12);

  const std::uint32_t bytes_per_sample = fmt.bits_per_sample / 8;
  const std::uint32_t frame_bytes = bytes_per_sample * fmt.channels;
  if (fmt.block_align != 0 && fmt.block_align != frame_bytes)
    throw ParseError("block align " + std::to_string(fmt.block_align) +
                         " does not match " + std::to_string(frame_bytes),
                     12);
  if (data_size % frame_bytes != 0)
    throw ParseError("data chunk size " + std::to_string(data_size) +
                         " is not a multiple of the " +
                         std::to_string(frame_bytes) + "-byte frame size",
                     data_offset);

  const std::size_t frames = data_size / frame_bytes;
  std::vector<std::vector<double>> channels(
      fmt.channels, std::vector<double>(frames));
  std::uint64_t p = data_offset;
  for (std::size_t f = 0; f < frames; ++f) {
    for (std::uint16_t c = 0; c < fmt.channels; ++c) {
      double v;
      if (encoding == WavEncoding::Pcm16) {
        const auto s = take<std::int16_t>(bytes, p, "sample");
        v = static_cast<double>(s) / 32768.0;
      } else {
        const auto s = take<float>(bytes, p, "sample");
        if (!std::isfinite(s))
          throw ParseError("non-finite float sample", p - sizeof(float));
        v = static_cast<double>(s);
      }
      channels[c][f] = v;
    }
  }

  WavFile result;
  result.descriptor = {path, encoding, fmt.channels,
                       static_cast<int>(fmt.sample_rate), frames};
  if (fmt.channels == 1) {
    Waveform w;
    w.sample_rate = static_cast<int>(fmt.sample_rate);
    w.samples = std::move(channels[0]);
    result.audio = std::move(w);
  } else {
    StereoWaveform s;
    s.left.sample_rate = s.right.sample_rate =
        static_cast<int>(fmt.sample_rate);
    s.left.samples = std::move(channels[0]);
    s.right.samples = std::move(channels[1]);
    result.audio = std::move(s);
  }
  return result;
}

namespace {

struct InterleavedView {
  const Waveform* channels[2];
  int num_channels;
  std::size_t frames;
  int sample_rate;
};

InterleavedView view_of(const AudioContent& audio) {
  if (const auto* mono = std::get_if<Waveform>(&audio))
    return {{mono, nullptr}, 1, mono->samples.size(), mono->sample_rate};
  const auto& stereo = std::get<StereoWaveform>(audio);
  check_aligned(stereo);
  return {{&stereo.left, &stereo.right}, 2, stereo.size(),
          stereo.sample_rate()};
}

}  // namespace

WavWriteResult write_wav(const std::string& path, const AudioContent& audio,
                         WavEncoding encoding) {
  const InterleavedView view = view_of(audio);
  if (view.sample_rate <= 0)
    throw std::invalid_argument("write_wav: invalid sample rate");

  const std::uint16_t bits = encoding == WavEncoding::Pcm16 ? 16 : 32;
  const std::uint32_t frame_bytes =
      static_cast<std::uint32_t>(view.num_channels) * bits / 8;
  const std::uint64_t payload =
      static_cast<std::uint64_t>(view.frames) * frame_bytes;
  if (payload > 0xFFFFFFFFu - 100)
    throw std::invalid_argument("write_wav: audio too long for RIFF");

  std::string bytes;
  bytes.reserve(64 + payload);
  std::size_t clipped = 0;

  const bool is_float = encoding == WavEncoding::Float32;
  const std::uint32_t fact_bytes = is_float ? 12 : 0;
  const std::uint32_t riff_size =
      4 + (8 + 16) + fact_bytes + 8 + static_cast<std::uint32_t>(payload);

  bytes.append("RIFF", 4);
  put<std::uint32_t>(bytes, riff_size);
  bytes.append("WAVE", 4);

  bytes.append("fmt ", 4);
  put<std::uint32_t>(bytes, 16);
  put<std::uint16_t>(bytes, is_float ? kFormatIeeeFloat : kFormatPcm);
  put<std::uint16_t>(bytes, static_cast<std::uint16_t>(view.num_channels));
  put<std::uint32_t>(bytes, static_cast<std::uint32_t>(view.sample_rate));
  put<std::uint32_t>(bytes,
                     static_cast<std::uint32_t>(view.sample_rate) * frame_bytes);
  put<std::uint16_t>(bytes, static_cast<std::uint16_t>(frame_bytes));
  put<std::uint16_t>(bytes, bits);

  if (is_float) {
    bytes.append("fact", 4);
    put<std::uint32_t>(bytes, 4);
    put<std::uint32_t>(bytes, static_cast<std::uint32_t>(view.frames));
  }

  bytes.append("data", 4);
  put<std::uint32_t>(bytes, static_cast<std::uint32_t>(payload));

  for (std::size_t f = 0; f < view.frames; ++f) {
    for (int c = 0; c < view.num_channels; ++c) {
      const double v = view.channels[c]->samples[f];
      if (!std::isfinite(v))
        throw std::invalid_argument("write_wav: non-finite sample");
      if (encoding == WavEncoding::Pcm16) {
        if (v < -1.0 || v >= 1.0) ++clipped;
        const auto q = static_cast<std::int32_t>(std::lround(v * 32768.0));
        put<std::int16_t>(bytes, static_cast<std::int16_t>(
                                     std::clamp(q, -32768, 32767)));
      } else {
        double w = v;
        if (v < -1.0 || v > 1.0) {
          ++clipped;
          w = std::clamp(v, -1.0, 1.0);
        }
        put<float>(bytes, static_cast<float>(w));
      }
    }
  }

  detail::write_atomically(path, bytes);
  return {{path, encoding, view.num_channels, view.sample_rate, view.frames},
          clipped};
}

}  // namespace binaura
