// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "binaura/wav.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>

#include <doctest.h>

#include "fixtures.hpp"
#include "test_util.hpp"

using namespace binaura;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in),
          std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("PCM16 samples scale by 1/32768") {
  testutil::TempDir dir;
  StereoWaveform s;
  s.left.sample_rate = s.right.sample_rate = 16000;
  s.left.samples = {0.5, 0.0};
  s.right.samples = {-0.5, 0.25};
  const std::string path = dir.file("pcm.wav");
  write_wav(path, s, WavEncoding::Pcm16);

  const WavFile file = read_wav(path);
  CHECK(file.descriptor.encoding == WavEncoding::Pcm16);
  CHECK(file.descriptor.channels == 2);
  CHECK(file.descriptor.sample_rate == 16000);
  CHECK(file.descriptor.num_samples == 2);

  const auto& stereo = std::get<StereoWaveform>(file.audio);
  CHECK(stereo.left.samples[0] == 16384.0 / 32768.0);
  CHECK(stereo.right.samples[0] == -16384.0 / 32768.0);
  CHECK(stereo.right.samples[1] == 8192.0 / 32768.0);
}

TEST_CASE("float32 stereo round trip is bit-exact") {
  testutil::TempDir dir;
  const StereoWaveform original = fixtures::random_stereo(2048, 22050, 77);
  const std::string first = dir.file("a.wav");
  write_wav(first, original, WavEncoding::Float32);

  const WavFile once = read_wav(first);
  const auto& a = std::get<StereoWaveform>(once.audio);

  // Values are float32-quantized by the first write; a second round trip
  // must reproduce them exactly.
  const std::string second = dir.file("b.wav");
  write_wav(second, a, WavEncoding::Float32);
  const WavFile twice = read_wav(second);
  const auto& b = std::get<StereoWaveform>(twice.audio);
  CHECK(a.left.samples == b.left.samples);
  CHECK(a.right.samples == b.right.samples);
}

TEST_CASE("writes are deterministic and atomic-style") {
  testutil::TempDir dir;
  const Waveform mono = fixtures::random_waveform(500, 8000, 5);
  const std::string p1 = dir.file("one.wav");
  const std::string p2 = dir.file("two.wav");
  write_wav(p1, mono, WavEncoding::Pcm16);
  write_wav(p2, mono, WavEncoding::Pcm16);
  CHECK(slurp(p1) == slurp(p2));

  CHECK_THROWS_AS(
      write_wav(dir.file("no_dir/out.wav"), mono, WavEncoding::Pcm16),
      IoError);
  CHECK_FALSE(std::filesystem::exists(dir.file("no_dir/out.wav")));
}

TEST_CASE("clipping is clamped and counted") {
  testutil::TempDir dir;
  Waveform loud;
  loud.sample_rate = 16000;
  loud.samples = {0.5, 1.5, -2.0, -0.25};
  const WavWriteResult result =
      write_wav(dir.file("loud.wav"), loud, WavEncoding::Pcm16);
  CHECK(result.clipped_samples == 2);

  const WavFile loud_file = read_wav(dir.file("loud.wav"));
  const auto& w = std::get<Waveform>(loud_file.audio);
  CHECK(w.samples[1] == 32767.0 / 32768.0);
  CHECK(w.samples[2] == -1.0);

  Waveform bad;
  bad.sample_rate = 16000;
  bad.samples = {std::nan("")};
  CHECK_THROWS_AS(write_wav(dir.file("nan.wav"), bad, WavEncoding::Float32),
                  std::invalid_argument);
}

TEST_CASE("silent minimal file survives a round trip") {
  testutil::TempDir dir;
  Waveform silent;
  silent.sample_rate = 16000;
  silent.samples.assign(16, 0.0);
  const WavWriteResult result =
      write_wav(dir.file("silent.wav"), silent, WavEncoding::Pcm16);
  CHECK(result.clipped_samples == 0);
  const WavFile silent_file = read_wav(dir.file("silent.wav"));
  const auto& w = std::get<Waveform>(silent_file.audio);
  CHECK(w.samples == silent.samples);
}

TEST_CASE("truncated payload names expected and actual byte counts") {
  testutil::TempDir dir;
  const Waveform mono = fixtures::random_waveform(256, 16000, 6);
  const std::string path = dir.file("full.wav");
  write_wav(path, mono, WavEncoding::Pcm16);

  std::string bytes = slurp(path);
  bytes.resize(bytes.size() - 100);
  const std::string cut = dir.file("cut.wav");
  std::ofstream(cut, std::ios::binary)
      .write(bytes.data(), static_cast<std::streamsize>(bytes.size()));

  try {
    read_wav(cut);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string message = e.what();
    CHECK(message.find("512") != std::string::npos);  // declared bytes
    CHECK(message.find("412") != std::string::npos);  // remaining bytes
  }
}

TEST_CASE("malformed headers are rejected with offsets") {
  testutil::TempDir dir;

  const std::string not_riff = dir.file("not_riff.wav");
  std::ofstream(not_riff, std::ios::binary).write("JUNKJUNKJUNK", 12);
  CHECK_THROWS_AS(read_wav(not_riff), ParseError);

  // 24-bit PCM is unsupported.
  const Waveform mono = fixtures::random_waveform(64, 16000, 7);
  const std::string path = dir.file("ok.wav");
  write_wav(path, mono, WavEncoding::Pcm16);
  std::string bytes = slurp(path);
  bytes[34] = 24;  // bits-per-sample field inside fmt
  const std::string odd = dir.file("odd.wav");
  std::ofstream(odd, std::ios::binary)
      .write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  try {
    read_wav(odd);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unsupported encoding") !=
          std::string::npos);
  }

  CHECK_THROWS_AS(read_wav(dir.file("missing.wav")), IoError);
}
