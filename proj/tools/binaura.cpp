// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// Command-line front end: mono mixdown, mask-driven binauralization,
// metric evaluation, spatial-perception curves and self checks.

#include <cmath>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "binaura/curve_io.hpp"
#include "binaura/errors.hpp"
#include "binaura/harness.hpp"
#include "binaura/metrics.hpp"
#include "binaura/wav.hpp"

namespace {

using namespace binaura;

const char* category_of(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse-error";
  if (dynamic_cast<const IoError*>(&e)) return "io-error";
  if (dynamic_cast<const std::invalid_argument*>(&e))
    return "invalid-argument";
  return "runtime-error";
}

WavEncoding parse_encoding(const std::string& name) {
  if (name == "pcm16") return WavEncoding::Pcm16;
  if (name == "float32") return WavEncoding::Float32;
  throw std::invalid_argument("unknown encoding '" + name +
                              "' (expected pcm16 or float32)");
}

StereoWaveform require_stereo(WavFile&& file, const std::string& role) {
  if (auto* s = std::get_if<StereoWaveform>(&file.audio)) return std::move(*s);
  throw std::invalid_argument(role + " must be a stereo file: " +
                              file.descriptor.path);
}

Waveform require_mono(WavFile&& file, const std::string& role) {
  if (auto* w = std::get_if<Waveform>(&file.audio)) return std::move(*w);
  throw std::invalid_argument(role + " must be a mono file: " +
                              file.descriptor.path);
}

void report_clipping(const WavWriteResult& result) {
  if (result.clipped_samples > 0)
    std::cerr << "warning: " << result.clipped_samples
              << " samples clipped while writing " << result.descriptor.path
              << "\n";
}

struct StftFlags {
  int window_len = 400;
  int hop_len = 240;
  int fft_size = 448;

  StftConfig config_for(int rate) const {
    StftConfig cfg{rate, window_len, hop_len, fft_size};
    cfg.validate();
    return cfg;
  }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--window-len", window_len,
                    "Analysis window length in samples");
    cmd->add_option("--hop-len", hop_len, "Analysis hop length in samples");
    cmd->add_option("--fft-size", fft_size, "FFT size in samples");
  }
};

struct MixOptions {
  std::string input;
  std::string output;
  std::string encoding = "float32";
};

int run_mix(const MixOptions& opt) {
  const StereoWaveform stereo = require_stereo(read_wav(opt.input), "input");
  const Waveform mono = mix_to_mono(stereo);
  report_clipping(write_wav(opt.output, mono, parse_encoding(opt.encoding)));
  return 0;
}

struct BinauralizeOptions {
  std::string input;
  std::string output;
  std::string provider;
  std::string truth_path;
  std::string masks_path;
  std::string encoding = "float32";
  double window_s = 1.0;
  double hop_s = 0.1;
  int rate = 0;  // 0 = keep input rate
  bool window_given = false;
  bool hop_given = false;
  StftFlags stft;
};

int run_binauralize(const BinauralizeOptions& opt) {
  Waveform mono = require_mono(read_wav(opt.input), "input");
  if (opt.rate > 0) mono = resample(mono, opt.rate);
  const StftConfig cfg = opt.stft.config_for(mono.sample_rate);

  double window_s = opt.window_s;
  double hop_s = opt.hop_s;
  std::unique_ptr<MaskProvider> provider;
  if (opt.provider == "oracle") {
    if (opt.truth_path.empty())
      throw std::invalid_argument("--provider oracle requires --truth");
    StereoWaveform truth = require_stereo(read_wav(opt.truth_path), "--truth");
    if (opt.rate > 0) {
      truth.left = resample(truth.left, opt.rate);
      truth.right = resample(truth.right, opt.rate);
    }
    if (truth.sample_rate() != mono.sample_rate ||
        truth.size() != mono.samples.size())
      throw std::invalid_argument(
          "--truth must match the mono input in rate and length");
    provider = std::make_unique<OracleMaskProvider>(truth, cfg, window_s,
                                                    hop_s);
  } else if (opt.provider == "zero") {
    provider = std::make_unique<ZeroDifferenceMaskProvider>();
  } else if (opt.provider == "file") {
    if (opt.masks_path.empty())
      throw std::invalid_argument("--provider file requires --masks");
    auto file_provider = std::make_unique<FileMaskProvider>(opt.masks_path);
    // The mask file records its sliding-window geometry; use it unless the
    // flags were given explicitly.
    const MaskFile& mf = file_provider->file();
    if (!opt.window_given && mf.segment_samples > 0)
      window_s = static_cast<double>(mf.segment_samples) / cfg.sample_rate;
    if (!opt.hop_given && mf.hop_samples > 0)
      hop_s = static_cast<double>(mf.hop_samples) / cfg.sample_rate;
    provider = std::move(file_provider);
  } else {
    throw std::invalid_argument("unknown provider '" + opt.provider +
                                "' (expected oracle, zero or file)");
  }

  const StereoWaveform out =
      binauralize(mono, *provider, cfg, window_s, hop_s);
  report_clipping(write_wav(opt.output, out, parse_encoding(opt.encoding)));
  return 0;
}

struct EvaluateOptions {
  std::string real_path;
  std::string pred_path;
  std::string json_path;
  int rate = 0;
  StftFlags stft;
};

int run_evaluate(const EvaluateOptions& opt) {
  StereoWaveform real = require_stereo(read_wav(opt.real_path), "real");
  StereoWaveform pred = require_stereo(read_wav(opt.pred_path), "pred");
  if (opt.rate > 0) {
    real.left = resample(real.left, opt.rate);
    real.right = resample(real.right, opt.rate);
    pred.left = resample(pred.left, opt.rate);
    pred.right = resample(pred.right, opt.rate);
  }
  const StftConfig cfg = opt.stft.config_for(real.sample_rate());
  const MetricReport report = evaluate_all(real, pred, cfg);

  std::cout << "stft_distance: " << format_decimal(report.stft_distance)
            << "\n"
            << "env_distance: " << format_decimal(report.env_distance) << "\n"
            << "wave_l2: " << format_decimal(report.wave_l2) << "\n"
            << "mrstft: " << format_decimal(report.mrstft) << "\n"
            << "mrstft_sc_skipped: "
            << (report.mrstft_sc_skipped ? "true" : "false") << "\n"
            << "snr_db: " << format_decimal(report.snr_db) << "\n"
            << "spl_distance: " << format_decimal(report.spl_distance)
            << "\n";
  if (!opt.json_path.empty()) emit_report_json(report, opt.json_path);
  return 0;
}

struct CurvesOptions {
  std::string input;
  std::string output;
  std::string format;  // empty = infer from extension
  double frame_s = 0.1;
  double hop_s = 0.1;
};

int run_curves(const CurvesOptions& opt) {
  const StereoWaveform stereo = require_stereo(read_wav(opt.input), "input");
  const SpatialCurve curve = spl_curve(stereo, opt.frame_s, opt.hop_s);
  CurveFormat format = CurveFormat::Csv;
  if (opt.format == "json") {
    format = CurveFormat::Json;
  } else if (opt.format == "csv" || opt.format.empty()) {
    if (opt.format.empty() && opt.output.size() >= 5 &&
        opt.output.substr(opt.output.size() - 5) == ".json")
      format = CurveFormat::Json;
  } else {
    throw std::invalid_argument("unknown format '" + opt.format +
                                "' (expected csv or json)");
  }
  emit_curve(curve, format, opt.output);
  return 0;
}

struct RoundtripOptions {
  std::string input;
  StftFlags stft;
};

double interior_relative_rms(const Waveform& a, const Waveform& b,
                             std::size_t margin) {
  const std::size_t len = std::min(a.samples.size(), b.samples.size());
  double err = 0.0, ref = 0.0;
  for (std::size_t i = margin; i + margin < len; ++i) {
    const double d = a.samples[i] - b.samples[i];
    err += d * d;
    ref += a.samples[i] * a.samples[i];
  }
  return ref > 0.0 ? std::sqrt(err / ref) : std::sqrt(err);
}

int run_roundtrip_check(const RoundtripOptions& opt) {
  WavFile file = read_wav(opt.input);
  const int rate = file.descriptor.sample_rate;
  const StftConfig cfg = opt.stft.config_for(rate);
  bool ok = true;

  const auto check = [&ok](const std::string& name, double value,
                           double threshold) {
    const bool pass = value < threshold;
    ok = ok && pass;
    std::cout << name << ": " << format_decimal(value) << " (< "
              << format_decimal(threshold) << ") "
              << (pass ? "PASS" : "FAIL") << "\n";
  };

  const auto stft_roundtrip = [&](const Waveform& w, const std::string& name) {
    if (w.samples.size() < 3 * static_cast<std::size_t>(cfg.window_len))
      throw std::invalid_argument(
          "audio too short for the round-trip check (< 3 windows)");
    const ComplexSpectrogram spec = stft(w, cfg);
    // The frames cover (F-1)*hop + window samples; a clip whose length is
    // off the framing grid leaves a short tail outside the transform.
    const std::size_t covered =
        (spec.frames() - 1) * static_cast<std::size_t>(cfg.hop_len) +
        static_cast<std::size_t>(cfg.window_len);
    const IstftResult r = istft(spec, std::min(w.samples.size(), covered));
    check(name, interior_relative_rms(
                    w, r.audio, static_cast<std::size_t>(cfg.window_len)),
          1e-6);
  };

  if (const auto* stereo = std::get_if<StereoWaveform>(&file.audio)) {
    stft_roundtrip(stereo->left, "stft-roundtrip[left]");
    stft_roundtrip(stereo->right, "stft-roundtrip[right]");

    const Waveform mono = mix_to_mono(*stereo);
    OracleMaskProvider provider(*stereo, cfg);
    const StereoWaveform pred = binauralize(mono, provider, cfg);

    const auto frobenius = [](const ComplexSpectrogram& s) {
      double sum = 0.0;
      for (const auto& v : s.data.flat()) sum += std::norm(v);
      return std::sqrt(sum);
    };
    const double ref_norm =
        frobenius(stft(stereo->left, cfg)) +
        frobenius(stft(stereo->right, cfg));
    const double dist = stft_distance(*stereo, pred, cfg);
    check("oracle-pipeline[stft-relative]",
          ref_norm > 0.0 ? dist / ref_norm : dist, 1e-3);

    double err = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < stereo->size(); ++i) {
      const double dl = stereo->left.samples[i] - pred.left.samples[i];
      const double dr = stereo->right.samples[i] - pred.right.samples[i];
      err += dl * dl + dr * dr;
      ref += stereo->left.samples[i] * stereo->left.samples[i] +
             stereo->right.samples[i] * stereo->right.samples[i];
    }
    check("oracle-pipeline[wave-relative]",
          ref > 0.0 ? std::sqrt(err / ref) : std::sqrt(err), 1e-4);
  } else {
    const Waveform& mono = std::get<Waveform>(file.audio);
    stft_roundtrip(mono, "stft-roundtrip[mono]");

    ZeroDifferenceMaskProvider provider;
    const Waveform remixed =
        mix_to_mono(binauralize(mono, provider, cfg));
    double max_abs = 0.0;
    for (std::size_t i = 0; i < mono.samples.size(); ++i)
      max_abs = std::max(max_abs,
                         std::abs(mono.samples[i] - remixed.samples[i]));
    check("zero-provider-identity[max-abs]", max_abs, 1e-12);
  }

  std::cout << (ok ? "OK" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binaural audio spatialization and evaluation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "binaura 0.1.0");
  app.set_config("--config", "",
                 "Read defaults from a key=value file ([subcommand] sections "
                 "select a command's options)");

  MixOptions mix_opt;
  CLI::App* mix_cmd =
      app.add_subcommand("mix", "Mix a stereo file down to mono (L + R)");
  mix_cmd->add_option("input", mix_opt.input, "Stereo WAV file")->required();
  mix_cmd->add_option("-o,--output", mix_opt.output, "Output mono WAV")
      ->required();
  mix_cmd->add_option("--encoding", mix_opt.encoding,
                      "Output encoding: float32 (default) or pcm16");

  BinauralizeOptions bin_opt;
  CLI::App* bin_cmd = app.add_subcommand(
      "binauralize", "Generate stereo from mono via sliding-window masks");
  bin_cmd->add_option("input", bin_opt.input, "Mono WAV file")->required();
  bin_cmd->add_option("--provider", bin_opt.provider,
                      "Mask source: oracle, zero or file")
      ->required();
  bin_cmd->add_option("--truth", bin_opt.truth_path,
                      "Reference stereo WAV (oracle provider)");
  bin_cmd->add_option("--masks", bin_opt.masks_path,
                      "Mask container file (file provider)");
  bin_cmd->add_option("-o,--output", bin_opt.output, "Output stereo WAV")
      ->required();
  CLI::Option* win_opt = bin_cmd->add_option(
      "--window", bin_opt.window_s, "Sliding window length in seconds");
  CLI::Option* hop_opt = bin_cmd->add_option("--hop", bin_opt.hop_s,
                                             "Sliding hop in seconds");
  bin_cmd->add_option("--rate", bin_opt.rate,
                      "Resample inputs to this rate first");
  bin_cmd->add_option("--encoding", bin_opt.encoding,
                      "Output encoding: float32 (default) or pcm16");
  bin_opt.stft.add_to(bin_cmd);

  EvaluateOptions eval_opt;
  CLI::App* eval_cmd = app.add_subcommand(
      "evaluate", "Print the metric report for a real/predicted stereo pair");
  eval_cmd->add_option("real", eval_opt.real_path, "Reference stereo WAV")
      ->required();
  eval_cmd->add_option("pred", eval_opt.pred_path, "Predicted stereo WAV")
      ->required();
  eval_cmd->add_option("--json", eval_opt.json_path,
                       "Also write the report as JSON");
  eval_cmd->add_option("--rate", eval_opt.rate,
                       "Resample inputs to this rate first");
  eval_opt.stft.add_to(eval_cmd);

  CurvesOptions curves_opt;
  CLI::App* curves_cmd = app.add_subcommand(
      "curves", "Emit the spatial-perception (SPL difference) curve");
  curves_cmd->add_option("input", curves_opt.input, "Stereo WAV file")
      ->required();
  curves_cmd->add_option("--frame", curves_opt.frame_s,
                         "Frame length in seconds");
  curves_cmd->add_option("--hop", curves_opt.hop_s, "Frame hop in seconds");
  curves_cmd->add_option("--format", curves_opt.format,
                         "csv or json (default: by output extension)");
  curves_cmd->add_option("-o,--output", curves_opt.output, "Output path")
      ->required();

  RoundtripOptions rt_opt;
  CLI::App* rt_cmd = app.add_subcommand(
      "roundtrip-check",
      "Run transform round-trip and oracle-pipeline self tests");
  rt_cmd->add_option("input", rt_opt.input, "WAV file")->required();
  rt_opt.stft.add_to(rt_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: usage: " << e.what() << std::endl;
    return e.get_exit_code();
  }

  bin_opt.window_given = win_opt->count() > 0;
  bin_opt.hop_given = hop_opt->count() > 0;

  try {
    if (mix_cmd->parsed()) return run_mix(mix_opt);
    if (bin_cmd->parsed()) return run_binauralize(bin_opt);
    if (eval_cmd->parsed()) return run_evaluate(eval_opt);
    if (curves_cmd->parsed()) return run_curves(curves_opt);
    if (rt_cmd->parsed()) return run_roundtrip_check(rt_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << category_of(e) << ": " << e.what() << std::endl;
    return 1;
  }
  return 0;
}
