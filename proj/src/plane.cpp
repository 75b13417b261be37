#include "nnic/plane.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

namespace nnic {

namespace {

// Reads one PNM header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) continue;
    tok.push_back(static_cast<char>(c));
    while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#') {
      tok.push_back(static_cast<char>(in.get()));
    }
    return tok;
  }
  return tok;
}

long parse_dim(const std::string& tok, const std::string& what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw FormatError("malformed PNM header: bad " + what);
  }
  long v = std::strtol(tok.c_str(), nullptr, 10);
  if (v <= 0 || v > 1 << 20) {
    throw FormatError("malformed PNM header: bad " + what);
  }
  return v;
}

// Shared P5/P6 loader; `channels` is 1 for PGM, 3 for PPM.
std::vector<uint8_t> load_pnm(const std::string& path, const char* magic,
                              int channels, int& width, int& height) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  if (m0 != magic[0] || m1 != magic[1]) {
    throw FormatError("malformed PNM header: expected " + std::string(magic) +
                      " in " + path);
  }
  long w = parse_dim(next_token(in), "width");
  long h = parse_dim(next_token(in), "height");
  std::string maxval_tok = next_token(in);
  if (maxval_tok.empty() ||
      maxval_tok.find_first_not_of("0123456789") != std::string::npos) {
    throw FormatError("malformed PNM header: bad maxval");
  }
  long maxval = std::strtol(maxval_tok.c_str(), nullptr, 10);
  if (maxval != 255) {
    throw FormatError("unsupported maxval " + maxval_tok + " (want 255)");
  }
  // Exactly one whitespace byte separates the header from the payload.
  int sep = in.get();
  if (sep == EOF || !std::isspace(sep)) {
    throw FormatError("malformed PNM header: missing separator");
  }
  size_t n = static_cast<size_t>(w) * h * channels;
  std::vector<uint8_t> data(n);
  in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(n));
  if (static_cast<size_t>(in.gcount()) != n) {
    throw FormatError("truncated PNM payload in " + path);
  }
  width = static_cast<int>(w);
  height = static_cast<int>(h);
  return data;
}

}  // namespace

LuminancePlane load_pgm(const std::string& path) {
  LuminancePlane plane;
  plane.samples = load_pnm(path, "P5", 1, plane.width, plane.height);
  return plane;
}

void save_pgm(const LuminancePlane& plane, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "P5\n" << plane.width << " " << plane.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(plane.samples.data()),
            static_cast<std::streamsize>(plane.samples.size()));
  if (!out) throw IoError("short write to " + path);
}

LuminancePlane load_ppm_luma(const std::string& path) {
  int w = 0, h = 0;
  std::vector<uint8_t> rgb = load_pnm(path, "P6", 3, w, h);
  LuminancePlane plane(w, h);
  for (size_t i = 0; i < plane.samples.size(); ++i) {
    plane.samples[i] = static_cast<uint8_t>(
        rgb_to_luma(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]));
  }
  return plane;
}

int rgb_to_luma(int r, int g, int b) {
  // BT.601 full-range.
  double y = 0.299 * r + 0.587 * g + 0.114 * b;
  long v = std::lround(y);
  return static_cast<int>(std::clamp(v, 0L, 255L));
}

double psnr(const LuminancePlane& a, const LuminancePlane& b, int peak) {
  if (a.width != b.width || a.height != b.height) {
    throw ContractError("psnr: dimension mismatch");
  }
  double sse = 0.0;
  for (size_t i = 0; i < a.samples.size(); ++i) {
    double d = static_cast<double>(a.samples[i]) - b.samples[i];
    sse += d * d;
  }
  if (sse == 0.0) return std::numeric_limits<double>::infinity();
  double mse = sse / static_cast<double>(a.samples.size());
  return 10.0 * std::log10(static_cast<double>(peak) * peak / mse);
}

uint64_t plane_hash(const LuminancePlane& plane) {
  uint32_t dims[2] = {static_cast<uint32_t>(plane.width),
                      static_cast<uint32_t>(plane.height)};
  uint64_t h = fnv1a64(dims, sizeof(dims));
  return fnv1a64(plane.samples.data(), plane.samples.size(), h);
}

LuminancePlane pad_to_multiple(const LuminancePlane& plane, int multiple) {
  int pw = (plane.width + multiple - 1) / multiple * multiple;
  int ph = (plane.height + multiple - 1) / multiple * multiple;
  if (pw == plane.width && ph == plane.height) return plane;
  LuminancePlane out(pw, ph);
  for (int y = 0; y < ph; ++y) {
    int sy = std::min(y, plane.height - 1);
    for (int x = 0; x < pw; ++x) {
      out.at(x, y) = plane.at(std::min(x, plane.width - 1), sy);
    }
  }
  return out;
}

LuminancePlane crop(const LuminancePlane& plane, int width, int height) {
  if (width > plane.width || height > plane.height) {
    throw ContractError("crop: target exceeds plane");
  }
  if (width == plane.width && height == plane.height) return plane;
  LuminancePlane out(width, height);
  for (int y = 0; y < height; ++y) {
    std::copy_n(&plane.samples[static_cast<size_t>(y) * plane.width], width,
                &out.samples[static_cast<size_t>(y) * width]);
  }
  return out;
}

Corpus load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
  std::vector<std::string> paths;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".pgm") {
      paths.push_back(e.path().string());
    }
  }
  std::sort(paths.begin(), paths.end());
  Corpus corpus;
  for (const auto& p : paths) {
    corpus.entries.emplace_back(fs::path(p).stem().string(), load_pgm(p));
  }
  return corpus;
}

}  // namespace nnic
