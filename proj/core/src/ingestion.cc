// Copyright 2026 The Datesynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "datesynth/ingestion.h"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>

#include "datesynth/calendar.h"
#include "datesynth/records.h"

namespace datesynth {

namespace {

using Json = nlohmann::ordered_json;

constexpr char kHex[] = "0123456789abcdef";

std::string ToHex(const std::vector<std::uint8_t>& bytes) {
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out += kHex[b >> 4];
    out += kHex[b & 0xf];
  }
  return out;
}

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<std::uint8_t> FromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd hex length");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = HexDigit(hex[2 * i]);
    const int lo = HexDigit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("bad hex digit");
    out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  return out;
}

// Skips whitespace and '#' comments between PGM header fields.
std::size_t ReadPgmNumber(std::istream& in) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  std::size_t v = 0;
  bool any = false;
  while (c != EOF && std::isdigit(c)) {
    v = v * 10 + static_cast<std::size_t>(c - '0');
    any = true;
    if (v > (1u << 24)) throw std::invalid_argument("PGM dimension too large");
    c = in.get();
  }
  if (!any) throw std::invalid_argument("malformed PGM header");
  return v;
}

bool EndpointReachable(std::string_view endpoint) {
  return endpoint.rfind("mock://", 0) == 0 &&
         endpoint != "mock://unreachable";
}

}  // namespace

void GrayscaleImage::Validate() const {
  if (width == 0 || height == 0) {
    throw std::invalid_argument("image dimensions must be positive");
  }
  if (pixels.size() != width * height) {
    throw std::invalid_argument("pixel count " + std::to_string(pixels.size()) +
                                " does not equal " + std::to_string(width) +
                                "x" + std::to_string(height));
  }
}

GrayscaleImage binarize(const GrayscaleImage& image, int threshold) {
  image.Validate();
  if (threshold < 0 || threshold > 255) {
    throw std::invalid_argument("threshold must lie in [0, 255]");
  }
  GrayscaleImage out = image;
  for (auto& p : out.pixels) {
    if (p > threshold) p = 255;
  }
  return out;
}

GrayscaleImage read_pgm(std::istream& in) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') {
    throw std::invalid_argument("not a binary PGM (P5) image");
  }
  GrayscaleImage img;
  img.width = ReadPgmNumber(in);
  img.height = ReadPgmNumber(in);
  const std::size_t maxval = ReadPgmNumber(in);
  if (maxval != 255) throw std::invalid_argument("PGM maxval must be 255");
  img.pixels.resize(img.width * img.height);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != img.pixels.size()) {
    throw std::invalid_argument("truncated PGM pixel data");
  }
  img.Validate();
  return img;
}

std::string encode_pgm(const GrayscaleImage& image) {
  image.Validate();
  std::string out = "P5\n" + std::to_string(image.width) + " " +
                    std::to_string(image.height) + "\n255\n";
  out.append(image.pixels.begin(), image.pixels.end());
  return out;
}

std::string EncodeRequest(const TranscriptionRequest& request) {
  Json j;
  j["prompt"] = request.prompt;
  j["image_hex"] = ToHex(request.image);
  return j.dump();
}

TranscriptionRequest DecodeRequest(std::string_view wire) {
  try {
    const Json j = Json::parse(wire);
    TranscriptionRequest r;
    r.prompt = j.at("prompt").get<std::string>();
    r.image = FromHex(j.at("image_hex").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad transcription request: ") +
                                e.what());
  }
}

std::string EncodeResponse(const TranscriptionResponse& response) {
  Json j;
  j["text"] = response.text;
  j["backend"] = response.backend;
  return j.dump();
}

std::string ImageKey(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

MockTranscriptionClient::MockTranscriptionClient(std::string endpoint)
    : endpoint_(std::move(endpoint)) {}

void MockTranscriptionClient::AddFixture(const std::vector<std::uint8_t>& image,
                                         std::string text) {
  texts_[ImageKey(image)] = std::move(text);
}

void MockTranscriptionClient::AddFixtureByKey(std::string key, std::string text) {
  texts_[std::move(key)] = std::move(text);
}

void MockTranscriptionClient::AddRawResponse(
    const std::vector<std::uint8_t>& image, std::string raw) {
  raw_[ImageKey(image)] = std::move(raw);
}

void MockTranscriptionClient::LoadFixtures(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad fixture file: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("fixtures must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) {
      throw std::invalid_argument("fixture " + key + " is not a string");
    }
    texts_[key] = value.get<std::string>();
  }
}

std::string MockTranscriptionClient::Send(const std::string& request,
                                          std::chrono::milliseconds timeout) {
  ++calls_;
  if (!EndpointReachable(endpoint_)) {
    throw TransportTimeout("no answer from " + endpoint_ + " within " +
                           std::to_string(timeout.count()) + " ms");
  }
  TranscriptionRequest r;
  try {
    r = DecodeRequest(request);
  } catch (const std::invalid_argument& e) {
    throw BackendFailure(e.what());
  }
  const std::string key = ImageKey(r.image);
  if (const auto it = raw_.find(key); it != raw_.end()) return it->second;
  const auto it = texts_.find(key);
  if (it == texts_.end()) throw BackendFailure("no fixture for image " + key);
  return EncodeResponse({it->second, "mock"});
}

void TranscriptionConfig::Validate() const {
  if (endpoint.empty()) throw std::invalid_argument("endpoint must be set");
  if (timeout.count() <= 0) throw std::invalid_argument("timeout must be positive");
  if (retries < 0) throw std::invalid_argument("retries must be nonnegative");
  if (binarize_threshold > 255) {
    throw std::invalid_argument("binarize threshold must be at most 255");
  }
}

const char* ToString(TranscriptionErrorKind kind) {
  switch (kind) {
    case TranscriptionErrorKind::kTimeout:
      return "timeout";
    case TranscriptionErrorKind::kBackend:
      return "backend-error";
    case TranscriptionErrorKind::kMalformedResponse:
      return "malformed-response";
  }
  return "backend-error";
}

TranscriptionError::TranscriptionError(TranscriptionErrorKind kind,
                                       int attempts, const std::string& detail)
    : std::runtime_error(std::string(ToString(kind)) + " after " +
                         std::to_string(attempts) + " attempt(s): " + detail),
      kind_(kind),
      attempts_(attempts) {}

TranscriptionResponse transcribe(const GrayscaleImage& image,
                                 TranscriptionClient& client,
                                 const TranscriptionConfig& cfg) {
  cfg.Validate();
  const GrayscaleImage page = cfg.binarize_threshold >= 0
                                  ? binarize(image, cfg.binarize_threshold)
                                  : image;
  const std::string pgm = encode_pgm(page);
  TranscriptionRequest request;
  request.image.assign(pgm.begin(), pgm.end());
  request.prompt = cfg.prompt;
  const std::string wire = EncodeRequest(request);

  TranscriptionErrorKind last_kind = TranscriptionErrorKind::kBackend;
  std::string last_detail;
  const int budget = cfg.retries + 1;
  for (int attempt = 1; attempt <= budget; ++attempt) {
    std::string raw;
    try {
      raw = client.Send(wire, cfg.timeout);
    } catch (const TransportTimeout& e) {
      last_kind = TranscriptionErrorKind::kTimeout;
      last_detail = e.what();
      continue;
    } catch (const BackendFailure& e) {
      last_kind = TranscriptionErrorKind::kBackend;
      last_detail = e.what();
      continue;
    }
    try {
      const Json j = Json::parse(raw);
      TranscriptionResponse r;
      r.text = j.at("text").get<std::string>();
      r.backend = j.at("backend").get<std::string>();
      return r;
    } catch (const nlohmann::json::exception& e) {
      throw TranscriptionError(TranscriptionErrorKind::kMalformedResponse,
                               attempt, e.what());
    }
  }
  throw TranscriptionError(last_kind, budget, last_detail);
}

AnnotationLoad load_annotations(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read annotations file " + path);
  return load_annotations(in);
}

AnnotationLoad load_annotations(std::istream& in) {
  AnnotationLoad load;
  if (in.peek() == std::char_traits<char>::eof()) return load;
  for_each_record(
      in, RecordKind::kAnnotations, [&](std::string_view line, std::size_t n) {
        ++load.records;
        const std::string where = "line " + std::to_string(n) + ": ";
        AnnotationRecord r;
        try {
          r = DecodeAnnotation(line);
        } catch (const std::invalid_argument& e) {
          ++load.malformed;
          load.messages.push_back(where + e.what());
          return;
        }
        if (!r.month || !r.year) {
          ++load.missing_parts;
          load.messages.push_back(where + "dropped: no month or year");
          return;
        }
        Annotation a;
        a.page_id = r.page_id;
        a.span = r.span;
        a.parts.day = r.day;
        a.parts.month = *r.month;
        a.parts.year = *r.year;
        a.start = r.start;
        a.end = r.end;
        const auto range = try_range_of(a.parts);
        if (!range || range->start != a.start || range->end != a.end) {
          ++load.flagged;
          load.messages.push_back(where +
                                  "flagged: stored range disagrees with parts");
          return;
        }
        load.annotations.push_back(std::move(a));
      });
  return load;
}

}  // namespace datesynth
