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

#ifndef DATESYNTH_INGESTION_H_
#define DATESYNTH_INGESTION_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "datesynth/document.h"

namespace datesynth {

// Row-major 8-bit intensities, 0 black to 255 white.
struct GrayscaleImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;

  // Throws std::invalid_argument unless pixels.size() == width * height
  // and both dimensions are positive.
  void Validate() const;
  bool operator==(const GrayscaleImage&) const = default;
};

inline constexpr int kDefaultBinarizeThreshold = 100;

// Pixels strictly brighter than threshold become white; darker ones are
// left as they are.
GrayscaleImage binarize(const GrayscaleImage& image,
                        int threshold = kDefaultBinarizeThreshold);

// Binary PGM (P5, maxval 255). Throws std::invalid_argument.
GrayscaleImage read_pgm(std::istream& in);
std::string encode_pgm(const GrayscaleImage& image);

inline constexpr std::string_view kDefaultPrompt = "what text is in this image?";

struct TranscriptionRequest {
  std::vector<std::uint8_t> image;  // encoded page, sent hex-encoded
  std::string prompt{kDefaultPrompt};
};

struct TranscriptionResponse {
  std::string text;
  std::string backend;
};

// {"prompt": ..., "image_hex": ...} and {"text": ..., "backend": ...}.
std::string EncodeRequest(const TranscriptionRequest& request);
TranscriptionRequest DecodeRequest(std::string_view wire);
std::string EncodeResponse(const TranscriptionResponse& response);

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string ImageKey(const std::vector<std::uint8_t>& bytes);

// What a transport reports for one attempt.
class TransportTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class BackendFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adapters for real OCR services implement this: send one wire request,
// return the raw wire response.
class TranscriptionClient {
 public:
  virtual ~TranscriptionClient() = default;
  virtual std::string Send(const std::string& request,
                           std::chrono::milliseconds timeout) = 0;
};

// Answers from canned fixtures keyed by ImageKey of the request image.
// Any endpoint outside the mock:// scheme is treated as unreachable.
class MockTranscriptionClient : public TranscriptionClient {
 public:
  explicit MockTranscriptionClient(std::string endpoint = "mock://fixtures");

  void AddFixture(const std::vector<std::uint8_t>& image, std::string text);
  void AddFixtureByKey(std::string key, std::string text);
  // Served verbatim in place of a well-formed response.
  void AddRawResponse(const std::vector<std::uint8_t>& image, std::string raw);
  // A JSON object of key to text.
  void LoadFixtures(std::istream& in);

  std::size_t calls() const { return calls_; }

  std::string Send(const std::string& request,
                   std::chrono::milliseconds timeout) override;

 private:
  std::string endpoint_;
  std::map<std::string, std::string> texts_;
  std::map<std::string, std::string> raw_;
  std::size_t calls_ = 0;
};

struct TranscriptionConfig {
  std::string endpoint = "mock://fixtures";
  std::chrono::milliseconds timeout{30000};
  // Attempts after the first.
  int retries = 2;
  std::string prompt{kDefaultPrompt};
  // Applied before encoding; negative disables.
  int binarize_threshold = kDefaultBinarizeThreshold;

  void Validate() const;
};

enum class TranscriptionErrorKind { kTimeout, kBackend, kMalformedResponse };

const char* ToString(TranscriptionErrorKind kind);

class TranscriptionError : public std::runtime_error {
 public:
  TranscriptionError(TranscriptionErrorKind kind, int attempts,
                     const std::string& detail);
  TranscriptionErrorKind kind() const { return kind_; }
  int attempts() const { return attempts_; }

 private:
  TranscriptionErrorKind kind_;
  int attempts_;
};

// Timeouts and backend failures are retried up to cfg.retries times; a
// malformed response fails at once.
TranscriptionResponse transcribe(const GrayscaleImage& image,
                                 TranscriptionClient& client,
                                 const TranscriptionConfig& cfg = {});

struct AnnotationLoad {
  std::vector<Annotation> annotations;
  std::size_t records = 0;
  std::size_t missing_parts = 0;  // no month or no year
  std::size_t flagged = 0;        // stored range differs from the parts
  std::size_t malformed = 0;
  std::vector<std::string> messages;

  std::size_t dropped() const { return missing_parts + flagged + malformed; }
};

// Throws std::runtime_error when the file cannot be read or its header is
// wrong; bad records are counted, not fatal. An empty file yields nothing.
AnnotationLoad load_annotations(const std::string& path);
AnnotationLoad load_annotations(std::istream& in);

}  // namespace datesynth

#endif  // DATESYNTH_INGESTION_H_
