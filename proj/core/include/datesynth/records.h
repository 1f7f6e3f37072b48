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

// Line-delimited JSON artifacts. Every file opens with a header record
// naming its schema and version, e.g.
//   {"schema":"datesynth.corpus","version":1}
// followed by one record per line. Field order is fixed, so equal inputs
// serialise to equal bytes.

#ifndef DATESYNTH_RECORDS_H_
#define DATESYNTH_RECORDS_H_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "datesynth/bank.h"
#include "datesynth/corpus.h"
#include "datesynth/document.h"
#include "datesynth/extraction.h"

namespace datesynth {

inline constexpr int kSchemaVersion = 1;

enum class RecordKind { kCorpus, kBank, kDetections, kAnnotations, kPages };

std::string_view SchemaName(RecordKind kind);

class RecordFormatError : public std::runtime_error {
 public:
  RecordFormatError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Header line without the trailing newline. Banks and detections also
// record their provenance.
std::string HeaderLine(RecordKind kind,
                       std::optional<Provenance> provenance = std::nullopt);

// Corpus: text, family, parts, start, end, spans.
std::string EncodeExample(const RenderedExample& example);
RenderedExample DecodeExample(std::string_view line);

// Bank: priority, pattern, map (op strings), label.
std::string EncodeBankEntry(const RegexEntry& entry);
RegexEntry DecodeBankEntry(std::string_view line);

// Detections: page_id, span, matched_text, parts (nullable), start and end
// (nullable), bank_entry, provenance.
std::string EncodeDetection(const Detection& detection, Provenance provenance);
Detection DecodeDetection(std::string_view line);

// Annotations as stored; month or year may be missing in foreign files.
struct AnnotationRecord {
  std::string page_id;
  std::optional<Span> span;
  std::optional<PartRange> day;
  std::optional<PartRange> month;
  std::optional<int> year;
  Seconds start = 0;
  Seconds end = 0;
};

std::string EncodeAnnotation(const Annotation& annotation);
AnnotationRecord DecodeAnnotation(std::string_view line);

// Pages: document_id, page_id, raw_text. The preprocessed text is derived
// on load.
std::string EncodePage(const Page& page);
Page DecodePage(std::string_view line);

// Reads the header, checks schema and version, and hands each following
// non-empty line to visit with its 1-based line number. Returns the
// header's provenance, if any. Throws RecordFormatError.
std::optional<Provenance> for_each_record(
    std::istream& in, RecordKind kind,
    const std::function<void(std::string_view, std::size_t)>& visit);

void write_corpus(std::ostream& out, const Corpus& corpus);
Corpus read_corpus(std::istream& in);

void write_bank(std::ostream& out, const RegexBank& bank);
RegexBank read_bank(std::istream& in);

void write_detections(std::ostream& out, const std::vector<Detection>& dets,
                      Provenance provenance);
struct DetectionFile {
  Provenance provenance = Provenance::kSynthesized;
  std::vector<Detection> detections;
};
DetectionFile read_detections(std::istream& in);

void write_annotations(std::ostream& out,
                       const std::vector<Annotation>& annotations);
void write_pages(std::ostream& out, const std::vector<Page>& pages);
std::vector<Page> read_pages(std::istream& in);

}  // namespace datesynth

#endif  // DATESYNTH_RECORDS_H_
