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

#include "datesynth/records.h"

#include <algorithm>
#include <istream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <ostream>

#include "datesynth/preprocess.h"

namespace datesynth {

namespace {

using Json = nlohmann::ordered_json;

Json PartJson(const PartRange& r) {
  if (r.is_range()) return Json::array({r.first, *r.last});
  return r.first;
}

PartRange PartFrom(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw std::invalid_argument("part range needs 2 values");
    return PartRange(j.at(0).get<int>(), j.at(1).get<int>());
  }
  return PartRange(j.get<int>());
}

Json PartsJson(const DateParts& p) {
  Json j;
  j["day"] = p.day ? PartJson(*p.day) : Json(nullptr);
  j["month"] = PartJson(p.month);
  j["year"] = p.year;
  if (p.ordinal_suffix) j["ordinal_suffix"] = *p.ordinal_suffix;
  if (p.ordinal_suffix_last) j["ordinal_suffix_last"] = *p.ordinal_suffix_last;
  return j;
}

DateParts PartsFrom(const Json& j) {
  DateParts p;
  if (j.contains("day") && !j.at("day").is_null()) p.day = PartFrom(j.at("day"));
  p.month = PartFrom(j.at("month"));
  p.year = j.at("year").get<int>();
  if (j.contains("ordinal_suffix")) {
    p.ordinal_suffix = j.at("ordinal_suffix").get<std::string>();
  }
  if (j.contains("ordinal_suffix_last")) {
    p.ordinal_suffix_last = j.at("ordinal_suffix_last").get<std::string>();
  }
  return p;
}

Json SpanJson(const Span& s) { return Json::array({s.begin, s.end}); }

Span SpanFrom(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("span must be [begin, end]");
  }
  Span s{j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()};
  if (s.end < s.begin) throw std::invalid_argument("span end precedes begin");
  return s;
}

Json Parse(std::string_view line) {
  try {
    return Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

template <typename F>
auto Decoding(F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

std::string Dump(const Json& j) { return j.dump(); }

}  // namespace

std::string_view SchemaName(RecordKind kind) {
  switch (kind) {
    case RecordKind::kCorpus:
      return "datesynth.corpus";
    case RecordKind::kBank:
      return "datesynth.bank";
    case RecordKind::kDetections:
      return "datesynth.detections";
    case RecordKind::kAnnotations:
      return "datesynth.annotations";
    case RecordKind::kPages:
      return "datesynth.pages";
  }
  return "datesynth.unknown";
}

std::string HeaderLine(RecordKind kind, std::optional<Provenance> provenance) {
  Json j;
  j["schema"] = SchemaName(kind);
  j["version"] = kSchemaVersion;
  if (provenance) j["provenance"] = ToString(*provenance);
  return Dump(j);
}

std::string EncodeExample(const RenderedExample& ex) {
  Json j;
  j["text"] = ex.text;
  j["family"] = ToString(ex.family);
  j["parts"] = PartsJson(ex.parts);
  j["start"] = ex.range.start;
  j["end"] = ex.range.end;
  Json spans = Json::array();
  for (const auto& s : ex.part_spans) {
    Json sj;
    sj["part"] = ToString(s.kind);
    sj["begin"] = s.begin;
    sj["end"] = s.end;
    spans.push_back(std::move(sj));
  }
  j["spans"] = std::move(spans);
  return Dump(j);
}

RenderedExample DecodeExample(std::string_view line) {
  const Json j = Parse(line);
  return Decoding([&] {
    RenderedExample ex;
    ex.text = j.at("text").get<std::string>();
    const auto family = ParseFamily(j.at("family").get<std::string>());
    if (!family) throw std::invalid_argument("unknown family");
    ex.family = *family;
    ex.parts = PartsFrom(j.at("parts"));
    ex.range = {j.at("start").get<Seconds>(), j.at("end").get<Seconds>()};
    for (const auto& sj : j.at("spans")) {
      const auto kind = ParsePartKind(sj.at("part").get<std::string>());
      if (!kind) throw std::invalid_argument("unknown part kind");
      ex.part_spans.push_back({*kind, sj.at("begin").get<std::uint32_t>(),
                               sj.at("end").get<std::uint32_t>()});
    }
    return ex;
  });
}

std::string EncodeBankEntry(const RegexEntry& e) {
  Json j;
  j["priority"] = e.priority;
  j["pattern"] = e.pattern;
  j["map"] = SerializeMap(e.extraction_map);
  j["label"] = e.label;
  return Dump(j);
}

RegexEntry DecodeBankEntry(std::string_view line) {
  const Json j = Parse(line);
  return Decoding([&] {
    RegexEntry e;
    e.priority = j.at("priority").get<int>();
    e.pattern = j.at("pattern").get<std::string>();
    e.extraction_map = ParseMap(j.at("map").get<std::vector<std::string>>());
    if (j.contains("label")) e.label = j.at("label").get<std::string>();
    return e;
  });
}

std::string EncodeDetection(const Detection& d, Provenance provenance) {
  Json j;
  j["page_id"] = d.page_id;
  j["span"] = SpanJson(d.span);
  j["matched_text"] = d.matched_text;
  j["parts"] = d.parts ? PartsJson(*d.parts) : Json(nullptr);
  j["start"] = d.range ? Json(d.range->start) : Json(nullptr);
  j["end"] = d.range ? Json(d.range->end) : Json(nullptr);
  j["bank_entry"] = d.bank_entry;
  j["provenance"] = ToString(provenance);
  return Dump(j);
}

Detection DecodeDetection(std::string_view line) {
  const Json j = Parse(line);
  return Decoding([&] {
    Detection d;
    d.page_id = j.at("page_id").get<std::string>();
    d.span = SpanFrom(j.at("span"));
    d.matched_text = j.at("matched_text").get<std::string>();
    if (!j.at("parts").is_null()) d.parts = PartsFrom(j.at("parts"));
    if (!j.at("start").is_null()) {
      d.range = TimestampRange{j.at("start").get<Seconds>(),
                               j.at("end").get<Seconds>()};
    }
    d.bank_entry = j.at("bank_entry").get<int>();
    return d;
  });
}

std::string EncodeAnnotation(const Annotation& a) {
  Json j;
  j["page_id"] = a.page_id;
  j["span"] = a.span ? SpanJson(*a.span) : Json(nullptr);
  j["day"] = a.parts.day ? PartJson(*a.parts.day) : Json(nullptr);
  j["month"] = PartJson(a.parts.month);
  j["year"] = a.parts.year;
  j["start"] = a.start;
  j["end"] = a.end;
  return Dump(j);
}

AnnotationRecord DecodeAnnotation(std::string_view line) {
  const Json j = Parse(line);
  return Decoding([&] {
    AnnotationRecord r;
    r.page_id = j.at("page_id").get<std::string>();
    if (j.contains("span") && !j.at("span").is_null()) {
      r.span = SpanFrom(j.at("span"));
    }
    auto part = [&](const char* key) -> std::optional<PartRange> {
      if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
      return PartFrom(j.at(key));
    };
    r.day = part("day");
    r.month = part("month");
    if (j.contains("year") && !j.at("year").is_null()) {
      r.year = j.at("year").get<int>();
    }
    r.start = j.at("start").get<Seconds>();
    r.end = j.at("end").get<Seconds>();
    return r;
  });
}

std::string EncodePage(const Page& p) {
  Json j;
  j["document_id"] = p.document_id;
  j["page_id"] = p.page_id;
  j["raw_text"] = p.raw_text;
  return Dump(j);
}

Page DecodePage(std::string_view line) {
  const Json j = Parse(line);
  return Decoding([&] {
    Page p;
    p.document_id = j.at("document_id").get<std::string>();
    p.page_id = j.at("page_id").get<std::string>();
    p.raw_text = j.at("raw_text").get<std::string>();
    p.preprocessed_text = preprocess_text(p.raw_text);
    return p;
  });
}

std::optional<Provenance> for_each_record(
    std::istream& in, RecordKind kind,
    const std::function<void(std::string_view, std::size_t)>& visit) {
  std::string line;
  if (!std::getline(in, line)) {
    throw RecordFormatError("missing header record", 1);
  }
  std::optional<Provenance> provenance;
  try {
    const Json h = Json::parse(line);
    if (h.at("schema").get<std::string>() != SchemaName(kind)) {
      throw RecordFormatError("expected schema " + std::string(SchemaName(kind)) +
                                  ", found " + h.at("schema").get<std::string>(),
                              1);
    }
    if (h.at("version").get<int>() != kSchemaVersion) {
      throw RecordFormatError("unsupported schema version", 1);
    }
    if (h.contains("provenance")) {
      provenance = ParseProvenance(h.at("provenance").get<std::string>());
      if (!provenance) throw RecordFormatError("unknown provenance", 1);
    }
  } catch (const nlohmann::json::exception& e) {
    throw RecordFormatError(std::string("bad header: ") + e.what(), 1);
  }
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      visit(line, number);
    } catch (const RecordFormatError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw RecordFormatError(e.what(), number);
    }
  }
  return provenance;
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  out << HeaderLine(RecordKind::kCorpus) << '\n';
  for (const auto& f : corpus.families) {
    for (const auto& ex : f.examples) out << EncodeExample(ex) << '\n';
  }
}

Corpus read_corpus(std::istream& in) {
  Corpus corpus;
  for_each_record(in, RecordKind::kCorpus, [&](std::string_view line, std::size_t) {
    RenderedExample ex = DecodeExample(line);
    auto it = std::find_if(corpus.families.begin(), corpus.families.end(),
                           [&](const FamilyCorpus& f) { return f.family == ex.family; });
    if (it == corpus.families.end()) {
      corpus.families.push_back(
          {ex.family, schema_for(ex.family).extraction_map, {}});
      it = std::prev(corpus.families.end());
    }
    it->examples.push_back(std::move(ex));
  });
  return corpus;
}

void write_bank(std::ostream& out, const RegexBank& bank) {
  out << HeaderLine(RecordKind::kBank, bank.provenance) << '\n';
  for (const auto& e : bank.entries) out << EncodeBankEntry(e) << '\n';
}

RegexBank read_bank(std::istream& in) {
  RegexBank bank;
  const auto provenance = for_each_record(
      in, RecordKind::kBank, [&](std::string_view line, std::size_t) {
        bank.entries.push_back(DecodeBankEntry(line));
      });
  bank.provenance = provenance.value_or(Provenance::kSynthesized);
  return bank;
}

void write_detections(std::ostream& out, const std::vector<Detection>& dets,
                      Provenance provenance) {
  out << HeaderLine(RecordKind::kDetections, provenance) << '\n';
  for (const auto& d : dets) out << EncodeDetection(d, provenance) << '\n';
}

DetectionFile read_detections(std::istream& in) {
  DetectionFile file;
  const auto provenance = for_each_record(
      in, RecordKind::kDetections, [&](std::string_view line, std::size_t) {
        file.detections.push_back(DecodeDetection(line));
      });
  file.provenance = provenance.value_or(Provenance::kSynthesized);
  return file;
}

void write_annotations(std::ostream& out,
                       const std::vector<Annotation>& annotations) {
  out << HeaderLine(RecordKind::kAnnotations) << '\n';
  for (const auto& a : annotations) out << EncodeAnnotation(a) << '\n';
}

void write_pages(std::ostream& out, const std::vector<Page>& pages) {
  out << HeaderLine(RecordKind::kPages) << '\n';
  for (const auto& p : pages) out << EncodePage(p) << '\n';
}

std::vector<Page> read_pages(std::istream& in) {
  std::vector<Page> pages;
  for_each_record(in, RecordKind::kPages, [&](std::string_view line, std::size_t) {
    pages.push_back(DecodePage(line));
  });
  return pages;
}

}  // namespace datesynth
