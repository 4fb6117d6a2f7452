#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "depflow/errors.hpp"

namespace depflow {

using Json = nlohmann::json;

/// One utterance row of a dataset manifest (line-delimited JSON on disk).
struct UttRecord {
  std::string id;
  std::string subject;
  int speaker = 0;
  std::string split;  // train | dev | test
  double severity_score = 0.0;
  int severity_level = 0;
  int label = 0;  // 1 = depressed (severity_score >= 10)
  std::string sentiment;  // positive | neutral | negative
  std::string frames_path;  // base path, without .f32/.shape extension
  int n_frames = 0;
  std::vector<int> tokens;
  std::vector<int> durations;
  std::map<std::string, double> marker_truth;
  bool synthetic = false;
  std::string source_text_id;
  double condition_severity = -1.0;

  Json to_json() const {
    Json j{{"id", id},
           {"subject", subject},
           {"speaker", speaker},
           {"split", split},
           {"severity_score", severity_score},
           {"severity_level", severity_level},
           {"label", label},
           {"sentiment", sentiment},
           {"frames_path", frames_path},
           {"n_frames", n_frames},
           {"tokens", tokens},
           {"durations", durations}};
    if (!marker_truth.empty()) j["marker_truth"] = marker_truth;
    if (synthetic) {
      j["synthetic"] = true;
      j["source_text_id"] = source_text_id;
      j["condition_severity"] = condition_severity;
    }
    return j;
  }

  static UttRecord from_json(const Json& j) {
    UttRecord r;
    r.id = j.at("id").get<std::string>();
    r.subject = j.at("subject").get<std::string>();
    r.speaker = j.at("speaker").get<int>();
    r.split = j.at("split").get<std::string>();
    r.severity_score = j.at("severity_score").get<double>();
    r.severity_level = j.at("severity_level").get<int>();
    r.label = j.at("label").get<int>();
    r.sentiment = j.at("sentiment").get<std::string>();
    r.frames_path = j.at("frames_path").get<std::string>();
    r.n_frames = j.at("n_frames").get<int>();
    r.tokens = j.value("tokens", std::vector<int>{});
    r.durations = j.value("durations", std::vector<int>{});
    if (j.contains("marker_truth"))
      r.marker_truth = j.at("marker_truth").get<std::map<std::string, double>>();
    r.synthetic = j.value("synthetic", false);
    r.source_text_id = j.value("source_text_id", std::string{});
    r.condition_severity = j.value("condition_severity", -1.0);
    return r;
  }
};

struct DatasetManifest {
  std::vector<UttRecord> records;
  std::uint64_t seed = 0;
  std::string config_digest;

  std::vector<const UttRecord*> split_records(const std::string& split) const {
    std::vector<const UttRecord*> out;
    for (const auto& r : records)
      if (r.split == split) out.push_back(&r);
    return out;
  }

  /// No subject may appear in more than one split.
  void check_split_hygiene() const {
    std::map<std::string, std::string> seen;
    for (const auto& r : records) {
      auto it = seen.find(r.subject);
      if (it == seen.end())
        seen[r.subject] = r.split;
      else if (it->second != r.split)
        throw PreconditionError("subject " + r.subject +
                                " appears in splits " + it->second + " and " +
                                r.split);
    }
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write manifest: " + path);
    Json header{{"kind", "dataset_manifest"},
                {"seed", seed},
                {"config_digest", config_digest},
                {"n_records", records.size()}};
    out << header.dump() << "\n";
    for (const auto& r : records) out << r.to_json().dump() << "\n";
  }

  static DatasetManifest load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read manifest: " + path);
    DatasetManifest m;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      Json j = Json::parse(line);
      if (first && j.value("kind", "") == "dataset_manifest") {
        m.seed = j.at("seed").get<std::uint64_t>();
        m.config_digest = j.value("config_digest", "");
        first = false;
        continue;
      }
      first = false;
      m.records.push_back(UttRecord::from_json(j));
    }
    return m;
  }
};

}  // namespace depflow
