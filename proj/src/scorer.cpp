#include "deid/scorer.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <cmath>
#include <sstream>

#include "deid/codec.hpp"
#include "deid/errors.hpp"

namespace deid {

std::string_view score_category_name(ScoreCategory c) {
  switch (c) {
    case ScoreCategory::Remove: return "remove";
    case ScoreCategory::Retain: return "retain";
    case ScoreCategory::ReplaceDummy: return "replace_dummy";
    case ScoreCategory::RemapUid: return "remap_uid";
    case ScoreCategory::TextRemove: return "text_remove";
    case ScoreCategory::TextRetain: return "text_retain";
    case ScoreCategory::DateAction: return "date_action";
  }
  return "?";
}

std::optional<ScoreCategory> score_category_parse(std::string_view text) {
  if (text == "remove") return ScoreCategory::Remove;
  if (text == "retain") return ScoreCategory::Retain;
  if (text == "replace_dummy") return ScoreCategory::ReplaceDummy;
  if (text == "remap_uid") return ScoreCategory::RemapUid;
  if (text == "text_remove") return ScoreCategory::TextRemove;
  if (text == "text_retain") return ScoreCategory::TextRetain;
  if (text == "date_action") return ScoreCategory::DateAction;
  return std::nullopt;
}

std::vector<AnswerKeyEntry> load_answer_key(std::string_view csv) {
  std::vector<AnswerKeyEntry> entries;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto nl = csv.find('\n', start);
    std::string line(nl == std::string_view::npos ? csv.substr(start)
                                                  : csv.substr(start, nl - start));
    start = nl == std::string_view::npos ? csv.size() + 1 : nl + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line_no == 1 && line.rfind("original_sop_instance_uid", 0) == 0) continue;

    // First three fields cannot contain commas; the expected field may.
    auto c1 = line.find(',');
    auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    auto c3 = c2 == std::string::npos ? std::string::npos : line.find(',', c2 + 1);
    if (c3 == std::string::npos) {
      throw CsvFormatError("answer key line " + std::to_string(line_no) +
                           ": expected 4 columns");
    }
    AnswerKeyEntry entry;
    entry.instance_uid = line.substr(0, c1);
    auto path = ElementPath::parse(line.substr(c1 + 1, c2 - c1 - 1));
    if (!path) {
      throw CsvFormatError("answer key line " + std::to_string(line_no) +
                           ": bad tag path");
    }
    entry.path = *path;
    std::string category = line.substr(c2 + 1, c3 - c2 - 1);
    auto parsed = score_category_parse(category);
    if (!parsed) {
      throw UnknownCategory("answer key line " + std::to_string(line_no) +
                            ": unknown category '" + category + "'");
    }
    entry.category = *parsed;
    entry.expected = line.substr(c3 + 1);
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<AnswerKeyEntry> load_answer_key_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DicomError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_answer_key(ss.str());
}

std::size_t ScoreReport::total_pass() const {
  std::size_t n = 0;
  for (const auto& [cat, score] : categories) n += score.instance_pass;
  return n;
}

std::size_t ScoreReport::total_fail() const {
  std::size_t n = 0;
  for (const auto& [cat, score] : categories) n += score.instance_fail;
  return n;
}

double ScoreReport::overall_percent() const {
  std::size_t pass = total_pass();
  std::size_t total = pass + total_fail();
  if (total == 0) return 100.0;
  double pct = 100.0 * static_cast<double>(pass) / static_cast<double>(total);
  // Rendered and compared at two decimal places.
  return std::round(pct * 100.0) / 100.0;
}

std::string ScoreReport::render_table() const {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-16s %10s %10s %10s %10s %9s\n", "category",
                "inst pass", "inst fail", "ser pass", "ser fail", "pct");
  out << buf;
  for (const auto& [cat, s] : categories) {
    std::size_t total = s.instance_pass + s.instance_fail;
    double pct = total == 0 ? 100.0
                            : 100.0 * static_cast<double>(s.instance_pass) /
                                  static_cast<double>(total);
    std::snprintf(buf, sizeof(buf), "%-16s %10zu %10zu %10zu %10zu %8.2f%%\n",
                  std::string(score_category_name(cat)).c_str(), s.instance_pass,
                  s.instance_fail, s.series_pass, s.series_fail, pct);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), "overall: %.2f%% (%zu/%zu)\n", overall_percent(),
                total_pass(), total_pass() + total_fail());
  out << buf;
  return out.str();
}

std::string ScoreReport::render_machine() const {
  std::ostringstream out;
  for (const auto& [cat, s] : categories) {
    std::size_t itotal = s.instance_pass + s.instance_fail;
    double ipct = itotal == 0 ? 100.0
                              : 100.0 * static_cast<double>(s.instance_pass) /
                                    static_cast<double>(itotal);
    std::size_t stotal = s.series_pass + s.series_fail;
    double spct = stotal == 0 ? 100.0
                              : 100.0 * static_cast<double>(s.series_pass) /
                                    static_cast<double>(stotal);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s\tinstance\t%zu\t%zu\t%.2f\n",
                  std::string(score_category_name(cat)).c_str(), s.instance_pass,
                  s.instance_fail, ipct);
    out << buf;
    std::snprintf(buf, sizeof(buf), "%s\tseries\t%zu\t%zu\t%.2f\n",
                  std::string(score_category_name(cat)).c_str(), s.series_pass,
                  s.series_fail, spct);
    out << buf;
  }
  char buf[80];
  std::snprintf(buf, sizeof(buf), "overall\t\t%zu\t%zu\t%.2f\n", total_pass(),
                total_fail(), overall_percent());
  out << buf;
  return out.str();
}

namespace {

std::string normalize_ws(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out += c;
    }
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find('|', start);
    std::string token(pos == std::string_view::npos ? s.substr(start)
                                                    : s.substr(start, pos - start));
    if (!token.empty()) out.push_back(token);
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

struct Judged {
  bool pass;
  std::string detail;
};

Judged judge(const AnswerKeyEntry& entry, const DataSet& ds, const UidMap& map) {
  const DataElement* element = get_path(ds, entry.path);
  std::string value = element ? decode_text(element->string_value(), ds.charset) : "";

  switch (entry.category) {
    case ScoreCategory::Remove: {
      bool pass = !element || element->empty();
      return {pass, pass ? "" : "value still present"};
    }
    case ScoreCategory::Retain: {
      bool pass = element && element->string_value() == entry.expected;
      return {pass, pass ? "" : "expected value missing or altered"};
    }
    case ScoreCategory::TextRetain: {
      bool pass = element && normalize_ws(value) == normalize_ws(entry.expected);
      return {pass, pass ? "" : "retained text does not match"};
    }
    case ScoreCategory::TextRemove: {
      if (!element) return {true, ""};
      std::string haystack = lower(value);
      for (const std::string& token : split_tokens(entry.expected)) {
        if (haystack.find(lower(token)) != std::string::npos) {
          return {false, "PHI token still present"};
        }
      }
      return {true, ""};
    }
    case ScoreCategory::ReplaceDummy: {
      bool pass = element && !element->empty() &&
                  element->string_value() != entry.expected;
      return {pass, pass ? "" : "dummy replacement missing"};
    }
    case ScoreCategory::RemapUid: {
      if (!element) return {false, "element absent"};
      std::string now = element->string_value();
      if (now == entry.expected) return {false, "original UID retained"};
      if (auto mapped = map.lookup(entry.expected); mapped && *mapped != now) {
        return {false, "UID inconsistent with shared map"};
      }
      return {true, ""};
    }
    case ScoreCategory::DateAction: {
      bool pass = element && element->string_value() == entry.expected;
      return {pass, pass ? "" : "date policy result mismatch"};
    }
  }
  return {false, "unhandled category"};
}

}  // namespace

ScoreReport score(const std::string& outputs_dir,
                  const std::vector<AnswerKeyEntry>& key, const UidMap& map) {
  namespace fs = std::filesystem;

  // Index the output tree by SOPInstanceUID.
  std::map<std::string, DicomObject> by_sop;
  std::map<std::string, std::string> series_of;
  if (fs::exists(outputs_dir)) {
    for (const auto& entry : fs::recursive_directory_iterator(outputs_dir)) {
      if (!entry.is_regular_file()) continue;
      std::ifstream in(entry.path(), std::ios::binary);
      std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                      std::istreambuf_iterator<char>());
      try {
        DicomObject obj = parse_file(bytes);
        std::string sop;
        if (auto e = obj.dataset.find(Tag{0x0008, 0x0018})) sop = e->string_value();
        if (sop.empty()) continue;
        std::string series;
        if (auto e = obj.dataset.find(Tag{0x0020, 0x000E})) series = e->string_value();
        series_of[sop] = series;
        by_sop.emplace(std::move(sop), std::move(obj));
      } catch (const DicomError&) {
        continue;  // non-DICOM files in the tree are not ours to judge
      }
    }
  }

  ScoreReport report;
  // series uid -> category -> any-member-failed
  std::map<std::string, std::map<ScoreCategory, bool>> series_failed;
  std::map<std::string, std::set<ScoreCategory>> series_seen;

  for (const AnswerKeyEntry& entry : key) {
    std::string target = map.lookup(entry.instance_uid).value_or(entry.instance_uid);
    auto it = by_sop.find(target);

    Judged result{false, "output instance missing"};
    std::string series;
    if (it != by_sop.end()) {
      result = judge(entry, it->second.dataset, map);
      series = series_of[target];
    }

    CategoryScore& cat = report.categories[entry.category];
    if (result.pass) {
      ++cat.instance_pass;
    } else {
      ++cat.instance_fail;
      report.failures.push_back({entry, series, result.detail});
    }
    series_seen[series].insert(entry.category);
    if (!result.pass) series_failed[series][entry.category] = true;
  }

  // A series fails a category iff any member instance fails it.
  for (const auto& [series, cats] : series_seen) {
    for (ScoreCategory cat : cats) {
      bool failed = series_failed.count(series) && series_failed[series].count(cat) &&
                    series_failed[series][cat];
      if (failed) {
        ++report.categories[cat].series_fail;
      } else {
        ++report.categories[cat].series_pass;
      }
    }
  }
  return report;
}

}  // namespace deid
