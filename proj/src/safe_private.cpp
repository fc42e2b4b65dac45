#include "deid/safe_private.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "deid/errors.hpp"

namespace deid {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

std::vector<std::string> split_csv_line(std::string_view line) {
  // The KB format has no quoting; the meaning column is last and may not
  // contain commas in the source material we transcode.
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      return out;
    }
    out.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
}

unsigned parse_hex(const std::string& s, const char* what, int line_no) {
  if (s.empty()) {
    throw CsvFormatError(std::string("empty ") + what + " in KB line " +
                         std::to_string(line_no));
  }
  unsigned value = 0;
  for (char c : s) {
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
    else {
      throw CsvFormatError(std::string("bad hex in ") + what + " at KB line " +
                           std::to_string(line_no));
    }
    value = value * 16 + static_cast<unsigned>(digit);
  }
  return value;
}

}  // namespace

SafePrivateKb SafePrivateKb::load(std::string_view csv) {
  SafePrivateKb kb;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto nl = csv.find('\n', start);
    std::string_view line =
        nl == std::string_view::npos ? csv.substr(start) : csv.substr(start, nl - start);
    start = nl == std::string_view::npos ? csv.size() + 1 : nl + 1;
    ++line_no;
    std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (line_no == 1 && trimmed.rfind("private_creator,", 0) == 0) continue;

    auto fields = split_csv_line(trimmed);
    if (fields.size() != 5) {
      throw CsvFormatError("expected 5 columns, got " +
                           std::to_string(fields.size()) + " at KB line " +
                           std::to_string(line_no));
    }
    SafePrivateEntry entry;
    entry.private_creator = fields[0];
    if (entry.private_creator.empty()) {
      throw CsvFormatError("empty private creator at KB line " +
                           std::to_string(line_no));
    }
    unsigned group = parse_hex(fields[1], "group", line_no);
    unsigned offset = parse_hex(fields[2], "element offset", line_no);
    if (group > 0xFFFF || (group & 1u) == 0) {
      throw CsvFormatError("group must be an odd 16-bit value at KB line " +
                           std::to_string(line_no));
    }
    if (offset > 0xFF) {
      throw CsvFormatError("element offset out of [00,FF] at KB line " +
                           std::to_string(line_no));
    }
    entry.group = static_cast<std::uint16_t>(group);
    entry.element_offset = static_cast<std::uint8_t>(offset);
    std::size_t pos = 0;
    const std::string& vrs = fields[3];
    while (pos < vrs.size()) {
      auto sep = vrs.find('/', pos);
      std::string code = sep == std::string::npos ? vrs.substr(pos)
                                                  : vrs.substr(pos, sep - pos);
      if (auto vr = vr_from_code(code)) entry.candidate_vrs.push_back(*vr);
      if (sep == std::string::npos) break;
      pos = sep + 1;
    }
    entry.meaning = fields[4];

    Key key{entry.private_creator, entry.group, entry.element_offset};
    kb.index_[key] = kb.entries_.size();
    kb.entries_.push_back(std::move(entry));
  }
  return kb;
}

SafePrivateKb SafePrivateKb::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DicomError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

bool SafePrivateKb::is_safe(std::string_view creator, Tag tag) const {
  if (!tag.is_private() || tag.is_private_creator()) return false;
  Key key{std::string(creator), tag.group, tag.private_offset()};
  return index_.count(key) != 0;
}

}  // namespace deid
