#include "deid/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "deid/dictionary.hpp"
#include "deid/errors.hpp"

namespace deid {

Charset charset_from_specific_character_set(std::string_view value) {
  // Trim per string-VR conventions.
  while (!value.empty() && (value.back() == ' ' || value.back() == '\0')) {
    value.remove_suffix(1);
  }
  while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
  if (value.empty() || value == "ISO_IR 6" || value == "ISO 2022 IR 6") {
    return Charset::Ascii;
  }
  if (value == "ISO_IR 100" || value == "ISO 2022 IR 100") return Charset::Latin1;
  if (value == "ISO_IR 192") return Charset::Utf8;
  return Charset::Unsupported;
}

std::string charset_to_specific_character_set(Charset cs) {
  switch (cs) {
    case Charset::Ascii: return "";
    case Charset::Latin1: return "ISO_IR 100";
    case Charset::Utf8: return "ISO_IR 192";
    case Charset::Unsupported: return "";
  }
  return "";
}

std::string decode_text(std::string_view bytes, Charset cs) {
  if (cs != Charset::Latin1) {
    // ASCII and UTF-8 pass through; unsupported repertoires stay raw.
    return std::string(bytes);
  }
  std::string out;
  out.reserve(bytes.size());
  for (unsigned char c : bytes) {
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}

std::string encode_text(std::string_view utf8, Charset cs) {
  if (cs != Charset::Latin1) return std::string(utf8);
  std::string out;
  out.reserve(utf8.size());
  for (std::size_t i = 0; i < utf8.size();) {
    unsigned char c = static_cast<unsigned char>(utf8[i]);
    if (c < 0x80) {
      out += static_cast<char>(c);
      ++i;
    } else if ((c & 0xE0) == 0xC0 && i + 1 < utf8.size()) {
      unsigned cp = ((c & 0x1F) << 6) |
                    (static_cast<unsigned char>(utf8[i + 1]) & 0x3F);
      out += cp <= 0xFF ? static_cast<char>(cp) : '?';
      i += 2;
    } else {
      out += '?';  // outside Latin-1
      ++i;
    }
  }
  return out;
}

// -----------------------------------------------------------------------
// DataElement

std::string DataElement::string_value() const {
  std::string s(reinterpret_cast<const char*>(raw.data()), raw.size());
  char pad = vr == VR::UI ? '\0' : ' ';
  while (!s.empty() && (s.back() == pad || s.back() == '\0')) s.pop_back();
  return s;
}

std::vector<std::string> DataElement::string_values() const {
  std::string whole = string_value();
  if (!vr_splits_on_backslash(vr)) return {whole};
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = whole.find('\\', start);
    if (pos == std::string::npos) {
      out.push_back(whole.substr(start));
      break;
    }
    out.push_back(whole.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

void DataElement::set_string(std::string_view value) {
  raw.assign(value.begin(), value.end());
  if (raw.size() % 2 != 0) {
    auto pad = vr_pad_char(vr);
    raw.push_back(static_cast<std::uint8_t>(pad.value_or(' ')));
  }
  items.clear();
  undefined_length = false;
}

void DataElement::set_strings(const std::vector<std::string>& values) {
  std::string joined;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) joined += '\\';
    joined += values[i];
  }
  set_string(joined);
}

std::optional<long long> DataElement::int_value() const {
  std::string s = string_value();
  if (vr == VR::US && raw.size() >= 2) {
    return static_cast<long long>(raw[0] | (raw[1] << 8));
  }
  if (vr == VR::UL && raw.size() >= 4) {
    return static_cast<long long>(raw[0] | (raw[1] << 8) |
                                  (std::uint32_t(raw[2]) << 16) |
                                  (std::uint32_t(raw[3]) << 24));
  }
  if (vr == VR::SS && raw.size() >= 2) {
    return static_cast<std::int16_t>(raw[0] | (raw[1] << 8));
  }
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str()) return std::nullopt;
  return v;
}

bool DataElement::operator==(const DataElement& rhs) const {
  return tag == rhs.tag && vr == rhs.vr && raw == rhs.raw &&
         items == rhs.items && undefined_length == rhs.undefined_length;
}

// -----------------------------------------------------------------------
// DataSet

const DataElement* DataSet::find(Tag tag) const {
  auto it = elements_.find(tag);
  return it == elements_.end() ? nullptr : &it->second;
}

DataElement* DataSet::find(Tag tag) {
  auto it = elements_.find(tag);
  return it == elements_.end() ? nullptr : &it->second;
}

std::optional<std::string> DataSet::set(DataElement element, bool strict) {
  std::optional<std::string> warning;
  if (const DictEntry* entry = dict_lookup(element.tag)) {
    bool ok = entry->vr == element.vr;
    for (VR alt : entry->alternate_vrs) ok = ok || alt == element.vr;
    // UN is how undecodable content travels; not a conflict.
    if (!ok && element.vr != VR::UN) {
      std::string msg = "VR " + std::string(vr_code(element.vr)) + " for " +
                        element.tag.to_string() + " conflicts with dictionary VR " +
                        std::string(vr_code(entry->vr));
      if (strict) throw VrMismatch(msg);
      warning = msg;
    }
  }
  elements_[element.tag] = std::move(element);
  return warning;
}

std::optional<std::string> DataSet::set_string(Tag tag, VR vr,
                                               std::string_view value,
                                               bool strict) {
  DataElement e(tag, vr);
  e.set_string(value);
  return set(std::move(e), strict);
}

std::optional<std::string> DataSet::string_at(Tag tag) const {
  const DataElement* e = find(tag);
  if (!e) return std::nullopt;
  return decode_text(e->string_value(), charset);
}

bool DataSet::operator==(const DataSet& rhs) const {
  return elements_ == rhs.elements_;
}

// -----------------------------------------------------------------------
// Paths and traversal

std::string ElementPath::to_string() const {
  std::string out;
  for (const auto& step : steps) {
    out += step.tag.to_string();
    out += '[';
    out += std::to_string(step.item);
    out += "].";
  }
  out += leaf.to_string();
  return out;
}

std::optional<ElementPath> ElementPath::parse(std::string_view text) {
  ElementPath path;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) return std::nullopt;
    auto tag = Tag::parse(text.substr(pos, close - pos + 1));
    if (!tag) return std::nullopt;
    pos = close + 1;
    if (pos < text.size() && text[pos] == '[') {
      auto end = text.find(']', pos);
      if (end == std::string_view::npos) return std::nullopt;
      std::uint32_t index = 0;
      for (char c : text.substr(pos + 1, end - pos - 1)) {
        if (c < '0' || c > '9') return std::nullopt;
        index = index * 10 + static_cast<std::uint32_t>(c - '0');
      }
      path.steps.push_back({*tag, index});
      pos = end + 1;
      if (pos < text.size() && text[pos] == '.') ++pos;
    } else if (pos >= text.size()) {
      path.leaf = *tag;
      return path;
    } else {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

const DataElement* get_path(const DataSet& ds, const ElementPath& path) {
  const DataSet* current = &ds;
  for (const auto& step : path.steps) {
    const DataElement* seq = current->find(step.tag);
    if (!seq || !seq->is_sequence() || step.item >= seq->items.size()) {
      return nullptr;
    }
    current = &seq->items[step.item];
  }
  return current->find(path.leaf);
}

namespace {

void walk_impl(const DataSet& ds, ElementPath& prefix,
               const std::function<void(const ElementPath&, const DataElement&)>& visit) {
  for (const auto& [tag, element] : ds) {
    prefix.leaf = tag;
    visit(prefix, element);
    if (element.is_sequence()) {
      for (std::uint32_t i = 0; i < element.items.size(); ++i) {
        prefix.steps.push_back({tag, i});
        walk_impl(element.items[i], prefix, visit);
        prefix.steps.pop_back();
      }
    }
  }
}

}  // namespace

void walk(const DataSet& ds,
          const std::function<void(const ElementPath&, const DataElement&)>& visit) {
  ElementPath prefix;
  walk_impl(ds, prefix, visit);
}

}  // namespace deid
