#include "deid/codec.hpp"

#include <cstring>

#include "deid/dictionary.hpp"
#include "deid/errors.hpp"
#include "deid/uid_map.hpp"

namespace deid {

namespace {

constexpr std::uint32_t kUndefinedLength = 0xFFFFFFFF;

// Our implementation identity for synthesized file meta.
constexpr const char* kImplementationClassUid = "2.25.309842337183362913581963948021677";
constexpr const char* kImplementationVersion = "DEID_01";

struct Reader {
  std::span<const std::uint8_t> data;
  std::size_t pos = 0;

  std::size_t remaining() const { return data.size() - pos; }

  std::uint16_t u16() {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>(data[pos] | (data[pos + 1] << 8));
    pos += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = data[pos] | (std::uint32_t(data[pos + 1]) << 8) |
                      (std::uint32_t(data[pos + 2]) << 16) |
                      (std::uint32_t(data[pos + 3]) << 24);
    pos += 4;
    return v;
  }
  Tag tag() {
    std::uint16_t g = u16();
    std::uint16_t e = u16();
    return Tag{g, e};
  }
  Tag peek_tag() const {
    if (remaining() < 4) throw TruncatedElement("truncated tag");
    return Tag{static_cast<std::uint16_t>(data[pos] | (data[pos + 1] << 8)),
               static_cast<std::uint16_t>(data[pos + 2] | (data[pos + 3] << 8))};
  }
  std::vector<std::uint8_t> bytes(std::size_t n) {
    need(n);
    std::vector<std::uint8_t> out(data.begin() + pos, data.begin() + pos + n);
    pos += n;
    return out;
  }
  void need(std::size_t n) const {
    if (remaining() < n) {
      throw TruncatedElement("element extends past end of data at offset " +
                             std::to_string(pos));
    }
  }
};

struct ParserState {
  const ParseLimits& limits;
  bool explicit_vr = true;
  bool opaque_pixel_ok = false;  // non-native syntaxes carry pixel data opaquely
};

DataSet parse_dataset(Reader& r, std::size_t end, ParserState& st, unsigned depth);

void check_length(std::uint32_t len, const Tag& tag, const Reader& r,
                  const ParserState& st) {
  if (len > st.limits.max_element_length) {
    throw MalformedFile("element " + tag.to_string() + " length exceeds limit");
  }
  if (len > r.remaining()) {
    throw TruncatedElement("element " + tag.to_string() + " value truncated");
  }
  if (len % 2 != 0) {
    throw UnevenLength("element " + tag.to_string() + " has odd length " +
                       std::to_string(len));
  }
}

// Sequence items until `end` (defined length) or the sequence delimiter.
void parse_items(Reader& r, std::size_t end, ParserState& st, unsigned depth,
                 DataElement& element) {
  bool undefined = end == std::string::npos;
  while (true) {
    if (!undefined && r.pos >= end) break;
    Tag t = r.tag();
    std::uint32_t len = r.u32();
    if (t == kSequenceDelimiterTag) {
      if (!undefined) {
        throw MalformedFile("sequence delimiter inside defined-length sequence");
      }
      break;
    }
    if (t != kItemTag) {
      throw MalformedFile("expected item tag in sequence, got " + t.to_string());
    }
    if (depth + 1 > st.limits.max_depth) {
      throw NestingTooDeep("sequence nesting exceeds depth limit " +
                           std::to_string(st.limits.max_depth));
    }
    DataSet item;
    if (len == kUndefinedLength) {
      item = parse_dataset(r, std::string::npos, st, depth + 1);
      item.undefined_length_item = true;
    } else {
      if (len > r.remaining()) throw TruncatedElement("item value truncated");
      item = parse_dataset(r, r.pos + len, st, depth + 1);
      item.undefined_length_item = false;
    }
    element.items.push_back(std::move(item));
  }
}

// Flat undefined-length region (encapsulated pixel stream): defined-length
// items followed by the sequence delimiter, captured byte-exactly.
std::vector<std::uint8_t> capture_opaque_region(Reader& r) {
  std::size_t start = r.pos;
  while (true) {
    Tag t = r.tag();
    std::uint32_t len = r.u32();
    if (t == kSequenceDelimiterTag) {
      if (len != 0) throw MalformedFile("sequence delimiter with nonzero length");
      std::size_t content_end = r.pos - 8;
      return std::vector<std::uint8_t>(r.data.begin() + start,
                                       r.data.begin() + content_end);
    }
    if (t != kItemTag || len == kUndefinedLength) {
      throw MalformedFile("unsupported structure in undefined-length value");
    }
    r.need(len);
    r.pos += len;
  }
}

DataElement parse_element(Reader& r, ParserState& st, unsigned depth, Tag tag) {
  DataElement element(tag, VR::UN);
  std::uint32_t len = 0;

  if (st.explicit_vr) {
    r.need(2);
    char code[3] = {static_cast<char>(r.data[r.pos]),
                    static_cast<char>(r.data[r.pos + 1]), 0};
    r.pos += 2;
    auto vr = vr_from_code(code);
    if (!vr) {
      throw MalformedFile("unrecognized VR '" + std::string(code) + "' at " +
                          tag.to_string());
    }
    element.vr = *vr;
    if (vr_uses_long_form(*vr)) {
      r.u16();  // reserved
      len = r.u32();
    } else {
      len = r.u16();
    }
  } else {
    len = r.u32();
    if (len == kUndefinedLength) {
      // Only sequences may be undefined-length in the implicit syntax.
      element.vr = VR::SQ;
    } else {
      element.vr = dict_vr(tag);  // UN for unknown/private, never re-guessed
    }
  }

  if (element.vr == VR::SQ) {
    if (len == kUndefinedLength) {
      element.undefined_length = true;
      parse_items(r, std::string::npos, st, depth, element);
    } else {
      if (len > r.remaining()) throw TruncatedElement("sequence truncated");
      parse_items(r, r.pos + len, st, depth, element);
    }
    return element;
  }

  if (len == kUndefinedLength) {
    bool opaque_allowed =
        element.vr == VR::OB || element.vr == VR::OW || element.vr == VR::UN;
    if (!opaque_allowed) {
      throw MalformedFile("undefined length on non-sequence " + tag.to_string());
    }
    if (tag == Tag{0x7FE0, 0x0010} && !st.opaque_pixel_ok) {
      throw MalformedFile("encapsulated pixel data in a native transfer syntax");
    }
    element.undefined_length = true;
    element.raw = capture_opaque_region(r);
    return element;
  }

  check_length(len, tag, r, st);
  element.raw = r.bytes(len);
  return element;
}

DataSet parse_dataset(Reader& r, std::size_t end, ParserState& st, unsigned depth) {
  DataSet ds;
  while (true) {
    if (end == std::string::npos) {
      if (r.remaining() == 0) break;
      Tag probe = r.peek_tag();
      if (probe == kItemDelimiterTag) {
        r.tag();
        if (r.u32() != 0) throw MalformedFile("item delimiter with nonzero length");
        break;
      }
    } else {
      if (r.pos >= end) {
        if (r.pos > end) throw MalformedFile("element overran enclosing length");
        break;
      }
    }
    Tag tag = r.tag();
    DataElement element = parse_element(r, st, depth, tag);
    ds.set(std::move(element));
  }
  return ds;
}

void assign_charsets(DataSet& ds, Charset inherited) {
  Charset cs = inherited;
  if (auto* scs = ds.find(Tag{0x0008, 0x0005})) {
    cs = charset_from_specific_character_set(scs->string_value());
  }
  ds.charset = cs;
  for (auto& [tag, element] : ds) {
    for (auto& item : element.items) assign_charsets(item, cs);
  }
}

// ---------------------------------------------------------------------
// Writer

struct Writer {
  std::vector<std::uint8_t> out;

  void u16(std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 24));
  }
  void tag(Tag t) {
    u16(t.group);
    u16(t.element);
  }
  void bytes(const std::vector<std::uint8_t>& b) {
    out.insert(out.end(), b.begin(), b.end());
  }
  void bytes(const Writer& w) { out.insert(out.end(), w.out.begin(), w.out.end()); }
};

void validate_string_lengths(const DataElement& e) {
  if (!vr_is_string(e.vr)) return;
  std::size_t limit = vr_max_value_length(e.vr);
  if (limit == 0) return;
  for (const std::string& value : e.string_values()) {
    if (value.size() > limit) {
      throw ValueTooLong(e.tag.to_string() + " " + std::string(vr_code(e.vr)) +
                         " value of " + std::to_string(value.size()) +
                         " chars exceeds " + std::to_string(limit));
    }
  }
}

std::vector<std::uint8_t> padded_payload(const DataElement& e) {
  std::vector<std::uint8_t> payload = e.raw;
  if (payload.size() % 2 != 0) {
    auto pad = vr_pad_char(e.vr);
    if (!pad) {
      throw OddLengthUnpaddable(e.tag.to_string() + " has odd length " +
                                std::to_string(payload.size()) +
                                " and VR " + std::string(vr_code(e.vr)) +
                                " cannot be padded");
    }
    payload.push_back(static_cast<std::uint8_t>(*pad));
  }
  return payload;
}

void write_element(Writer& w, const DataElement& e, bool explicit_vr);

void write_items(Writer& w, const DataElement& e, bool explicit_vr) {
  for (const DataSet& item : e.items) {
    Writer content;
    for (const auto& [tag, child] : item) {
      if (tag.is_group_length()) continue;
      write_element(content, child, explicit_vr);
    }
    w.tag(kItemTag);
    if (item.undefined_length_item) {
      w.u32(kUndefinedLength);
      w.bytes(content);
      w.tag(kItemDelimiterTag);
      w.u32(0);
    } else {
      w.u32(static_cast<std::uint32_t>(content.out.size()));
      w.bytes(content);
    }
  }
}

void write_element(Writer& w, const DataElement& e, bool explicit_vr) {
  w.tag(e.tag);

  if (e.is_sequence()) {
    if (explicit_vr) {
      w.out.push_back('S');
      w.out.push_back('Q');
      w.u16(0);
    }
    if (e.undefined_length) {
      w.u32(kUndefinedLength);
      write_items(w, e, explicit_vr);
      w.tag(kSequenceDelimiterTag);
      w.u32(0);
    } else {
      Writer items;
      write_items(items, e, explicit_vr);
      w.u32(static_cast<std::uint32_t>(items.out.size()));
      w.bytes(items);
    }
    return;
  }

  if (e.undefined_length) {
    // Opaque carry-through of an encapsulated value, byte-exact.
    if (explicit_vr) {
      auto code = vr_code(e.vr);
      w.out.push_back(static_cast<std::uint8_t>(code[0]));
      w.out.push_back(static_cast<std::uint8_t>(code[1]));
      w.u16(0);
    }
    w.u32(kUndefinedLength);
    w.bytes(e.raw);
    w.tag(kSequenceDelimiterTag);
    w.u32(0);
    return;
  }

  validate_string_lengths(e);
  std::vector<std::uint8_t> payload = padded_payload(e);

  if (explicit_vr) {
    auto code = vr_code(e.vr);
    w.out.push_back(static_cast<std::uint8_t>(code[0]));
    w.out.push_back(static_cast<std::uint8_t>(code[1]));
    if (vr_uses_long_form(e.vr)) {
      w.u16(0);
      w.u32(static_cast<std::uint32_t>(payload.size()));
    } else {
      if (payload.size() > 0xFFFF) {
        throw ValueTooLong(e.tag.to_string() +
                           " value too long for short-form length field");
      }
      w.u16(static_cast<std::uint16_t>(payload.size()));
    }
  } else {
    w.u32(static_cast<std::uint32_t>(payload.size()));
  }
  w.bytes(payload);
}

}  // namespace

bool DicomObject::operator==(const DicomObject& rhs) const {
  return preamble == rhs.preamble && has_preamble == rhs.has_preamble &&
         file_meta == rhs.file_meta && transfer_syntax == rhs.transfer_syntax &&
         dataset == rhs.dataset;
}

DicomObject parse_file(std::span<const std::uint8_t> bytes,
                       const ParseLimits& limits) {
  DicomObject obj;
  Reader r{bytes, 0};

  if (bytes.size() >= 132 && std::memcmp(bytes.data() + 128, "DICM", 4) == 0) {
    std::copy(bytes.begin(), bytes.begin() + 128, obj.preamble.begin());
    obj.has_preamble = true;
    r.pos = 132;
  } else if (bytes.size() >= 8 && bytes[0] == 0x02 && bytes[1] == 0x00) {
    // Headerless fallback: stream starts directly at the file meta group.
    obj.has_preamble = false;
  } else {
    throw MalformedFile("missing DICM magic and no group-0002 fallback");
  }

  // File meta: group 0002, always Explicit VR LE.
  ParserState meta_state{limits, /*explicit_vr=*/true, /*opaque_pixel_ok=*/false};
  while (r.remaining() >= 8 && r.peek_tag().group == 0x0002) {
    Tag tag = r.tag();
    obj.file_meta.set(parse_element(r, meta_state, 0, tag));
  }
  auto ts = obj.file_meta.find(Tag{0x0002, 0x0010});
  if (!ts) throw MalformedFile("file meta lacks transfer syntax UID (0002,0010)");
  obj.transfer_syntax = ts->string_value();

  ParserState state{limits, true, false};
  if (obj.transfer_syntax == kImplicitVrLittleEndian) {
    state.explicit_vr = false;
  } else if (obj.transfer_syntax == kExplicitVrLittleEndian) {
    state.explicit_vr = true;
  } else if (obj.transfer_syntax == kExplicitVrBigEndian ||
             obj.transfer_syntax == kDeflatedExplicitVrLittleEndian) {
    throw UnsupportedTransferSyntax("cannot decode transfer syntax " +
                                    obj.transfer_syntax);
  } else {
    // Compressed syntaxes: explicit metadata, pixel data carried opaquely.
    state.explicit_vr = true;
    state.opaque_pixel_ok = true;
  }

  obj.dataset = parse_dataset(r, bytes.size(), state, 0);
  assign_charsets(obj.dataset, Charset::Ascii);
  return obj;
}

std::vector<std::uint8_t> serialize_dataset(const DataSet& ds, bool explicit_vr) {
  Writer w;
  for (const auto& [tag, element] : ds) {
    // Group lengths are retired; recomputing them buys nothing.
    if (tag.is_group_length()) continue;
    write_element(w, element, explicit_vr);
  }
  return std::move(w.out);
}

std::vector<std::uint8_t> serialize(const DicomObject& obj) {
  Writer w;
  if (obj.has_preamble) {
    w.out.insert(w.out.end(), obj.preamble.begin(), obj.preamble.end());
    w.out.push_back('D');
    w.out.push_back('I');
    w.out.push_back('C');
    w.out.push_back('M');
  }

  // Meta group body, then the recomputed (0002,0000) ahead of it.
  Writer meta;
  for (const auto& [tag, element] : obj.file_meta) {
    if (tag == Tag{0x0002, 0x0000}) continue;
    if (tag.group != 0x0002) {
      throw MalformedFile("non-0002 element in file meta: " + tag.to_string());
    }
    write_element(meta, element, true);
  }
  DataElement group_length(Tag{0x0002, 0x0000}, VR::UL);
  std::uint32_t n = static_cast<std::uint32_t>(meta.out.size());
  group_length.raw = {static_cast<std::uint8_t>(n), static_cast<std::uint8_t>(n >> 8),
                      static_cast<std::uint8_t>(n >> 16),
                      static_cast<std::uint8_t>(n >> 24)};
  write_element(w, group_length, true);
  w.bytes(meta);

  bool explicit_vr = obj.transfer_syntax != kImplicitVrLittleEndian;
  Writer body;
  for (const auto& [tag, element] : obj.dataset) {
    if (tag.is_group_length()) continue;
    write_element(body, element, explicit_vr);
  }
  w.bytes(body);
  return std::move(w.out);
}

std::vector<ValidationIssue> validate_values(const DataSet& ds) {
  std::vector<ValidationIssue> issues;
  walk(ds, [&issues](const ElementPath& path, const DataElement& e) {
    auto flag = [&](const std::string& msg) { issues.push_back({path, msg}); };
    switch (e.vr) {
      case VR::DA:
        for (const std::string& v : e.string_values()) {
          if (v.empty()) continue;
          bool ok = v.size() == 8;
          for (char c : v) ok = ok && c >= '0' && c <= '9';
          if (!ok) flag("DA value '" + v + "' is not YYYYMMDD");
        }
        break;
      case VR::TM:
        for (const std::string& v : e.string_values()) {
          if (v.empty()) continue;
          bool ok = v.size() >= 2;
          for (char c : v) ok = ok && ((c >= '0' && c <= '9') || c == '.');
          if (!ok) flag("TM value '" + v + "' is not a valid time");
        }
        break;
      case VR::UI:
        for (const std::string& v : e.string_values()) {
          if (!v.empty() && !uid_is_valid(v)) flag("invalid UID '" + v + "'");
        }
        break;
      case VR::CS:
        for (const std::string& v : e.string_values()) {
          for (char c : v) {
            bool ok = (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == ' ' || c == '_';
            if (!ok) {
              flag("CS value '" + v + "' contains invalid character");
              break;
            }
          }
        }
        break;
      default:
        break;
    }
  });
  return issues;
}

void sync_file_meta(DicomObject& obj) {
  DataSet meta;
  DataElement version(Tag{0x0002, 0x0001}, VR::OB);
  version.raw = {0x00, 0x01};
  meta.set(std::move(version));
  auto copy_from_dataset = [&](Tag meta_tag, Tag source) {
    if (const DataElement* e = obj.dataset.find(source)) {
      meta.set_string(meta_tag, VR::UI, e->string_value());
    }
  };
  copy_from_dataset(Tag{0x0002, 0x0002}, Tag{0x0008, 0x0016});
  copy_from_dataset(Tag{0x0002, 0x0003}, Tag{0x0008, 0x0018});
  meta.set_string(Tag{0x0002, 0x0010}, VR::UI, obj.transfer_syntax);
  meta.set_string(Tag{0x0002, 0x0012}, VR::UI, kImplementationClassUid);
  meta.set_string(Tag{0x0002, 0x0013}, VR::SH, kImplementationVersion);
  obj.file_meta = std::move(meta);
}

}  // namespace deid
