#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deid/action_table.hpp"
#include "deid/dictionary.hpp"
#include "deid/errors.hpp"
#include "deid/safe_private.hpp"

using namespace deid;

TEST_CASE("standard tag lookup") {
  const DictEntry* e = dict_lookup(Tag{0x0010, 0x0010});
  REQUIRE(e != nullptr);
  CHECK(e->keyword == "PatientName");
  CHECK(e->vr == VR::PN);
}

TEST_CASE("repeating-group pattern match") {
  const DictEntry* e = dict_lookup(Tag{0x6002, 0x3000});
  REQUIRE(e != nullptr);
  CHECK(e->keyword == "OverlayData");
  // Exact beats pattern.
  CHECK(dict_lookup(Tag{0x6000, 0x3000})->keyword == "OverlayData");
  // More specific pattern beats the group-wide wildcard.
  CHECK(dict_lookup(Tag{0x5004, 0x3000})->keyword == "CurveData");
  CHECK(dict_lookup(Tag{0x5004, 0x1234})->keyword == "CurveAttribute");
}

TEST_CASE("private tags are absent from the standard dictionary") {
  CHECK(dict_lookup(Tag{0x0009, 0x0001}) == nullptr);
  CHECK(dict_vr(Tag{0x0009, 0x1001}) == VR::UN);
  // Except the creator convention, which binds blocks.
  const DictEntry* creator = dict_lookup(Tag{0x0029, 0x0010});
  REQUIRE(creator != nullptr);
  CHECK(creator->vr == VR::LO);
}

TEST_CASE("keyword reverse lookup") {
  auto tag = dict_tag_by_keyword("SeriesDescription");
  REQUIRE(tag.has_value());
  CHECK(*tag == Tag{0x0008, 0x103E});
}

TEST_CASE("tag pattern parsing and rendering") {
  auto p = TagPattern::parse("50xx,xxxx");
  REQUIRE(p.has_value());
  CHECK(p->matches(Tag{0x5012, 0xABCD}));
  CHECK_FALSE(p->matches(Tag{0x5112, 0x0000}));
  CHECK(p->to_string() == "(50xx,xxxx)");
  CHECK(TagPattern::parse("(0010,0010)")->is_exact());
  CHECK_FALSE(TagPattern::parse("(0010,00)").has_value());
}

TEST_CASE("action table loads the shipped file") {
  auto entries = load_action_table_file(std::string(DEID_DATA_DIR) +
                                        "/action_table.txt");
  CHECK(entries.size() > 180);
  // Every exact row resolves in the dictionary (no dangling tags).
  for (const DeidActionEntry& entry : entries) {
    if (!entry.pattern.is_exact()) continue;
    Tag tag{entry.pattern.group, entry.pattern.element};
    CAPTURE(tag.to_string());
    CHECK(dict_lookup(tag) != nullptr);
  }
}

TEST_CASE("action table row grammar") {
  auto entries = load_action_table(
      "# comment\n"
      "(0008,0020);Z;RFD=K,RMD=K\n"
      "(0010,0010);Z\n"
      "(50xx,xxxx);X\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].basic_action == ActionCode::Z);
  CHECK(entries[0].overrides.at(OptionKey::RetainFullDates) == ActionCode::K);
  CHECK(entries[1].overrides.empty());
  CHECK_FALSE(entries[2].pattern.is_exact());
}

TEST_CASE("duplicate rows and bad grammar are rejected") {
  CHECK_THROWS_AS(load_action_table("(0010,0010);Z\n(0010,0010);X\n"), DuplicateTag);
  CHECK_THROWS_AS(load_action_table("(0010,0010);Q\n"), TableParseError);
  CHECK_THROWS_AS(load_action_table("(0010,0010)\n"), TableParseError);
  CHECK_THROWS_AS(load_action_table("(0010,0010);Z;NOPE=K\n"), TableParseError);
  try {
    load_action_table("(0010,0010);Z\nbogus line\n");
    FAIL("expected TableParseError");
  } catch (const TableParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("action vocabulary is closed") {
  for (const char* code : {"X", "Z", "D", "U", "C", "K", "Z/D", "X/Z", "X/D",
                           "X/Z/D", "X/Z/U*"}) {
    CHECK(action_code_parse(code).has_value());
  }
  CHECK_FALSE(action_code_parse("SHRED").has_value());
  CHECK_FALSE(action_code_parse("x").has_value());
}

TEST_CASE("safe private KB: creator-scoped lookup") {
  SafePrivateKb kb = SafePrivateKb::load(
      "private_creator,group_hex,element_offset_hex,vr_list,meaning\n"
      "SIEMENS CSA HEADER,0029,10,OB,CSA Image Header Info\n"
      "SIEMENS CSA HEADER,0029,20,OB,CSA Series Header Info\n");
  CHECK(kb.size() == 2);
  // Creator block 0x10 assigns (0029,10xx); offset is the low byte.
  CHECK(kb.is_safe("SIEMENS CSA HEADER", Tag{0x0029, 0x1010}));
  CHECK(kb.is_safe("SIEMENS CSA HEADER", Tag{0x0029, 0x4510}));  // any block
  CHECK_FALSE(kb.is_safe("SIEMENS CSA HEADER", Tag{0x0029, 0x1011}));
  CHECK_FALSE(kb.is_safe("OTHER VENDOR", Tag{0x0029, 0x1010}));
  // Creator elements themselves are never "safe data" entries.
  CHECK_FALSE(kb.is_safe("SIEMENS CSA HEADER", Tag{0x0029, 0x0010}));
}

TEST_CASE("safe private KB: row order never changes lookups") {
  const char* a =
      "A CREATOR,0019,0c,IS/DS,B value\n"
      "B CREATOR,0019,0c,CS,Directionality\n";
  const char* b =
      "B CREATOR,0019,0c,CS,Directionality\n"
      "A CREATOR,0019,0c,IS/DS,B value\n";
  SafePrivateKb kb1 = SafePrivateKb::load(a);
  SafePrivateKb kb2 = SafePrivateKb::load(b);
  for (const char* creator : {"A CREATOR", "B CREATOR", "C CREATOR"}) {
    CHECK(kb1.is_safe(creator, Tag{0x0019, 0x100C}) ==
          kb2.is_safe(creator, Tag{0x0019, 0x100C}));
  }
}

TEST_CASE("safe private KB: malformed rows") {
  CHECK_THROWS_AS(SafePrivateKb::load("CREATOR,0029,10\n"), CsvFormatError);
  CHECK_THROWS_AS(SafePrivateKb::load("CREATOR,00XQ,10,OB,meaning\n"), CsvFormatError);
  CHECK_THROWS_AS(SafePrivateKb::load("CREATOR,0028,10,OB,even group\n"),
                  CsvFormatError);
  CHECK_THROWS_AS(SafePrivateKb::load("CREATOR,0029,1FF,OB,offset range\n"),
                  CsvFormatError);
  CHECK_THROWS_AS(SafePrivateKb::load(",0029,10,OB,empty creator\n"), CsvFormatError);
}

TEST_CASE("shipped KB loads and preserves multiple VRs") {
  SafePrivateKb kb =
      SafePrivateKb::load_file(std::string(DEID_DATA_DIR) + "/safe_private.csv");
  CHECK(kb.size() >= 15);
  bool found_multi = false;
  for (const SafePrivateEntry& entry : kb.entries()) {
    if (entry.candidate_vrs.size() > 1) found_multi = true;
  }
  CHECK(found_multi);
}

TEST_CASE("type policy and tag list loaders") {
  TypePolicy policy = TypePolicy::load("(0008,0090);2\n(0040,A073);1\n(0008,1115);U\n");
  CHECK(policy.lookup(Tag{0x0008, 0x0090}) == TypeLikeness::Type2);
  CHECK(policy.lookup(Tag{0x0040, 0xA073}) == TypeLikeness::Type1);
  CHECK(policy.lookup(Tag{0x0008, 0x1115}) == TypeLikeness::KeepReferences);
  CHECK_FALSE(policy.lookup(Tag{0x0008, 0x0080}).has_value());

  auto tags = load_tag_list("(0008,0020)\n# c\n(0010,0010)\n");
  REQUIRE(tags.size() == 2);
  CHECK(tags[1] == Tag{0x0010, 0x0010});
}
