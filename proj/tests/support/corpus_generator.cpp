#include "support/corpus_generator.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "deid/profile.hpp"
#include "support/raw_builder.hpp"

namespace deid::testsupport {

namespace fs = std::filesystem;

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool bytes_contain_token(const std::vector<std::uint8_t>& bytes,
                         const std::string& token) {
  if (token.empty() || bytes.size() < token.size()) return false;
  auto lower = [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  };
  bool word_token = std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isalnum(c) != 0;
  });
  std::string needle;
  for (unsigned char c : token) needle += lower(c);

  for (std::size_t i = 0; i + needle.size() <= bytes.size(); ++i) {
    bool hit = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (lower(bytes[i + j]) != needle[j]) {
        hit = false;
        break;
      }
    }
    if (!hit) continue;
    if (word_token) {
      bool left_ok = i == 0 || !std::isalnum(bytes[i - 1]);
      std::size_t after = i + needle.size();
      bool right_ok = after >= bytes.size() || !std::isalnum(bytes[after]);
      if (!left_ok || !right_ok) continue;
    }
    return true;
  }
  return false;
}

std::vector<std::string> scan_tree_for_tokens(const std::string& root,
                                              const std::set<std::string>& tokens) {
  std::set<std::string> found;
  if (fs::exists(root)) {
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
      if (!entry.is_regular_file()) continue;
      std::vector<std::uint8_t> bytes = read_file(entry.path().string());
      for (const std::string& token : tokens) {
        if (found.count(token)) continue;
        if (bytes_contain_token(bytes, token)) found.insert(token);
      }
    }
  }
  return {found.begin(), found.end()};
}

namespace {

constexpr const char* kCtImage = "1.2.840.10008.5.1.4.1.1.2";
constexpr const char* kMrImage = "1.2.840.10008.5.1.4.1.1.4";
constexpr const char* kSegStorage = "1.2.840.10008.5.1.4.1.1.66.4";
constexpr const char* kRtStruct = "1.2.840.10008.5.1.4.1.1.481.3";

struct Patient {
  const char* name;
  const char* first;
  const char* last;
  const char* id;
  const char* sex;
  const char* age;
  const char* birth;
};

constexpr Patient kPatients[] = {
    {"WILCOX^MARK", "Mark", "Wilcox", "MRN4471922", "M", "058Y", "19650704"},
    {"JOHANSSON^ERIKA", "Erika", "Johansson", "PID8833271", "F", "044Y", "19790212"},
    {"OKAFOR^CHIDI", "Chidi", "Okafor", "MRN5529184", "M", "061Y", "19620318"},
    {"DUBOIS^CELINE", "Celine", "Dubois", "PID9912465", "F", "037Y", "19860925"},
    {"NAKAMURA^KENJI", "Kenji", "Nakamura", "MRN3318566", "M", "052Y", "19710610"},
    {"FERNANDEZ^LUCIA", "Lucia", "Fernandez", "PID7745209", "F", "049Y", "19740830"},
};

constexpr const char* kCleanSeriesDesc[] = {
    "AX T1 POST", "SAG T2 FLAIR", "COR STIR", "DWI B800", "CT CHEST WO",
    "LOCALIZER", "AX SWI", "PERFUSION MAP",
};

constexpr const char* kStudyDates[] = {"20230115", "20230322", "20230507",
                                       "20230830", "20231104", "20240119",
                                       "20240226", "20240414"};

class UidMint {
 public:
  explicit UidMint(const char* arc) : arc_(arc) {}
  std::string next() { return std::string(arc_) + "." + std::to_string(++n_); }

 private:
  const char* arc_;
  unsigned long n_ = 0;
};

DicomObject base_object(const std::string& ts, const std::string& sop_class,
                        const std::string& sop_uid) {
  DicomObject obj;
  obj.transfer_syntax = ts;
  obj.dataset.set_string(Tag{0x0008, 0x0016}, VR::UI, sop_class);
  obj.dataset.set_string(Tag{0x0008, 0x0018}, VR::UI, sop_uid);
  sync_file_meta(obj);
  return obj;
}

std::string csv_escape_path(const ElementPath& path) { return path.to_string(); }

ElementPath leaf_path(Tag tag) {
  ElementPath p;
  p.leaf = tag;
  return p;
}

}  // namespace

GeneratedCorpus generate_midi_corpus(const std::string& root,
                                     const GeneratorSpec& spec) {
  fs::remove_all(root);
  fs::create_directories(root);

  GeneratedCorpus corpus;
  corpus.root = root;
  std::mt19937 rng(spec.seed);
  UidMint mint("1.2.826.0.1.55555");

  std::ostringstream key;
  std::ostringstream address_key;
  key << "original_sop_instance_uid,tag_path,category,expected_or_phi_tokens\n";
  address_key << "original_sop_instance_uid,tag_path,category,expected_or_phi_tokens\n";

  auto add_key = [&](const std::string& sop, Tag tag, const char* category,
                     const std::string& expected, bool identity_fails) {
    key << sop << "," << csv_escape_path(leaf_path(tag)) << "," << category << ","
        << expected << "\n";
    ++corpus.key_entries_by_category[category];
    if (identity_fails) ++corpus.identity_fail_by_category[category];
  };
  auto add_nested_key = [&](const std::string& sop, const ElementPath& path,
                            const char* category, const std::string& expected,
                            bool identity_fails) {
    key << sop << "," << csv_escape_path(path) << "," << category << ","
        << expected << "\n";
    ++corpus.key_entries_by_category[category];
    if (identity_fails) ++corpus.identity_fail_by_category[category];
  };

  std::size_t study_count = sizeof(kStudyDates) / sizeof(kStudyDates[0]);
  std::vector<std::string> study_uids;
  for (std::size_t s = 0; s < study_count; ++s) study_uids.push_back(mint.next());

  for (std::size_t s = 0; s < spec.series_count; ++s) {
    std::size_t study_index = s % study_count;
    const Patient& patient = kPatients[study_index % std::size(kPatients)];
    std::string study_uid = study_uids[study_index];
    std::string series_uid = mint.next();
    std::string study_date = kStudyDates[study_index];
    std::string shifted_date = shift_date_value(study_date, spec.date_shift_days);
    bool implicit = s % 2 == 0;
    std::string ts = implicit ? kImplicitVrLittleEndian : kExplicitVrLittleEndian;
    bool is_ct = s % 3 == 0;
    std::string sop_class = is_ct ? kCtImage : kMrImage;

    std::string series_desc = kCleanSeriesDesc[s % std::size(kCleanSeriesDesc)];
    bool corrupted_series = s % 3 == 1;  // minority-slice corruption per series
    bool planted_study_desc = study_index % 2 == 0;
    std::string study_desc = planted_study_desc ? "CHEST CT for John Smith"
                                                : "ROUTINE BRAIN PROTOCOL";
    std::string study_desc_clean = planted_study_desc ? "CHEST CT"
                                                      : "ROUTINE BRAIN PROTOCOL";

    std::uniform_int_distribution<std::size_t> instance_dist(spec.instances_min,
                                                             spec.instances_max);
    std::size_t instances = instance_dist(rng);

    for (std::size_t i = 0; i < instances; ++i) {
      std::string sop_uid = mint.next();
      DicomObject obj = base_object(ts, sop_class, sop_uid);
      DataSet& ds = obj.dataset;

      ds.set_string(Tag{0x0008, 0x0020}, VR::DA, study_date);
      ds.set_string(Tag{0x0008, 0x0030}, VR::TM, "081500");
      ds.set_string(Tag{0x0008, 0x0050}, VR::SH, "ACC002317");
      ds.set_string(Tag{0x0008, 0x0060}, VR::CS, is_ct ? "CT" : "MR");
      ds.set_string(Tag{0x0008, 0x0090}, VR::PN, "HAUSMAN^GREGOR");
      ds.set_string(Tag{0x0008, 0x1030}, VR::LO, study_desc);
      ds.set_string(Tag{0x0010, 0x0010}, VR::PN, patient.name);
      ds.set_string(Tag{0x0010, 0x0020}, VR::LO, patient.id);
      ds.set_string(Tag{0x0010, 0x0030}, VR::DA, patient.birth);
      ds.set_string(Tag{0x0010, 0x0040}, VR::CS, patient.sex);
      ds.set_string(Tag{0x0010, 0x1010}, VR::AS, patient.age);
      ds.set_string(Tag{0x0012, 0x0010}, VR::LO, "TRIALCORP CONFIDENTIAL");
      ds.set_string(Tag{0x0020, 0x000D}, VR::UI, study_uid);
      ds.set_string(Tag{0x0020, 0x000E}, VR::UI, series_uid);
      ds.set_string(Tag{0x0020, 0x0010}, VR::SH, "S" + std::to_string(study_index));
      ds.set_string(Tag{0x0020, 0x0011}, VR::IS, std::to_string(s % 40));
      ds.set_string(Tag{0x0020, 0x0013}, VR::IS, std::to_string(i + 1));

      // Minority-slice corruption: the last two instances of a corrupted
      // series carry PHI in the series description.
      bool corrupt_this = corrupted_series && i + 2 >= instances && instances > 3;
      std::string this_series_desc = series_desc;
      if (corrupt_this) {
        this_series_desc = series_desc + " for " + patient.first + " " + patient.last;
        corpus.phi_tokens.insert(patient.first);
        corpus.phi_tokens.insert(patient.last);
        corpus.planted_tokens += 2;
        corpus.corrupted_series[series_uid].push_back(sop_uid);
      }
      ds.set_string(Tag{0x0008, 0x103E}, VR::LO, this_series_desc);

      // Small native image so pixel masking has something to chew on.
      {
        DataElement spp(Tag{0x0028, 0x0002}, VR::US);
        spp.raw = {1, 0};
        ds.set(std::move(spp));
        DataElement rows(Tag{0x0028, 0x0010}, VR::US);
        rows.raw = {8, 0};
        ds.set(std::move(rows));
        DataElement cols(Tag{0x0028, 0x0011}, VR::US);
        cols.raw = {8, 0};
        ds.set(std::move(cols));
        DataElement bits(Tag{0x0028, 0x0100}, VR::US);
        bits.raw = {8, 0};
        ds.set(std::move(bits));
        DataElement px(Tag{0x7FE0, 0x0010}, VR::OW);
        px.raw.resize(64);
        for (std::size_t b = 0; b < px.raw.size(); ++b) {
          px.raw[b] = static_cast<std::uint8_t>((b * 7 + i) & 0xFF);
        }
        ds.set(std::move(px));
      }

      if (i % 3 == 0) {
        ds.set_string(Tag{0x0020, 0x4000}, VR::LT,
                      "Acquired 20230115 control 2019 call (555)123-4567");
        corpus.phi_tokens.insert("20230115");
        corpus.phi_tokens.insert("2019");
        corpus.phi_tokens.insert("(555)123-4567");
        corpus.planted_tokens += 3;
        add_key(sop_uid, Tag{0x0020, 0x4000}, "text_remove",
                "20230115|2019|(555)123-4567", true);
        add_key(sop_uid, Tag{0x0020, 0x4000}, "text_retain",
                "Acquired control call", true);
      }

      if (i % 5 == 0) {
        std::string history = std::string(patient.first) + " " + patient.last +
                              " : 908 E Maryland Ln Laurel, MT 59044";
        ds.set_string(Tag{0x0010, 0x21B0}, VR::LT, history);
        corpus.phi_tokens.insert(patient.first);
        corpus.phi_tokens.insert(patient.last);
        corpus.planted_tokens += 2;
        add_key(sop_uid, Tag{0x0010, 0x21B0}, "text_remove",
                std::string(patient.first) + "|" + patient.last, true);
        corpus.address_tokens.insert("Maryland");
        corpus.address_tokens.insert("Laurel");
        corpus.address_tokens.insert("59044");
        address_key << sop_uid << ","
                    << csv_escape_path(leaf_path(Tag{0x0010, 0x21B0}))
                    << ",text_remove,Maryland|Laurel|59044\n";
      }

      if (i % 7 == 0) {
        // Nested report text, two levels down.
        DataSet leaf_item;
        leaf_item.set_string(Tag{0x0040, 0xA040}, VR::CS, "TEXT");
        leaf_item.set_string(Tag{0x0040, 0xA160}, VR::UT, "seen by Dr. Adams");
        DataElement inner(Tag{0x0040, 0xA730}, VR::SQ);
        inner.items.push_back(std::move(leaf_item));
        DataSet outer_item;
        outer_item.set_string(Tag{0x0040, 0xA040}, VR::CS, "CONTAINER");
        outer_item.set(std::move(inner));
        DataElement content(Tag{0x0040, 0xA730}, VR::SQ);
        content.items.push_back(std::move(outer_item));
        ds.set(std::move(content));

        corpus.phi_tokens.insert("Adams");
        corpus.planted_tokens += 1;
        ElementPath nested;
        nested.steps = {{Tag{0x0040, 0xA730}, 0}, {Tag{0x0040, 0xA730}, 0}};
        nested.leaf = Tag{0x0040, 0xA160};
        add_nested_key(sop_uid, nested, "text_remove", "Adams", true);
      }

      // Private block: one safe element, one not on the list, plus an
      // entire block with no safe entries.
      ds.set_string(Tag{0x0029, 0x0010}, VR::LO, "SIEMENS CSA HEADER");
      {
        DataElement safe(Tag{0x0029, 0x1010}, implicit ? VR::UN : VR::OB);
        safe.raw = {0x53, 0x56, 0x31, 0x30, 0x00, 0x04, 0x03, 0x02};
        ds.set(std::move(safe));
        DataElement unsafe_el(Tag{0x0029, 0x1077}, implicit ? VR::UN : VR::OB);
        unsafe_el.raw = {0x55, 0x4E};
        ds.set(std::move(unsafe_el));
      }
      ds.set_string(Tag{0x0029, 0x0011}, VR::LO, "ACME INTERNAL");
      ds.set_string(Tag{0x0029, 0x1101}, implicit ? VR::UN : VR::LO,
                    "operator Dana Cortez");
      corpus.phi_tokens.insert("Cortez");
      corpus.planted_tokens += 1;

      if (planted_study_desc) {
        corpus.phi_tokens.insert("John");
        corpus.phi_tokens.insert("Smith");
        corpus.planted_tokens += 2;
        add_key(sop_uid, Tag{0x0008, 0x1030}, "text_remove", "John|Smith", true);
      }
      // Identity tokens always planted, always removed.
      corpus.phi_tokens.insert(patient.last);
      corpus.phi_tokens.insert(patient.id);
      corpus.phi_tokens.insert("HAUSMAN");
      corpus.planted_tokens += 3;

      add_key(sop_uid, Tag{0x0010, 0x0010}, "remove", "", true);
      add_key(sop_uid, Tag{0x0010, 0x0030}, "remove", "", true);
      add_key(sop_uid, Tag{0x0008, 0x0090}, "remove", "", true);
      add_key(sop_uid, Tag{0x0010, 0x1010}, "retain", patient.age, false);
      add_key(sop_uid, Tag{0x0010, 0x0040}, "retain", patient.sex, false);
      add_key(sop_uid, Tag{0x0008, 0x0018}, "remap_uid", sop_uid, true);
      add_key(sop_uid, Tag{0x0020, 0x000E}, "remap_uid", series_uid, true);
      add_key(sop_uid, Tag{0x0008, 0x0020}, "date_action", shifted_date, true);
      add_key(sop_uid, Tag{0x0012, 0x0010}, "replace_dummy",
              "TRIALCORP CONFIDENTIAL", true);
      add_key(sop_uid, Tag{0x0008, 0x103E}, "text_retain", series_desc,
              corrupt_this);
      add_key(sop_uid, Tag{0x0008, 0x1030}, "text_retain", study_desc_clean,
              planted_study_desc);

      std::string rel = "study" + std::to_string(study_index) + "/series" +
                        std::to_string(s) + "/img" + std::to_string(i) + ".dcm";
      write_file((fs::path(root) / rel).string(), serialize(obj));
      ++corpus.instance_count;
    }
    ++corpus.series_count;
  }

  corpus.key_csv = key.str();
  corpus.address_key_csv = address_key.str();
  return corpus;
}

LinkageCorpus generate_linkage_corpus(const std::string& root) {
  fs::remove_all(root);
  fs::create_directories(root);

  LinkageCorpus corpus;
  corpus.root = root;
  UidMint mint("1.2.826.0.1.77777");
  std::string study_uid = mint.next();
  std::string series_uid = mint.next();
  std::string for_uid = mint.next();

  for (int i = 0; i < 5; ++i) {
    std::string sop_uid = mint.next();
    corpus.image_instance_uids.push_back(sop_uid);
    DicomObject obj = base_object(kExplicitVrLittleEndian, kMrImage, sop_uid);
    DataSet& ds = obj.dataset;
    ds.set_string(Tag{0x0008, 0x0020}, VR::DA, "20230601");
    ds.set_string(Tag{0x0008, 0x0060}, VR::CS, "MR");
    ds.set_string(Tag{0x0008, 0x103E}, VR::LO, "AX T1 BASE");
    ds.set_string(Tag{0x0010, 0x0010}, VR::PN, "WILCOX^MARK");
    ds.set_string(Tag{0x0010, 0x0020}, VR::LO, "MRN4471922");
    ds.set_string(Tag{0x0020, 0x000D}, VR::UI, study_uid);
    ds.set_string(Tag{0x0020, 0x000E}, VR::UI, series_uid);
    ds.set_string(Tag{0x0020, 0x0013}, VR::IS, std::to_string(i + 1));
    ds.set_string(Tag{0x0020, 0x0052}, VR::UI, for_uid);
    write_file((fs::path(root) / ("mr/img" + std::to_string(i) + ".dcm")).string(),
               serialize(obj));
  }

  // DICOM-SEG referencing the MR instances.
  {
    std::string sop_uid = mint.next();
    corpus.seg_instance_uid = sop_uid;
    DicomObject obj = base_object(kExplicitVrLittleEndian, kSegStorage, sop_uid);
    DataSet& ds = obj.dataset;
    ds.set_string(Tag{0x0008, 0x0020}, VR::DA, "20230601");
    ds.set_string(Tag{0x0008, 0x0060}, VR::CS, "SEG");
    ds.set_string(Tag{0x0010, 0x0010}, VR::PN, "WILCOX^MARK");
    ds.set_string(Tag{0x0010, 0x0020}, VR::LO, "MRN4471922");
    ds.set_string(Tag{0x0020, 0x000D}, VR::UI, study_uid);
    ds.set_string(Tag{0x0020, 0x000E}, VR::UI, mint.next());
    ds.set_string(Tag{0x0020, 0x0052}, VR::UI, for_uid);

    DataElement ref_images(Tag{0x0008, 0x1140}, VR::SQ);
    for (const std::string& uid : corpus.image_instance_uids) {
      DataSet item;
      item.set_string(Tag{0x0008, 0x1150}, VR::UI, kMrImage);
      item.set_string(Tag{0x0008, 0x1155}, VR::UI, uid);
      ref_images.items.push_back(std::move(item));
    }
    DataSet series_item;
    series_item.set_string(Tag{0x0020, 0x000E}, VR::UI, series_uid);
    series_item.set(std::move(ref_images));
    DataElement ref_series(Tag{0x0008, 0x1115}, VR::SQ);
    ref_series.items.push_back(std::move(series_item));
    ds.set(std::move(ref_series));

    write_file((fs::path(root) / "seg/seg.dcm").string(), serialize(obj));
  }

  // RT-STRUCT with the standard frame-of-reference chain.
  {
    std::string sop_uid = mint.next();
    corpus.rtstruct_instance_uid = sop_uid;
    DicomObject obj = base_object(kExplicitVrLittleEndian, kRtStruct, sop_uid);
    DataSet& ds = obj.dataset;
    ds.set_string(Tag{0x0008, 0x0020}, VR::DA, "20230601");
    ds.set_string(Tag{0x0008, 0x0060}, VR::CS, "RTSTRUCT");
    ds.set_string(Tag{0x0010, 0x0010}, VR::PN, "WILCOX^MARK");
    ds.set_string(Tag{0x0010, 0x0020}, VR::LO, "MRN4471922");
    ds.set_string(Tag{0x0020, 0x000D}, VR::UI, study_uid);
    ds.set_string(Tag{0x0020, 0x000E}, VR::UI, mint.next());
    ds.set_string(Tag{0x3006, 0x0002}, VR::SH, "PLAN1");

    DataElement contour_images(Tag{0x3006, 0x0016}, VR::SQ);
    for (const std::string& uid : corpus.image_instance_uids) {
      DataSet item;
      item.set_string(Tag{0x0008, 0x1150}, VR::UI, kMrImage);
      item.set_string(Tag{0x0008, 0x1155}, VR::UI, uid);
      contour_images.items.push_back(std::move(item));
    }
    DataSet rt_series_item;
    rt_series_item.set_string(Tag{0x0020, 0x000E}, VR::UI, series_uid);
    rt_series_item.set(std::move(contour_images));
    DataElement rt_series(Tag{0x3006, 0x0014}, VR::SQ);
    rt_series.items.push_back(std::move(rt_series_item));

    DataSet rt_study_item;
    rt_study_item.set_string(Tag{0x0008, 0x1150}, VR::UI,
                             "1.2.840.10008.3.1.2.3.1");
    rt_study_item.set_string(Tag{0x0008, 0x1155}, VR::UI, study_uid);
    rt_study_item.set(std::move(rt_series));
    DataElement rt_study(Tag{0x3006, 0x0012}, VR::SQ);
    rt_study.items.push_back(std::move(rt_study_item));

    DataSet for_item;
    for_item.set_string(Tag{0x0020, 0x0052}, VR::UI, for_uid);
    for_item.set(std::move(rt_study));
    DataElement ref_for(Tag{0x3006, 0x0010}, VR::SQ);
    ref_for.items.push_back(std::move(for_item));
    ds.set(std::move(ref_for));

    write_file((fs::path(root) / "rtstruct/rs.dcm").string(), serialize(obj));
  }
  return corpus;
}

std::vector<std::vector<std::uint8_t>> roundtrip_fixtures() {
  std::vector<std::vector<std::uint8_t>> fixtures;
  UidMint mint("1.2.826.0.1.99999");

  for (bool explicit_vr : {true, false}) {
    const char* ts = explicit_vr ? "1.2.840.10008.1.2.1" : "1.2.840.10008.1.2";

    // Plain identity tags, padded strings.
    {
      RawBuilder b(explicit_vr);
      b.element(0x0008, 0x0020, "DA", "20230115");
      b.element(0x0008, 0x103E, "LO", "AX T1");  // pads to 6
      b.element(0x0010, 0x0010, "PN", "DOE^JOHN^A");
      b.element(0x0010, 0x0020, "LO", "MRN0423");
      fixtures.push_back(part10_file(ts, kCtImage, mint.next(), b.bytes()));
    }
    // Multi-valued, empty, and UI NUL padding.
    {
      RawBuilder b(explicit_vr);
      b.element(0x0008, 0x0008, "CS", "ORIGINAL\\PRIMARY\\AXIAL");
      b.element(0x0008, 0x0050, "SH", "");
      b.element(0x0020, 0x000D, "UI", "1.2.840.113619.2.55.3", '\0');
      b.element(0x0020, 0x0011, "IS", "12");
      fixtures.push_back(part10_file(ts, kMrImage, mint.next(), b.bytes()));
    }
    // Nested sequences to depth 3, defined lengths.
    {
      RawBuilder leaf(explicit_vr);
      leaf.element(0x0040, 0xA160, "UT", "inner text");
      RawBuilder mid(explicit_vr);
      mid.sequence_defined(0x0040, 0xA730, {leaf.bytes()});
      mid.element(0x0040, 0xA040, "CS", "CONTAINER ");
      RawBuilder top(explicit_vr);
      top.sequence_defined(0x0040, 0xA730, {mid.bytes()});
      fixtures.push_back(part10_file(ts, kMrImage, mint.next(), top.bytes()));
    }
    // Undefined-length sequence with undefined items.
    {
      RawBuilder item(explicit_vr);
      item.element(0x0008, 0x0100, "SH", "113100");
      item.element(0x0008, 0x0104, "LO", "Basic Profile ");
      RawBuilder b(explicit_vr);
      b.element(0x0008, 0x0018, "UI", "1.9.8.7", '\0');
      b.sequence_undefined(0x0012, 0x0064, {item.bytes()}, true);
      fixtures.push_back(part10_file(ts, kCtImage, mint.next(), b.bytes()));
    }
    // Undefined-length sequence with defined items.
    {
      RawBuilder item(explicit_vr);
      item.element(0x0010, 0x0020, "LO", "NESTED");
      RawBuilder b(explicit_vr);
      b.sequence_undefined(0x0010, 0x1002, {item.bytes(), item.bytes()}, false);
      fixtures.push_back(part10_file(ts, kMrImage, mint.next(), b.bytes()));
    }
    // Private block with creator, binary payloads.
    {
      RawBuilder b(explicit_vr);
      b.element(0x0029, 0x0010, "LO", "SIEMENS CSA HEADER");
      b.element_bytes(0x0029, 0x1010, explicit_vr ? "OB" : "UN",
                      {0x53, 0x56, 0x31, 0x30, 0x01, 0x02, 0x03, 0x05});
      b.element_bytes(0x0029, 0x1018, explicit_vr ? "OB" : "UN", {0x00, 0x10});
      fixtures.push_back(part10_file(ts, kCtImage, mint.next(), b.bytes()));
    }
    // Binary numeric VRs and pixel data.
    {
      RawBuilder b(explicit_vr);
      b.element_bytes(0x0028, 0x0010, "US", {0x04, 0x00});
      b.element_bytes(0x0028, 0x0011, "US", {0x04, 0x00});
      b.element_bytes(0x0028, 0x0100, "US", {0x08, 0x00});
      std::vector<std::uint8_t> px(16);
      for (std::size_t i = 0; i < px.size(); ++i) px[i] = std::uint8_t(i * 3);
      b.element_bytes(0x7FE0, 0x0010, explicit_vr ? "OW" : "OW", px);
      fixtures.push_back(part10_file(ts, kCtImage, mint.next(), b.bytes()));
    }
    // Latin-1 charset text.
    {
      RawBuilder b(explicit_vr);
      b.element(0x0008, 0x0005, "CS", "ISO_IR 100");
      b.element(0x0010, 0x0010, "PN", "M\xDCLLER^\xC5SA");
      fixtures.push_back(part10_file(ts, kMrImage, mint.next(), b.bytes()));
    }
    // Overlay repeating group.
    {
      RawBuilder b(explicit_vr);
      b.element_bytes(0x6000, 0x0010, "US", {0x10, 0x00});
      b.element_bytes(0x6000, 0x0011, "US", {0x10, 0x00});
      b.element(0x6000, 0x0040, "CS", "G ");
      b.element_bytes(0x6000, 0x3000, explicit_vr ? "OW" : "OW",
                      {0xAA, 0x55, 0xAA, 0x55});
      fixtures.push_back(part10_file(ts, kCtImage, mint.next(), b.bytes()));
    }
    // Odd-length source values arrive pre-padded per the standard.
    {
      RawBuilder b(explicit_vr);
      b.element(0x0008, 0x0090, "PN", "LEE^A");   // becomes 6 with pad
      b.element(0x0010, 0x21B0, "LT", "hx: stable");
      b.element(0x0038, 0x0500, "LO", "AMBULATORY");
      fixtures.push_back(part10_file(ts, kMrImage, mint.next(), b.bytes()));
    }
    // Long-form text VR and trailing padding element.
    {
      RawBuilder b(explicit_vr);
      b.element(0x0040, 0xA160, "UT", std::string(300, 'q'));
      b.element_bytes(0xFFFC, 0xFFFC, explicit_vr ? "OB" : "UN", {0, 0, 0, 0});
      fixtures.push_back(part10_file(ts, kCtImage, mint.next(), b.bytes()));
    }
    // Deep SR-style tree mixing sequences and text leaves.
    {
      RawBuilder leaf(explicit_vr);
      leaf.element(0x0040, 0xA040, "CS", "TEXT");
      leaf.element(0x0040, 0xA160, "UT", "measured value 4.2");
      RawBuilder branch(explicit_vr);
      branch.sequence_defined(0x0040, 0xA730, {leaf.bytes(), leaf.bytes()});
      RawBuilder b(explicit_vr);
      b.element(0x0008, 0x0018, "UI", "1.3.5.7", '\0');
      b.sequence_defined(0x0040, 0xA730, {branch.bytes()});
      fixtures.push_back(part10_file(ts, kMrImage, mint.next(), b.bytes()));
    }
    // Dates, times and decimal strings.
    {
      RawBuilder b(explicit_vr);
      b.element(0x0008, 0x0021, "DA", "20230115");
      b.element(0x0008, 0x0031, "TM", "101530");
      b.element(0x0008, 0x002A, "DT", "20230115101530");
      b.element(0x0010, 0x1020, "DS", "1.75");
      b.element(0x0010, 0x1030, "DS", "82.5");
      fixtures.push_back(part10_file(ts, kCtImage, mint.next(), b.bytes()));
    }
    // Group-0008 identifiers with AE/AS VRs.
    {
      RawBuilder b(explicit_vr);
      b.element(0x0008, 0x0054, "AE", "STORE_SCP");
      b.element(0x0010, 0x1010, "AS", "045Y");
      b.element(0x0008, 0x0201, "SH", "+0100");
      fixtures.push_back(part10_file(ts, kMrImage, mint.next(), b.bytes()));
    }
    // Clinical trial block (group 0012).
    {
      RawBuilder b(explicit_vr);
      b.element(0x0012, 0x0010, "LO", "SPONSOR");
      b.element(0x0012, 0x0020, "LO", "PROTO-1 ");
      b.element(0x0012, 0x0040, "LO", "SUBJ-004");
      fixtures.push_back(part10_file(ts, kCtImage, mint.next(), b.bytes()));
    }
  }

  // Headerless stream (no preamble/magic).
  {
    RawBuilder b(true);
    b.element(0x0010, 0x0010, "PN", "DOE^JANE");
    auto full = part10_file("1.2.840.10008.1.2.1", kCtImage, mint.next(), b.bytes());
    fixtures.emplace_back(full.begin() + 132, full.end());
  }
  // Encapsulated pixel data carried opaquely (JPEG baseline syntax).
  {
    RawBuilder b(true);
    b.element(0x0008, 0x0018, "UI", "1.4.4.4", '\0');
    b.u16(0x7FE0);
    b.u16(0x0010);
    b.text("OB");
    b.u16(0);
    b.u32(0xFFFFFFFF);
    b.u16(0xFFFE);
    b.u16(0xE000);
    b.u32(0);
    b.u16(0xFFFE);
    b.u16(0xE000);
    b.u32(6);
    b.text("\xFF\xD8\x00\x01\xFF\xD9");
    b.u16(0xFFFE);
    b.u16(0xE0DD);
    b.u32(0);
    fixtures.push_back(
        part10_file("1.2.840.10008.1.2.4.50", kCtImage, mint.next(), b.bytes()));
  }
  return fixtures;
}

}  // namespace deid::testsupport
