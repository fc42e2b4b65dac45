#include "deid/pipeline.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "deid/dictionary.hpp"
#include "deid/errors.hpp"
#include "deid/harmonize.hpp"

namespace deid {

namespace fs = std::filesystem;

FilterResult filter_sop_class(const DicomObject& obj, const JobConfig& config) {
  const DataElement* e = obj.dataset.find(Tag{0x0008, 0x0016});
  if (!e || e->string_value().empty()) {
    return {FilterDecision::Reject, "missing SOPClassUID (0008,0016)"};
  }
  std::string sop_class = e->string_value();
  if (!config.allow_sop_classes.empty()) {
    for (const std::string& allowed : config.allow_sop_classes) {
      if (allowed == sop_class) return {FilterDecision::Keep, ""};
    }
    return {FilterDecision::Reject, "SOP class " + sop_class + " not on allow list"};
  }
  for (const std::string& denied : config.deny_sop_classes) {
    if (denied == sop_class) {
      return {FilterDecision::Reject, "SOP class " + sop_class + " on deny list"};
    }
  }
  return {FilterDecision::Keep, ""};
}

DicomObject apply_pixel_masks(const DicomObject& obj, const PixelMaskSpec& spec) {
  if (spec.rectangles.empty()) return obj;
  if (obj.transfer_syntax != kImplicitVrLittleEndian &&
      obj.transfer_syntax != kExplicitVrLittleEndian) {
    throw UnsupportedPixelFormat("pixel masks need an uncompressed transfer syntax");
  }
  const DataElement* pixels = obj.dataset.find(Tag{0x7FE0, 0x0010});
  if (!pixels || pixels->undefined_length) {
    throw UnsupportedPixelFormat("no native pixel data to mask");
  }
  auto read_u16 = [&](Tag tag, std::uint16_t fallback) -> std::uint16_t {
    const DataElement* e = obj.dataset.find(tag);
    if (!e) return fallback;
    auto v = e->int_value();
    return v ? static_cast<std::uint16_t>(*v) : fallback;
  };
  std::uint32_t rows = read_u16(Tag{0x0028, 0x0010}, 0);
  std::uint32_t cols = read_u16(Tag{0x0028, 0x0011}, 0);
  std::uint32_t bits = read_u16(Tag{0x0028, 0x0100}, 0);
  std::uint32_t spp = read_u16(Tag{0x0028, 0x0002}, 1);
  if (rows == 0 || cols == 0) throw UnsupportedPixelFormat("missing Rows/Columns");
  if (bits != 8 && bits != 16) {
    throw UnsupportedPixelFormat("BitsAllocated " + std::to_string(bits) +
                                 " not supported");
  }
  for (const PixelMaskRect& r : spec.rectangles) {
    if (r.x + r.width > cols || r.y + r.height > rows) {
      throw MaskOutOfBounds("rectangle exceeds " + std::to_string(cols) + "x" +
                            std::to_string(rows));
    }
  }

  DicomObject out = obj;
  DataElement* px = out.dataset.find(Tag{0x7FE0, 0x0010});
  std::size_t bytes_per_sample = bits / 8;
  std::size_t frame_size = std::size_t(rows) * cols * spp * bytes_per_sample;
  std::size_t frames = frame_size == 0 ? 0 : px->raw.size() / frame_size;

  for (std::size_t f = 0; f < frames; ++f) {
    std::uint8_t* frame = px->raw.data() + f * frame_size;
    for (const PixelMaskRect& r : spec.rectangles) {
      for (std::uint32_t y = r.y; y < r.y + r.height; ++y) {
        for (std::uint32_t x = r.x; x < r.x + r.width; ++x) {
          std::uint8_t* p = frame + (std::size_t(y) * cols + x) * spp * bytes_per_sample;
          for (std::uint32_t s = 0; s < spp; ++s) {
            if (bytes_per_sample == 1) {
              p[s] = static_cast<std::uint8_t>(spec.fill);
            } else {
              p[2 * s] = static_cast<std::uint8_t>(spec.fill);
              p[2 * s + 1] = static_cast<std::uint8_t>(spec.fill >> 8);
            }
          }
        }
      }
    }
  }
  return out;
}

namespace {

struct WorkItem {
  fs::path path;        // absolute input path
  std::string relative; // input-root-relative, for mirroring and logs
  DicomObject object;
};

std::vector<std::uint8_t> read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DicomError("cannot read " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Profile build_profile(const JobConfig& config) {
  Profile profile;
  profile.options = ProfileOptions::parse(config.profile_spec);
  if (config.date_shift_days && !profile.options.date_shift_days) {
    profile.options.date_shift_days = config.date_shift_days;
  }
  profile.table = compose_profile(load_action_table_file(config.action_table_path),
                                  profile.options);
  if (!config.type_policy_path.empty()) {
    profile.type_policy = TypePolicy::load_file(config.type_policy_path);
  }
  if (!config.type2_list_path.empty()) {
    profile.type2_required = load_tag_list_file(config.type2_list_path);
  }
  if (!config.extension_rules_path.empty()) {
    std::ifstream in(config.extension_rules_path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + config.extension_rules_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    profile.clean_rules.extensions = text::load_extension_rules(ss.str());
  }
  for (const std::string& word : config.gazetteer) {
    profile.clean_rules.gazetteer.insert(word);
  }
  profile.salt = config.salt;
  return profile;
}

}  // namespace

int run(const JobConfig& config, RunSummary* summary_out) {
  try {
    config.validate();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  RunSummary summary;
  std::vector<std::string> log_lines;
  std::mutex log_mutex;
  auto log = [&](const std::string& line) {
    std::lock_guard<std::mutex> lock(log_mutex);
    log_lines.push_back(line);
  };

  try {
    Profile profile = build_profile(config);
    SafePrivateKb kb;
    if (!config.safe_private_kb_path.empty()) {
      kb = SafePrivateKb::load_file(config.safe_private_kb_path);
    }
    profile.safe_private = &kb;

    UidMap uids(config.uid_root, config.salt);
    if (!config.uid_map_path.empty()) uids.load_file(config.uid_map_path);

    // Pass 1: parse everything, filter, and build the series view the
    // harmonizer needs (per-instance processing cannot see series-level
    // inconsistencies).
    std::vector<WorkItem> work;
    std::vector<fs::path> inputs;
    if (!fs::exists(config.input_root)) {
      std::cerr << "config error: input root does not exist\n";
      return 2;
    }
    for (const auto& entry : fs::recursive_directory_iterator(config.input_root)) {
      if (entry.is_regular_file()) inputs.push_back(entry.path());
    }
    std::sort(inputs.begin(), inputs.end());
    summary.files_in = inputs.size();

    for (const fs::path& path : inputs) {
      std::string relative = fs::relative(path, config.input_root).string();
      try {
        DicomObject obj = parse_file(read_all(path));
        FilterResult filter = filter_sop_class(obj, config);
        if (filter.decision == FilterDecision::Reject) {
          ++summary.rejected;
          log("reject\t" + relative + "\t" + filter.reason);
          continue;
        }
        work.push_back({path, relative, std::move(obj)});
      } catch (const DicomError& e) {
        if (config.failure_policy == FailurePolicy::Halt) throw;
        ++summary.failed;
        log("fail\t" + relative + "\t" + e.what());
      }
    }

    std::vector<Tag> harmonize_tags = config.harmonize_tags.empty()
                                          ? default_harmonization_tags()
                                          : config.harmonize_tags;
    {
      std::vector<std::pair<std::string, DataSet*>> view;
      view.reserve(work.size());
      for (WorkItem& item : work) view.emplace_back(item.relative, &item.object.dataset);
      for (SeriesGroup& group : group_by_series(std::move(view))) {
        if (group.series_uid.empty()) continue;  // quarantine: nothing to enforce
        HarmonizationReport report = harmonize(group, harmonize_tags);
        for (const TagHarmonization& th : report.tags) {
          if (th.rewritten == 0) continue;
          log("harmonize\t" + group.series_uid + "\t" + th.tag.to_string() + "\t" +
              std::to_string(th.observed.size()) + " values\t" +
              std::to_string(th.rewritten) + " rewritten");
        }
      }
    }

    // Pass 2: per-file deidentification, parallel over files.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> written{0};
    std::atomic<std::size_t> failed{0};
    std::mutex halt_mutex;
    std::exception_ptr halt_error;

    auto worker = [&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= work.size()) return;
        WorkItem& item = work[i];
        try {
          DataSet original = item.object.dataset;  // identity context source
          item.object.dataset =
              strip_unsafe_private(item.object.dataset,
                                   *profile.safe_private,
                                   profile.options.retain_safe_private);

          std::string name, pid;
          if (auto e = original.find(Tag{0x0010, 0x0010})) {
            name = decode_text(e->string_value(), original.charset);
          }
          if (auto e = original.find(Tag{0x0010, 0x0020})) {
            pid = decode_text(e->string_value(), original.charset);
          }
          text::CleanContext ctx =
              text::make_clean_context(name, pid, config.clean_extra_tokens);

          auto [deidentified, audit] = apply_profile(item.object, profile, uids, ctx);

          std::string sop_class;
          if (auto e = deidentified.dataset.find(Tag{0x0008, 0x0016})) {
            sop_class = e->string_value();
          }
          std::string series;
          if (auto e = deidentified.dataset.find(Tag{0x0020, 0x000E})) {
            series = e->string_value();
          }
          for (const PixelMaskSpec& spec : config.pixel_masks) {
            if (spec.selector == "all" || spec.selector == sop_class ||
                spec.selector == series) {
              deidentified = apply_pixel_masks(deidentified, spec);
            }
          }

          std::string sop;
          if (auto e = deidentified.dataset.find(Tag{0x0008, 0x0018})) {
            sop = e->string_value();
          }
          if (sop.empty()) throw DicomError("no SOPInstanceUID after processing");

          std::vector<std::uint8_t> bytes = serialize(deidentified);

          // Mirror the relative directory; the filename becomes the
          // remapped instance UID so no input filename leaks through.
          fs::path rel_dir = fs::path(item.relative).parent_path();
          fs::path out_path = fs::path(config.output_root) / rel_dir / (sop + ".dcm");
          if (!config.dry_run) {
            fs::create_directories(out_path.parent_path());
            std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
            if (!out) throw DicomError("cannot write " + out_path.string());
            out.write(reinterpret_cast<const char*>(bytes.data()),
                      static_cast<std::streamsize>(bytes.size()));
          }
          written.fetch_add(1);
          for (const AuditRecord& record : audit) {
            log("edit\t" + item.relative + "\t" + record.path.to_string() + "\t" +
                std::string(resolved_action_name(record.action)) + "\t" +
                record.category);
          }
          log("write\t" + item.relative + "\t" +
              (rel_dir / (sop + ".dcm")).string());
        } catch (const std::exception& e) {
          if (config.failure_policy == FailurePolicy::Halt) {
            std::lock_guard<std::mutex> lock(halt_mutex);
            if (!halt_error) halt_error = std::current_exception();
            return;
          }
          failed.fetch_add(1);
          log("fail\t" + item.relative + "\t" + e.what());
        }
      }
    };

    unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }
    if (halt_error) std::rethrow_exception(halt_error);

    summary.written = written.load();
    summary.failed += failed.load();

    if (!config.dry_run && !config.uid_map_path.empty()) {
      uids.save_file(config.uid_map_path);
    }

    std::string audit_path = config.audit_log_path.empty()
                                 ? (fs::path(config.output_root) / "audit.log").string()
                                 : config.audit_log_path;
    if (!config.dry_run) {
      fs::create_directories(fs::path(audit_path).parent_path());
      std::ofstream audit(audit_path, std::ios::trunc);
      for (const std::string& line : log_lines) audit << line << '\n';
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    ++summary.failed;
    if (summary_out) *summary_out = summary;
    return 1;
  }

  std::cout << "processed " << summary.written << ", rejected " << summary.rejected
            << ", failed " << summary.failed << " (of " << summary.files_in
            << ")\n";
  if (summary_out) *summary_out = summary;
  return summary.failed == 0 ? 0 : 1;
}

}  // namespace deid
