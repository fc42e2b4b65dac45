// deid_main.cpp - command-line front end: run / inspect / score.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "deid/codec.hpp"
#include "deid/dictionary.hpp"
#include "deid/errors.hpp"
#include "deid/pipeline.hpp"
#include "deid/scorer.hpp"

namespace {

int cmd_inspect(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 1;
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  deid::DicomObject obj = deid::parse_file(bytes);

  std::cout << "transfer syntax: " << obj.transfer_syntax << "\n";
  deid::walk(obj.dataset, [](const deid::ElementPath& p, const deid::DataElement& e) {
    std::string indent(p.steps.size() * 2, ' ');
    const deid::DictEntry* entry = deid::dict_lookup(e.tag);
    std::cout << indent << e.tag.to_string() << " " << deid::vr_code(e.vr);
    if (e.is_sequence()) {
      std::cout << " <" << e.items.size() << " items>";
    } else {
      std::string value = e.string_value();
      if (deid::vr_is_string(e.vr)) {
        if (value.size() > 60) value = value.substr(0, 57) + "...";
        std::cout << " [" << value << "]";
      } else {
        std::cout << " (" << e.raw.size() << " bytes)";
      }
    }
    if (entry) std::cout << "  # " << entry->keyword;
    std::cout << "\n";
  });
  return 0;
}

int cmd_score(const std::string& outputs, const std::string& key_path,
              const std::string& map_path, const std::string& report_path) {
  auto key = deid::load_answer_key_file(key_path);
  deid::UidMap map;
  if (!map_path.empty()) map.load_file(map_path);
  deid::ScoreReport report = deid::score(outputs, key, map);
  std::cout << report.render_table();
  for (const deid::ScoreFailure& failure : report.failures) {
    std::cout << "  FAIL " << std::string(deid::score_category_name(failure.entry.category))
              << " " << failure.entry.instance_uid << " "
              << failure.entry.path.to_string() << ": " << failure.detail << "\n";
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::trunc);
    out << report.render_machine();
  }
  return report.total_fail() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DICOM deidentification toolkit"};
  app.require_subcommand(1);

  // --- run ---
  auto* run_cmd = app.add_subcommand("run", "deidentify a directory tree");
  std::string config_path, input, output, profile, uid_map, salt_env, audit_log;
  unsigned jobs = 0;
  bool dry_run = false;
  run_cmd->add_option("--config", config_path, "job configuration file");
  run_cmd->add_option("--input", input, "input root (overrides config)");
  run_cmd->add_option("--output", output, "output root (overrides config)");
  run_cmd->add_option("--profile", profile,
                      "e.g. basic+cleandesc+retainsafeprivate");
  run_cmd->add_option("--uid-map", uid_map, "UID map persistence file");
  run_cmd->add_option("--salt-env", salt_env,
                      "environment variable holding the project salt");
  run_cmd->add_option("--audit-log", audit_log, "audit log path");
  run_cmd->add_option("--jobs", jobs, "worker threads");
  run_cmd->add_flag("--dry-run", dry_run, "process without writing");

  // --- inspect ---
  auto* inspect_cmd = app.add_subcommand("inspect", "dump a file's dataset");
  std::string inspect_path;
  inspect_cmd->add_option("file", inspect_path, "DICOM file")->required();

  // --- score ---
  auto* score_cmd = app.add_subcommand("score", "grade outputs against a key");
  std::string outputs_dir, key_path, score_map, report_path;
  score_cmd->add_option("--outputs", outputs_dir, "deidentified tree")->required();
  score_cmd->add_option("--key", key_path, "answer key CSV")->required();
  score_cmd->add_option("--uid-map", score_map, "UID map used by the run");
  score_cmd->add_option("--report", report_path, "machine-readable report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      deid::JobConfig cfg;
      if (!config_path.empty()) cfg = deid::load_config_file(config_path);
      if (!input.empty()) cfg.input_root = input;
      if (!output.empty()) cfg.output_root = output;
      if (!profile.empty()) cfg.profile_spec = profile;
      if (!uid_map.empty()) cfg.uid_map_path = uid_map;
      if (!audit_log.empty()) cfg.audit_log_path = audit_log;
      if (jobs > 0) cfg.jobs = jobs;
      if (dry_run) cfg.dry_run = true;
      if (!salt_env.empty()) {
        cfg.salt_env = salt_env;
        if (const char* salt = std::getenv(salt_env.c_str())) cfg.salt = salt;
      }
      return deid::run(cfg);
    }
    if (inspect_cmd->parsed()) return cmd_inspect(inspect_path);
    if (score_cmd->parsed()) {
      return cmd_score(outputs_dir, key_path, score_map, report_path);
    }
  } catch (const deid::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
