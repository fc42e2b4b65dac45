#include "deid/harmonize.hpp"

#include <algorithm>
#include <limits>

#include "deid/dictionary.hpp"

namespace deid {

std::vector<Tag> default_harmonization_tags() {
  return {Tag{0x0008, 0x103E}, Tag{0x0020, 0x0011}};
}

std::vector<SeriesGroup> group_by_series(
    std::vector<std::pair<std::string, DataSet*>> corpus) {
  std::map<std::string, SeriesGroup> by_uid;
  SeriesGroup quarantine;  // objects without (0020,000E)
  for (auto& [file_id, ds] : corpus) {
    const DataElement* uid = ds->find(Tag{0x0020, 0x000E});
    if (!uid || uid->string_value().empty()) {
      quarantine.members.emplace_back(file_id, ds);
      continue;
    }
    std::string key = uid->string_value();
    SeriesGroup& group = by_uid[key];
    group.series_uid = key;
    group.members.emplace_back(file_id, ds);
  }
  std::vector<SeriesGroup> groups;
  groups.reserve(by_uid.size() + 1);
  for (auto& [uid, group] : by_uid) groups.push_back(std::move(group));
  if (!quarantine.members.empty()) groups.push_back(std::move(quarantine));
  return groups;
}

std::size_t HarmonizationReport::total_rewrites() const {
  std::size_t n = 0;
  for (const TagHarmonization& t : tags) n += t.rewritten;
  return n;
}

namespace {

long long instance_number_of(const DataSet& ds) {
  if (const DataElement* e = ds.find(Tag{0x0020, 0x0013})) {
    if (auto v = e->int_value()) return *v;
  }
  return std::numeric_limits<long long>::max();
}

}  // namespace

HarmonizationReport harmonize(SeriesGroup& group, const std::vector<Tag>& tags) {
  HarmonizationReport report;
  report.series_uid = group.series_uid;

  for (Tag tag : tags) {
    TagHarmonization th;
    th.tag = tag;

    std::size_t absent = 0;
    for (auto& [id, ds] : group.members) {
      if (const DataElement* e = ds->find(tag)) {
        ++th.observed[e->string_value()];
      } else {
        ++absent;
      }
    }
    if (th.observed.empty()) {
      report.tags.push_back(std::move(th));
      continue;  // absent everywhere
    }

    // Presence is harmonized too: absent in the majority removes the tag
    // from all members.
    th.remove_everywhere = absent * 2 > group.members.size();
    if (th.remove_everywhere) {
      for (auto& [id, ds] : group.members) {
        if (ds->contains(tag)) {
          ds->erase(tag);
          ++th.rewritten;
        }
      }
      report.tags.push_back(std::move(th));
      continue;
    }

    // Majority value; ties break to the value held by the instance with
    // the lowest InstanceNumber, then lexicographically.
    std::size_t best_count = 0;
    for (const auto& [value, count] : th.observed) {
      best_count = std::max(best_count, count);
    }
    std::vector<std::string> tied;
    for (const auto& [value, count] : th.observed) {
      if (count == best_count) tied.push_back(value);
    }
    if (tied.size() == 1) {
      th.canonical = tied.front();
    } else {
      long long lowest = std::numeric_limits<long long>::max();
      std::string winner;
      bool found = false;
      std::vector<std::pair<long long, std::string>> candidates;
      for (auto& [id, ds] : group.members) {
        const DataElement* e = ds->find(tag);
        if (!e) continue;
        std::string value = e->string_value();
        if (std::find(tied.begin(), tied.end(), value) == tied.end()) continue;
        long long num = instance_number_of(*ds);
        if (!found || num < lowest ||
            (num == lowest && value < winner)) {
          lowest = num;
          winner = value;
          found = true;
        }
      }
      th.canonical = winner;
    }

    VR vr = dict_vr(tag);
    if (vr == VR::UN) vr = VR::LO;
    for (auto& [id, ds] : group.members) {
      const DataElement* e = ds->find(tag);
      if (e && e->string_value() == th.canonical) continue;
      ds->set_string(tag, e ? e->vr : vr, th.canonical);
      ++th.rewritten;
    }
    report.tags.push_back(std::move(th));
  }
  return report;
}

std::size_t count_inconsistencies(const SeriesGroup& group,
                                  const std::vector<Tag>& tags) {
  std::size_t findings = 0;
  for (Tag tag : tags) {
    std::map<std::string, std::size_t> values;
    std::size_t present = 0;
    for (const auto& [id, ds] : group.members) {
      if (const DataElement* e = ds->find(tag)) {
        ++values[e->string_value()];
        ++present;
      }
    }
    if (values.empty()) continue;
    if (values.size() == 1 && present == group.members.size()) continue;
    // Every instance off the plurality value is a finding, as is each
    // absent-vs-present mismatch.
    std::size_t majority = 0;
    for (const auto& [value, count] : values) majority = std::max(majority, count);
    findings += group.members.size() - majority;
  }
  return findings;
}

}  // namespace deid
