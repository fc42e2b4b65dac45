// harmonize.hpp - series-level consistency enforcement run before
// deidentification, so PHI planted on a minority of slices is replaced
// wholesale by the series' canonical value.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "deid/dataset.hpp"

namespace deid {

struct SeriesGroup {
  std::string series_uid;  // empty for the quarantine group
  // (file id, dataset) pairs; datasets are rewritten in place.
  std::vector<std::pair<std::string, DataSet*>> members;
};

// Exact partition by (0020,000E); objects lacking the tag land in a
// quarantine group with an empty UID.
std::vector<SeriesGroup> group_by_series(
    std::vector<std::pair<std::string, DataSet*>> corpus);

struct TagHarmonization {
  Tag tag;
  std::map<std::string, std::size_t> observed;  // value -> count
  std::string canonical;
  bool remove_everywhere = false;  // absent in the majority
  std::size_t rewritten = 0;
};

struct HarmonizationReport {
  std::string series_uid;
  std::vector<TagHarmonization> tags;
  std::size_t total_rewrites() const;
};

// Majority vote per listed tag; ties break to the value held by the
// lowest InstanceNumber, then lexicographically. Presence is harmonized
// too: a tag absent in the minority is inserted, absent in the majority
// removed from all members.
HarmonizationReport harmonize(SeriesGroup& group, const std::vector<Tag>& tags);

// Instances whose listed-tag value differs from the group's canonical
// one; zero after harmonization.
std::size_t count_inconsistencies(const SeriesGroup& group,
                                  const std::vector<Tag>& tags);

std::vector<Tag> default_harmonization_tags();

}  // namespace deid
