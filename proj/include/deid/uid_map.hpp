// uid_map.hpp - deterministic original->replacement UID mapping shared
// across a whole corpus run.

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace deid {

// Accepts digits-and-dots UIDs, components without leading zeros, <= 64 chars.
bool uid_is_valid(std::string_view uid);

class UidMap {
 public:
  UidMap() = default;
  UidMap(std::string root_prefix, std::string salt)
      : root_(std::move(root_prefix)), salt_(std::move(salt)) {}

  // Returns the existing mapping or mints a new replacement from a salted
  // hash of the original. Replacements of earlier calls map to themselves
  // so reprocessing already-deidentified data is stable. Thread-safe.
  std::string remap(std::string_view uid);

  // Deterministic UID for non-UID material (dummy slots). Recorded under
  // a synthetic key so the minted value maps to itself on reprocessing.
  std::string mint(std::string_view material);

  std::optional<std::string> lookup(std::string_view uid) const;
  std::size_t size() const;

  const std::string& root() const { return root_; }
  void set_root(std::string root) { root_ = std::move(root); }
  void set_salt(std::string salt) { salt_ = std::move(salt); }

  // Line-oriented `original<TAB>replacement` UTF-8 persistence. load()
  // merges into the current map; save() writes atomically (tmp + rename).
  void load_file(const std::string& path);
  void save_file(const std::string& path) const;

  std::map<std::string, std::string> snapshot() const;

 private:
  std::string generate(std::string_view uid, unsigned attempt) const;

  mutable std::mutex mutex_;
  std::string root_ = "2.25";
  std::string salt_;
  std::map<std::string, std::string, std::less<>> forward_;
  std::map<std::string, std::string, std::less<>> reverse_;
};

}  // namespace deid
