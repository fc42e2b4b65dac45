#include "deid/uid_map.hpp"

#include <openssl/evp.h>

#include <array>
#include <span>
#include <vector>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "deid/errors.hpp"

namespace deid {

bool uid_is_valid(std::string_view uid) {
  if (uid.empty() || uid.size() > 64) return false;
  std::size_t start = 0;
  while (true) {
    auto dot = uid.find('.', start);
    std::string_view comp = dot == std::string_view::npos
                                ? uid.substr(start)
                                : uid.substr(start, dot - start);
    if (comp.empty()) return false;
    for (char c : comp) {
      if (c < '0' || c > '9') return false;
    }
    if (comp.size() > 1 && comp[0] == '0') return false;
    if (dot == std::string_view::npos) return true;
    start = dot + 1;
  }
}

namespace {

std::array<std::uint8_t, 32> sha256(std::string_view data) {
  std::array<std::uint8_t, 32> digest{};
  unsigned len = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr);
  return digest;
}

// Big-endian bytes -> decimal string, leading zeros stripped.
std::string to_decimal(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> digits{0};  // base-10, most significant first
  for (std::uint8_t byte : bytes) {
    unsigned carry = byte;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      unsigned v = static_cast<unsigned>(*it) * 256 + carry;
      *it = static_cast<std::uint8_t>(v % 10);
      carry = v / 10;
    }
    while (carry) {
      digits.insert(digits.begin(), static_cast<std::uint8_t>(carry % 10));
      carry /= 10;
    }
  }
  std::string out;
  bool leading = true;
  for (std::uint8_t d : digits) {
    if (leading && d == 0) continue;
    leading = false;
    out += static_cast<char>('0' + d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string UidMap::generate(std::string_view uid, unsigned attempt) const {
  std::string material = salt_;
  material += '|';
  material += uid;
  if (attempt > 0) {
    material += "|#";
    material += std::to_string(attempt);
  }
  auto digest = sha256(material);
  // 16 bytes give up to 39 decimal digits; truncate to stay within 64.
  std::string decimal = to_decimal(std::span(digest).first(16));
  std::size_t budget = 64 - root_.size() - 1;
  if (decimal.size() > budget) decimal.resize(budget);
  if (decimal.size() > 1 && decimal[0] == '0') decimal.erase(0, 1);
  return root_ + "." + decimal;
}

std::string UidMap::remap(std::string_view uid) {
  if (!uid_is_valid(uid)) {
    throw InvalidUid("not a valid UID: '" + std::string(uid) + "'");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto it = forward_.find(uid); it != forward_.end()) return it->second;
  // A UID we previously minted maps to itself, so a second pass over
  // already-deidentified data is a fixed point.
  if (reverse_.count(uid)) return std::string(uid);

  for (unsigned attempt = 0;; ++attempt) {
    std::string candidate = generate(uid, attempt);
    if (candidate == uid) continue;
    auto [it, inserted] = reverse_.try_emplace(candidate, std::string(uid));
    if (!inserted) continue;  // hash collision, retry deterministically
    forward_.emplace(std::string(uid), candidate);
    return candidate;
  }
}

std::string UidMap::mint(std::string_view material) {
  // '<' cannot occur in a real UID, so these keys never collide with
  // remapped originals.
  std::string key = "<mint>" + std::string(material);
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto it = forward_.find(key); it != forward_.end()) return it->second;
  for (unsigned attempt = 0;; ++attempt) {
    std::string candidate = generate(key, attempt);
    auto [it, inserted] = reverse_.try_emplace(candidate, key);
    if (!inserted) continue;
    forward_.emplace(key, candidate);
    return candidate;
  }
}

std::optional<std::string> UidMap::lookup(std::string_view uid) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = forward_.find(uid);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::size_t UidMap::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return forward_.size();
}

void UidMap::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;  // first run: nothing persisted yet
  std::lock_guard<std::mutex> lock(mutex_);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) continue;
    std::string original = line.substr(0, tab);
    std::string replacement = line.substr(tab + 1);
    forward_[original] = replacement;
    reverse_[replacement] = original;
  }
}

void UidMap::save_file(const std::string& path) const {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DicomError("cannot write " + tmp.string());
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& [original, replacement] : forward_) {
      out << original << '\t' << replacement << '\n';
    }
  }
  fs::rename(tmp, target);
}

std::map<std::string, std::string> UidMap::snapshot() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return {forward_.begin(), forward_.end()};
}

}  // namespace deid
