#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fewmode::experiments {

struct RecordEntry {
  std::uint64_t trial;
  std::string outcome;
  std::uint64_t seed;

  friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

/// Append-only log of registered outcomes.
///
/// Trial indices count up from 0. Entries cannot be edited or removed; the
/// only mutation is `append`.
///
/// File form: header `trial,outcome,seed`, then one row per entry.
class MeasurementRecord {
 public:
  std::uint64_t append(std::string outcome, std::uint64_t seed);

  std::span<const RecordEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  void write(std::ostream& out) const;
  void save(const std::filesystem::path& path) const;
  static MeasurementRecord read(std::istream& in);
  static MeasurementRecord load(const std::filesystem::path& path);

  friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;

 private:
  std::vector<RecordEntry> entries_;
};

}  // namespace fewmode::experiments
