#include "fewmode/experiments/measurement_record.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "fewmode/core/error.hpp"

namespace fewmode::experiments {
namespace {

constexpr std::string_view kHeader = "trial,outcome,seed";

std::uint64_t parse_u64(std::string_view text, std::size_t line) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InvalidArgumentError("record line " + std::to_string(line) + ": bad integer '" +
                               std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::uint64_t MeasurementRecord::append(std::string outcome, std::uint64_t seed) {
  const auto trial = static_cast<std::uint64_t>(entries_.size());
  entries_.push_back({trial, std::move(outcome), seed});
  return trial;
}

void MeasurementRecord::write(std::ostream& out) const {
  out << kHeader << '\n';
  for (const auto& entry : entries_) {
    out << entry.trial << ',' << entry.outcome << ',' << entry.seed << '\n';
  }
}

void MeasurementRecord::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InvalidArgumentError("cannot open record file '" + path.string() + "' for writing");
  }
  write(out);
  if (!out) {
    throw InvalidArgumentError("failed writing record file '" + path.string() + "'");
  }
}

MeasurementRecord MeasurementRecord::read(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw InvalidArgumentError("record file must start with '" + std::string(kHeader) + "'");
  }
  MeasurementRecord record;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find(',');
    const auto last = line.rfind(',');
    if (first == std::string::npos || first == last) {
      throw InvalidArgumentError("record line " + std::to_string(number) + " is malformed");
    }
    const std::uint64_t trial = parse_u64(std::string_view(line).substr(0, first), number);
    if (trial != record.size()) {
      throw InvalidArgumentError("record line " + std::to_string(number) +
                                 ": trial indices must count up from 0");
    }
    record.append(line.substr(first + 1, last - first - 1),
                  parse_u64(std::string_view(line).substr(last + 1), number));
  }
  return record;
}

MeasurementRecord MeasurementRecord::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidArgumentError("cannot open record file '" + path.string() + "'");
  }
  return read(in);
}

}  // namespace fewmode::experiments
