#include "fewmode/core/mode_basis.hpp"

#include <algorithm>
#include <unordered_set>

#include "fewmode/core/error.hpp"

namespace fewmode {
namespace {

void validate_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) {
    throw BasisError("mode basis needs at least one label");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw BasisError("mode label must not be empty");
    }
    // Labels end up in CSV cells and record files.
    if (label.find_first_of(",\"\r\n") != std::string::npos) {
      throw BasisError("mode label '" + label + "' contains a reserved character");
    }
    if (!seen.insert(label).second) {
      throw BasisError("duplicate mode label '" + label + "'");
    }
  }
}

}  // namespace

std::string composite_label(std::string_view left, std::string_view right) {
  std::string out;
  out.reserve(left.size() + kProductSeparator.size() + right.size());
  out.append(left).append(kProductSeparator).append(right);
  return out;
}

ModeBasis::ModeBasis(std::vector<std::string> labels) {
  validate_labels(labels);
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  data_ = std::move(data);
}

ModeBasis ModeBasis::product(const ModeBasis& left, const ModeBasis& right) {
  for (const auto& label : left.labels()) {
    if (right.contains(label)) {
      throw BasisError("factor bases share the label '" + label + "'");
    }
  }
  std::vector<std::string> labels;
  labels.reserve(left.dimension() * right.dimension());
  for (const auto& l : left.labels()) {
    for (const auto& r : right.labels()) {
      labels.push_back(composite_label(l, r));
    }
  }
  validate_labels(labels);
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  data->left = std::make_shared<const ModeBasis>(left);
  data->right = std::make_shared<const ModeBasis>(right);
  return ModeBasis(std::shared_ptr<const Data>(std::move(data)));
}

std::optional<std::size_t> ModeBasis::find(std::string_view label) const {
  const auto& labels = data_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - labels.begin());
}

std::size_t ModeBasis::index_of(std::string_view label) const {
  if (auto index = find(label)) {
    return *index;
  }
  throw BasisError("unknown mode label '" + std::string(label) + "'");
}

const ModeBasis& ModeBasis::left() const {
  if (!is_bipartite()) {
    throw BipartitionError("basis has no bipartition");
  }
  return *data_->left;
}

const ModeBasis& ModeBasis::right() const {
  if (!is_bipartite()) {
    throw BipartitionError("basis has no bipartition");
  }
  return *data_->right;
}

bool ModeBasis::same_label_set(const ModeBasis& other) const {
  if (dimension() != other.dimension()) {
    return false;
  }
  return std::all_of(labels().begin(), labels().end(),
                     [&](const std::string& l) { return other.contains(l); });
}

bool operator==(const ModeBasis& a, const ModeBasis& b) {
  if (a.data_ == b.data_) {
    return true;
  }
  if (a.labels() != b.labels() || a.is_bipartite() != b.is_bipartite()) {
    return false;
  }
  return !a.is_bipartite() || (a.left() == b.left() && a.right() == b.right());
}

}  // namespace fewmode
