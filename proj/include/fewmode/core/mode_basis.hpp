#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fewmode {

// Which half of a bipartite basis an operation refers to.
enum class Factor { left, right };

/// Ordered set of distinct mode labels.
///
/// The order is part of the identity: {"A1","A2"} and {"A2","A1"} are
/// different bases. A basis built by `product` is composite: its labels are
/// "l⊗r" in row-major order (left index major) and it remembers the two
/// factor bases, which is what partial traces and local unitaries use.
///
/// Copies are cheap; the label storage is shared and immutable.
class ModeBasis {
 public:
  explicit ModeBasis(std::vector<std::string> labels);
  ModeBasis(std::initializer_list<std::string> labels)
      : ModeBasis(std::vector<std::string>(labels)) {}

  static ModeBasis product(const ModeBasis& left, const ModeBasis& right);

  std::size_t dimension() const { return data_->labels.size(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(std::size_t index) const { return data_->labels.at(index); }

  std::optional<std::size_t> find(std::string_view label) const;
  // Throws BasisError for an unknown label.
  std::size_t index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  bool is_bipartite() const { return data_->left != nullptr; }
  // Both throw BipartitionError on a simple basis.
  const ModeBasis& left() const;
  const ModeBasis& right() const;
  const ModeBasis& factor(Factor which) const {
    return which == Factor::left ? left() : right();
  }

  // Same labels, possibly in a different order.
  bool same_label_set(const ModeBasis& other) const;

  friend bool operator==(const ModeBasis& a, const ModeBasis& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    std::shared_ptr<const ModeBasis> left;
    std::shared_ptr<const ModeBasis> right;
  };
  explicit ModeBasis(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

inline constexpr std::string_view kProductSeparator = "⊗";

std::string composite_label(std::string_view left, std::string_view right);

}  // namespace fewmode
