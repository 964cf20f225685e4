#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bdk {

/// Finite linearly ordered label set with an involution. Order is the
/// declared sequence; labels are opaque (no numeric interpretation).
class IndexSet {
 public:
  using Pair = std::pair<std::string, std::string>;

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t pos) const { return labels_.at(pos); }

  /// Throws UnknownLabel.
  std::size_t position(const std::string& label) const;
  std::optional<std::size_t> find(const std::string& label) const;

  std::size_t sigma(std::size_t pos) const { return sigma_.at(pos); }
  const std::string& sigma(const std::string& label) const { return labels_[sigma_[position(label)]]; }

  /// Positional comparison; throws UnknownLabel.
  std::strong_ordering compare(const std::string& i, const std::string& j) const;

  /// The swapped pairs, each listed once with the earlier label first.
  std::vector<Pair> involution_pairs() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.labels_ == b.labels_ && a.sigma_ == b.sigma_;
  }

 private:
  friend std::shared_ptr<const IndexSet> make_index_set(std::vector<std::string>,
                                                        const std::vector<Pair>&);
  IndexSet() = default;

  std::vector<std::string> labels_;
  std::vector<std::size_t> sigma_;
  std::unordered_map<std::string, std::size_t> position_;
};

using IndexSetPtr = std::shared_ptr<const IndexSet>;

/// Labels must be nonempty, distinct and free of ',' (block keys use it).
/// Throws DuplicateLabel, UnknownLabelInPair, OverlappingPairs, InvalidLabel.
IndexSetPtr make_index_set(std::vector<std::string> ordered_labels,
                           const std::vector<IndexSet::Pair>& involution_pairs);

bool same_index_set(const IndexSetPtr& a, const IndexSetPtr& b);

}  // namespace bdk
