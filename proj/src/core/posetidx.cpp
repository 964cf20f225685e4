#include "core/posetidx.hpp"

#include <numeric>

#include "core/error.hpp"

namespace bdk {

std::size_t IndexSet::position(const std::string& label) const {
  if (auto p = find(label)) return *p;
  throw Error(ErrorCode::UnknownLabel, "unknown index label '" + label + "'", label);
}

std::optional<std::size_t> IndexSet::find(const std::string& label) const {
  auto it = position_.find(label);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::strong_ordering IndexSet::compare(const std::string& i, const std::string& j) const {
  return position(i) <=> position(j);
}

std::vector<IndexSet::Pair> IndexSet::involution_pairs() const {
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < size(); ++i)
    if (sigma_[i] > i) pairs.emplace_back(labels_[i], labels_[sigma_[i]]);
  return pairs;
}

IndexSetPtr make_index_set(std::vector<std::string> ordered_labels,
                           const std::vector<IndexSet::Pair>& involution_pairs) {
  std::shared_ptr<IndexSet> idx(new IndexSet());
  for (std::size_t i = 0; i < ordered_labels.size(); ++i) {
    const std::string& l = ordered_labels[i];
    if (l.empty() || l.find(',') != std::string::npos)
      throw Error(ErrorCode::InvalidLabel, "index labels must be nonempty and contain no ','", l);
    if (!idx->position_.emplace(l, i).second)
      throw Error(ErrorCode::DuplicateLabel, "duplicate index label '" + l + "'", l);
  }
  idx->labels_ = std::move(ordered_labels);
  idx->sigma_.resize(idx->labels_.size());
  std::iota(idx->sigma_.begin(), idx->sigma_.end(), std::size_t{0});

  std::vector<bool> used(idx->labels_.size(), false);
  for (const auto& [a, b] : involution_pairs) {
    for (const auto* l : {&a, &b})
      if (!idx->find(*l))
        throw Error(ErrorCode::UnknownLabelInPair,
                    "involution pair (" + a + "," + b + ") names unknown label '" + *l + "'", *l);
    const std::size_t pa = *idx->find(a), pb = *idx->find(b);
    if (used[pa] || used[pb])
      throw Error(ErrorCode::OverlappingPairs,
                  "label '" + (used[pa] ? a : b) + "' appears in two involution pairs",
                  used[pa] ? a : b);
    used[pa] = used[pb] = true;
    idx->sigma_[pa] = pb;
    idx->sigma_[pb] = pa;
  }
  return idx;
}

bool same_index_set(const IndexSetPtr& a, const IndexSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace bdk
