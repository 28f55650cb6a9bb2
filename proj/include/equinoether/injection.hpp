#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace equinoether {

// Partial injection on positive integers with finite support.  Pairs are kept
// sorted by source; sources and targets are each pairwise distinct.
class FinitePartialInjection {
 public:
  FinitePartialInjection() = default;
  explicit FinitePartialInjection(std::vector<std::pair<int, int>> pairs);

  static FinitePartialInjection identity_on(const std::vector<int>& points);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  std::optional<int> image(int source) const;
  int at(int source) const;  // throws InvalidTuple when undefined

  std::vector<int> sources() const;
  std::vector<int> targets() const;  // in source order, not sorted

  bool strictly_increasing() const;  // order-preserving on its support

  FinitePartialInjection inverse() const;
  // (*this) o inner, defined where the composite is
  FinitePartialInjection compose_after(const FinitePartialInjection& inner) const;

  bool operator==(const FinitePartialInjection&) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

std::string to_string(const FinitePartialInjection& f);

}  // namespace equinoether
