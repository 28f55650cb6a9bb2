#include "equinoether/injection.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "equinoether/errors.hpp"

namespace equinoether {

FinitePartialInjection::FinitePartialInjection(
    std::vector<std::pair<int, int>> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::set<int> targets;
  int prev_source = 0;
  for (const auto& [s, t] : pairs_) {
    if (s < 1 || t < 1)
      throw InvalidTuple("injection entries must be positive");
    if (s == prev_source)
      throw InvalidTuple("repeated source " + std::to_string(s));
    if (!targets.insert(t).second)
      throw InvalidTuple("repeated target " + std::to_string(t));
    prev_source = s;
  }
}

FinitePartialInjection FinitePartialInjection::identity_on(
    const std::vector<int>& points) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(points.size());
  for (int p : points) pairs.emplace_back(p, p);
  return FinitePartialInjection(std::move(pairs));
}

std::optional<int> FinitePartialInjection::image(int source) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(),
                             std::pair<int, int>{source, 0});
  if (it != pairs_.end() && it->first == source) return it->second;
  return std::nullopt;
}

int FinitePartialInjection::at(int source) const {
  auto img = image(source);
  if (!img)
    throw InvalidTuple("injection undefined at " + std::to_string(source));
  return *img;
}

std::vector<int> FinitePartialInjection::sources() const {
  std::vector<int> out;
  out.reserve(pairs_.size());
  for (const auto& [s, t] : pairs_) out.push_back(s);
  return out;
}

std::vector<int> FinitePartialInjection::targets() const {
  std::vector<int> out;
  out.reserve(pairs_.size());
  for (const auto& [s, t] : pairs_) out.push_back(t);
  return out;
}

bool FinitePartialInjection::strictly_increasing() const {
  for (std::size_t i = 1; i < pairs_.size(); ++i)
    if (pairs_[i - 1].second >= pairs_[i].second) return false;
  return true;
}

FinitePartialInjection FinitePartialInjection::inverse() const {
  std::vector<std::pair<int, int>> flipped;
  flipped.reserve(pairs_.size());
  for (const auto& [s, t] : pairs_) flipped.emplace_back(t, s);
  return FinitePartialInjection(std::move(flipped));
}

FinitePartialInjection FinitePartialInjection::compose_after(
    const FinitePartialInjection& inner) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [s, t] : inner.pairs_)
    if (auto u = image(t)) out.emplace_back(s, *u);
  return FinitePartialInjection(std::move(out));
}

std::string to_string(const FinitePartialInjection& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& [s, t] : f.pairs()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(s) + "->" + std::to_string(t);
  }
  return out + "}";
}

}  // namespace equinoether
