#include "circuitsplit/split_system.hpp"

#include <algorithm>
#include <set>

#include "circuitsplit/error.hpp"

namespace circuitsplit {

std::vector<int> canonical_side(std::vector<int> side, const std::vector<int>& labels) {
  std::sort(side.begin(), side.end());
  if (!labels.empty() && std::binary_search(side.begin(), side.end(), labels.front())) {
    std::vector<int> other;
    std::set_difference(labels.begin(), labels.end(), side.begin(), side.end(), std::back_inserter(other));
    return other;
  }
  return side;
}

bool is_arc(const std::vector<int>& side, const std::vector<int>& order) {
  const std::size_t n = order.size();
  if (side.empty() || side.size() >= n) return false;
  std::set<int> members(side.begin(), side.end());
  // Count positions where membership changes going around the cycle.
  std::size_t changes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool a = members.count(order[i]) > 0;
    bool b = members.count(order[(i + 1) % n]) > 0;
    if (a != b) ++changes;
  }
  return changes == 2;
}

WeightedSplitSystem::WeightedSplitSystem(std::vector<int> order, std::vector<Split> splits)
    : order_(std::move(order)), splits_(std::move(splits)) {
  const auto labels = this->labels();
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw DomainError("split system order repeats a label");
  }
  for (auto& s : splits_) {
    for (int x : s.side) {
      if (!std::binary_search(labels.begin(), labels.end(), x)) {
        throw DomainError("split side uses unknown label " + std::to_string(x), {{"sideA", s.side}});
      }
    }
    if (!is_arc(s.side, order_)) {
      throw DomainError("split is not circular for the given order", {{"sideA", s.side}});
    }
    s.side = canonical_side(std::move(s.side), labels);
    if (!s.weight.is_finite() || s.weight.sign() <= 0) {
      throw DomainError("split weights must be finite and positive",
                        {{"sideA", s.side}, {"w", s.weight.to_string()}});
    }
  }
  std::sort(splits_.begin(), splits_.end(), [](const Split& a, const Split& b) { return a.side < b.side; });
  for (std::size_t i = 1; i < splits_.size(); ++i) {
    if (splits_[i - 1].side == splits_[i].side) {
      throw DomainError("duplicate split", {{"sideA", splits_[i].side}});
    }
  }
}

std::vector<int> WeightedSplitSystem::labels() const {
  std::vector<int> l = order_;
  std::sort(l.begin(), l.end());
  return l;
}

CompactifiedSplitSystem::CompactifiedSplitSystem(int n, std::vector<WeightedSplitSystem> parts)
    : n_(n), parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), [](const WeightedSplitSystem& a, const WeightedSplitSystem& b) {
    return a.labels() < b.labels();
  });
  std::vector<int> seen(n_, 0);
  for (const auto& p : parts_) {
    if (p.order().empty()) throw DomainError("empty part in compactified split system");
    if (p.order() != p.labels()) {
      throw DomainError("parts must use the clockwise order of their labels", {{"labels", p.order()}});
    }
    for (int l : p.order()) {
      if (l < 1 || l > n_ || seen[l - 1]++) {
        throw DomainError("parts must partition the labels 1..n", {{"label", l}});
      }
    }
  }
  for (int l = 1; l <= n_; ++l) {
    if (!seen[l - 1]) throw DomainError("label missing from partition", {{"label", l}});
  }
  if (!is_noncrossing(partition())) throw DomainError("partition is crossing");
}

SetPartition CompactifiedSplitSystem::partition() const {
  SetPartition p;
  for (const auto& part : parts_) p.push_back(part.labels());
  return p;
}

std::size_t CompactifiedSplitSystem::split_count() const {
  std::size_t k = 0;
  for (const auto& p : parts_) k += p.splits().size();
  return k;
}

WeightedSplitSystem unweighted(const WeightedSplitSystem& s) {
  std::vector<Split> splits;
  for (const auto& sp : s.splits()) splits.push_back({sp.side, ExtRat(1)});
  return WeightedSplitSystem(s.order(), std::move(splits));
}

CompactifiedSplitSystem unweighted(const CompactifiedSplitSystem& s) {
  std::vector<WeightedSplitSystem> parts;
  for (const auto& p : s.parts()) parts.push_back(unweighted(p));
  return CompactifiedSplitSystem(s.n(), std::move(parts));
}

nlohmann::json split_system_to_json(const CompactifiedSplitSystem& s) {
  nlohmann::json j;
  j["n"] = s.n();
  j["partition"] = s.partition();
  auto parts = nlohmann::json::array();
  for (const auto& p : s.parts()) {
    auto splits = nlohmann::json::array();
    for (const auto& sp : p.splits()) splits.push_back({{"sideA", sp.side}, {"w", sp.weight.to_string()}});
    parts.push_back({{"labels", p.order()}, {"splits", std::move(splits)}});
  }
  j["parts"] = std::move(parts);
  return j;
}

CompactifiedSplitSystem split_system_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<WeightedSplitSystem> parts;
    for (const auto& p : j.at("parts")) {
      std::vector<Split> splits;
      for (const auto& sp : p.at("splits")) {
        ExtRat w(1);
        if (sp.contains("w")) {
          const auto& wj = sp.at("w");
          w = wj.is_string() ? ExtRat::parse(wj.get<std::string>()) : ExtRat(wj.get<long>());
        }
        splits.push_back({sp.at("sideA").get<std::vector<int>>(), w});
      }
      parts.emplace_back(p.at("labels").get<std::vector<int>>(), std::move(splits));
    }
    CompactifiedSplitSystem out(n, std::move(parts));
    if (j.contains("partition")) {
      auto given = canonical_partition(j.at("partition").get<SetPartition>());
      if (given != out.partition()) throw DomainError("'partition' disagrees with the listed parts");
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed split system: ") + e.what());
  }
}

CompactifiedSplitSystem parse_split_system(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
  return split_system_from_json(j);
}

}  // namespace circuitsplit
