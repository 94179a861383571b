#ifndef TRIDEC_VARTABLE_HPP
#define TRIDEC_VARTABLE_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tridec {

/// Variable table: a list of distinct variable names plus an ordering
/// permutation. `ordering[k]` is the index (into `names`) of the k-th
/// smallest variable, so position k in an exponent vector always refers to
/// the variable of rank k under the current ordering.
class VarTable {
public:
  VarTable() = default;

  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    ordering_.resize(names_.size());
    for (std::size_t i = 0; i < ordering_.size(); ++i) ordering_[i] = i;
    check();
  }

  VarTable(std::vector<std::string> names, std::vector<std::size_t> ordering)
      : names_(std::move(names)), ordering_(std::move(ordering)) {
    check();
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& ordering() const { return ordering_; }

  /// Name of the variable with rank `r` (0 = smallest).
  const std::string& name_of_rank(std::size_t r) const { return names_[ordering_[r]]; }

  /// Rank of a named variable; throws if unknown.
  std::size_t rank_of_name(const std::string& n) const {
    for (std::size_t r = 0; r < ordering_.size(); ++r)
      if (names_[ordering_[r]] == n) return r;
    throw std::out_of_range("unknown variable: " + n);
  }

  bool has_name(const std::string& n) const {
    return std::find(names_.begin(), names_.end(), n) != names_.end();
  }

  /// Table with the same names reordered so that `by_rank[k]` names the k-th
  /// smallest variable. Every name must appear exactly once.
  VarTable with_ordering(const std::vector<std::string>& by_rank) const {
    if (by_rank.size() != names_.size())
      throw std::invalid_argument("ordering must list every variable exactly once");
    std::vector<std::size_t> ord(by_rank.size());
    std::vector<bool> seen(names_.size(), false);
    for (std::size_t r = 0; r < by_rank.size(); ++r) {
      auto it = std::find(names_.begin(), names_.end(), by_rank[r]);
      if (it == names_.end())
        throw std::invalid_argument("unknown variable in ordering: " + by_rank[r]);
      std::size_t id = std::size_t(it - names_.begin());
      if (seen[id]) throw std::invalid_argument("duplicate variable in ordering: " + by_rank[r]);
      seen[id] = true;
      ord[r] = id;
    }
    return VarTable(names_, ord);
  }

  /// rank-in-this -> rank-in-target map for re-indexing exponent vectors.
  std::vector<std::size_t> rank_map_to(const VarTable& target) const {
    if (target.size() != size())
      throw std::invalid_argument("variable tables differ in size");
    std::vector<std::size_t> m(size());
    for (std::size_t r = 0; r < size(); ++r)
      m[r] = target.rank_of_name(name_of_rank(r));
    return m;
  }

  bool operator==(const VarTable& o) const {
    return names_ == o.names_ && ordering_ == o.ordering_;
  }

private:
  void check() const {
    if (ordering_.size() != names_.size())
      throw std::invalid_argument("ordering size mismatch");
    std::vector<bool> seen_id(names_.size(), false);
    for (auto id : ordering_) {
      if (id >= names_.size() || seen_id[id])
        throw std::invalid_argument("ordering is not a permutation");
      seen_id[id] = true;
    }
    std::unordered_map<std::string, int> count;
    for (const auto& n : names_)
      if (++count[n] > 1) throw std::invalid_argument("duplicate variable name: " + n);
  }

  std::vector<std::string> names_;
  std::vector<std::size_t> ordering_;
};

}  // namespace tridec

#endif
