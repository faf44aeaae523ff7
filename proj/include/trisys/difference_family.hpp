#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trisys/common.hpp"
#include "trisys/group.hpp"

namespace trisys {

/// Base triple, kept sorted in canonical element order.
using Block = std::array<Element, 3>;

inline Block make_block(Element a, Element b, Element c) {
  Block blk{std::move(a), std::move(b), std::move(c)};
  std::sort(blk.begin(), blk.end());
  return blk;
}

/// Set of subgroups with pairwise trivial intersections. The type multiset
/// (order -> count) is written {2^f, 3^e} in the usual notation.
struct PartialSpread {
  GroupSpec group;
  std::vector<Subgroup> members;  // each sorted, identity included

  std::map<int, int> type() const {
    std::map<int, int> t;
    for (const Subgroup& s : members) ++t[static_cast<int>(s.size())];
    return t;
  }
  int count_of_order(int d) const {
    int c = 0;
    for (const Subgroup& s : members) c += static_cast<int>(s.size()) == d;
    return c;
  }
  /// Union of all members (identity included when there is any member).
  std::set<Element> covered() const {
    std::set<Element> u;
    for (const Subgroup& s : members) u.insert(s.begin(), s.end());
    return u;
  }
};

inline PartialSpread trivial_spread(GroupSpec g) { return PartialSpread{std::move(g), {}}; }

/// Members must be genuine subgroups meeting pairwise in the identity only.
inline bool validate_spread(const PartialSpread& spread) {
  for (const Subgroup& s : spread.members)
    if (!spread.group.is_subgroup(s)) return false;
  for (std::size_t i = 0; i < spread.members.size(); ++i)
    for (std::size_t j = i + 1; j < spread.members.size(); ++j) {
      std::vector<Element> common;
      std::set_intersection(spread.members[i].begin(), spread.members[i].end(),
                            spread.members[j].begin(), spread.members[j].end(),
                            std::back_inserter(common));
      if (common.size() != 1) return false;  // exactly the identity
    }
  return true;
}

/// Set of base triples over a group.
struct DifferenceFamily {
  GroupSpec group;
  std::vector<Block> blocks;
};

/// The multiset of right differences x - y over ordered pairs of distinct
/// elements within each block, returned sorted (6 entries per block).
inline std::vector<Element> delta(const DifferenceFamily& fam) {
  std::vector<Element> out;
  out.reserve(fam.blocks.size() * 6);
  for (const Block& blk : fam.blocks)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) out.push_back(fam.group.right_difference(blk[static_cast<std::size_t>(i)],
                                                             blk[static_cast<std::size_t>(j)]));
  std::sort(out.begin(), out.end());
  return out;
}

struct DfCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks the relative difference family property: delta has no repeats,
/// avoids every element of the spread members, and covers everything outside
/// their union exactly once.
inline DfCheck validate_df(const DifferenceFamily& fam, const PartialSpread& spread) {
  if (fam.group.descriptor() != spread.group.descriptor())
    throw std::invalid_argument("difference family and spread live in different groups");
  for (const Block& blk : fam.blocks)
    if (blk[0] == blk[1] || blk[1] == blk[2] || blk[0] == blk[2])
      return {false, "block with repeated element " + to_string(blk[0])};

  std::vector<Element> diffs = delta(fam);
  for (std::size_t i = 1; i < diffs.size(); ++i)
    if (diffs[i] == diffs[i - 1]) return {false, "repeated difference " + to_string(diffs[i])};

  std::set<Element> inside = spread.covered();
  if (spread.members.empty()) inside.insert(fam.group.identity());
  std::size_t d = 0;
  for (const Element& g : fam.group.elements()) {
    bool hit = d < diffs.size() && diffs[d] == g;
    if (hit) ++d;
    bool in_spread = inside.count(g) > 0;
    if (in_spread && hit) return {false, "difference " + to_string(g) + " lies in the spread"};
    if (!in_spread && !hit && !fam.group.is_identity(g))
      return {false, "element " + to_string(g) + " not covered"};
  }
  if (d != diffs.size()) return {false, "difference outside the group"};  // unreachable
  return {true, ""};
}

/// Derives the spread from coverage: the non-identity elements missed by
/// delta must partition into cyclic subgroups whose orders come from
/// `allowed`. Returns nothing when delta has repeats or no such partition
/// exists.
inline std::optional<PartialSpread> infer_spread(const DifferenceFamily& fam,
                                                 const std::vector<int>& allowed = {2, 3}) {
  std::vector<Element> diffs = delta(fam);
  for (std::size_t i = 1; i < diffs.size(); ++i)
    if (diffs[i] == diffs[i - 1]) return std::nullopt;

  std::set<Element> uncovered;
  {
    std::size_t d = 0;
    for (const Element& g : fam.group.elements()) {
      if (d < diffs.size() && diffs[d] == g) {
        ++d;
        continue;
      }
      if (!fam.group.is_identity(g)) uncovered.insert(g);
    }
    if (d != diffs.size()) return std::nullopt;  // some difference repeated or invalid
  }

  // Claim elements by decreasing order so that order-2 elements inside an
  // order-4 member are not split off on their own.
  std::vector<Element> queue(uncovered.begin(), uncovered.end());
  std::stable_sort(queue.begin(), queue.end(), [&](const Element& a, const Element& b) {
    return fam.group.element_order(a) > fam.group.element_order(b);
  });

  std::vector<Subgroup> members;
  for (const Element& g : queue) {
    if (!uncovered.count(g)) continue;
    Subgroup s = fam.group.cyclic_subgroup(g);
    if (std::find(allowed.begin(), allowed.end(), static_cast<int>(s.size())) == allowed.end())
      return std::nullopt;
    for (const Element& h : s) {
      if (fam.group.is_identity(h)) continue;
      if (!uncovered.count(h)) return std::nullopt;  // straddles the covered part
    }
    for (const Element& h : s)
      if (!fam.group.is_identity(h)) uncovered.erase(h);
    members.push_back(std::move(s));
  }
  std::sort(members.begin(), members.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return PartialSpread{fam.group, std::move(members)};
}

struct DfSearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<DifferenceFamily> family;
  long long nodes = 0;
};

namespace detail {

class DfSearcher {
 public:
  DfSearcher(const GroupSpec& g, const PartialSpread& spread, long long node_limit)
      : group_(g), node_limit_(node_limit), elements_(g.elements()) {
    std::size_t n = elements_.size();
    uncovered_.assign(n, false);
    std::set<Element> inside = spread.covered();
    for (std::size_t i = 0; i < n; ++i)
      uncovered_[i] = !group_.is_identity(elements_[i]) && !inside.count(elements_[i]);
    remaining_ = static_cast<long long>(std::count(uncovered_.begin(), uncovered_.end(), true));
  }

  SearchStatus run(std::vector<Block>& out) {
    if (remaining_ % 6 != 0) return SearchStatus::Absent;
    bool found = search(out);
    if (found) return SearchStatus::Found;
    return exhausted_ ? SearchStatus::Exhausted : SearchStatus::Absent;
  }

  long long nodes() const { return nodes_; }

 private:
  // Blocks are explored as {identity, a, b}; the canonical representative of
  // an orbit under translation-to-identity is the least of its three forms.
  Block canonical(const Element& a, const Element& b) const {
    const Element e = group_.identity();
    Block b1 = make_block(e, a, b);
    Block b2 = make_block(e, group_.inverse(a), group_.right_difference(b, a));
    Block b3 = make_block(e, group_.inverse(b), group_.right_difference(a, b));
    return std::min({b1, b2, b3});
  }

  std::array<long long, 6> block_diffs(const Block& blk) const {
    std::array<long long, 6> d{};
    int t = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j)
          d[static_cast<std::size_t>(t++)] = group_.index_of(
              group_.right_difference(blk[static_cast<std::size_t>(i)],
                                      blk[static_cast<std::size_t>(j)]));
    std::sort(d.begin(), d.end());
    return d;
  }

  bool search(std::vector<Block>& out) {
    if (remaining_ == 0) return true;
    // lowest uncovered element must be a difference of some block
    std::size_t target = 0;
    while (target < uncovered_.size() && !uncovered_[target]) ++target;
    const Element delta_el = elements_[target];
    const Element delta_inv = group_.inverse(delta_el);
    const Element e = group_.identity();

    std::set<Block> candidates;
    for (const Element& t : elements_) {
      if (group_.is_identity(t)) continue;
      if (t != delta_el) candidates.insert(canonical(delta_el, t));
      if (t != delta_inv) candidates.insert(canonical(delta_inv, t));
      Element u = group_.compose(delta_el, t);
      if (!group_.is_identity(u) && u != t) candidates.insert(canonical(t, u));
    }

    for (const Block& blk : candidates) {
      if (blk[0] == blk[1] || blk[1] == blk[2]) continue;
      auto d = block_diffs(blk);
      bool usable = true;
      for (int i = 0; i < 6 && usable; ++i) {
        if (i > 0 && d[static_cast<std::size_t>(i)] == d[static_cast<std::size_t>(i - 1)])
          usable = false;  // block collides with itself
        else
          usable = uncovered_[static_cast<std::size_t>(d[static_cast<std::size_t>(i)])];
      }
      if (!usable) continue;
      if (++nodes_ > node_limit_) {
        exhausted_ = true;
        return false;
      }
      for (long long idx : d) uncovered_[static_cast<std::size_t>(idx)] = false;
      remaining_ -= 6;
      out.push_back(blk);
      if (search(out)) return true;
      out.pop_back();
      remaining_ += 6;
      for (long long idx : d) uncovered_[static_cast<std::size_t>(idx)] = true;
      if (exhausted_) return false;
    }
    return false;
  }

  const GroupSpec& group_;
  long long node_limit_;
  long long nodes_ = 0;
  long long remaining_ = 0;
  bool exhausted_ = false;
  std::vector<Element> elements_;
  std::vector<bool> uncovered_;
};

}  // namespace detail

/// Brute-force search for a difference family relative to the given spread.
/// Deterministic; Absent is only returned after full exhaustion. Guarded to
/// small groups, which is all the oracle use cases need.
inline DfSearchResult df_search(const GroupSpec& g, const PartialSpread& spread,
                                long long node_limit = default_node_limit()) {
  if (g.order() > 200) throw std::invalid_argument("df_search is guarded to |G| <= 200");
  if (g.descriptor() != spread.group.descriptor())
    throw std::invalid_argument("spread lives in a different group");
  detail::DfSearcher searcher(g, spread, node_limit);
  std::vector<Block> blocks;
  DfSearchResult out;
  out.status = searcher.run(blocks);
  out.nodes = searcher.nodes();
  if (out.status == SearchStatus::Found) {
    std::sort(blocks.begin(), blocks.end());
    out.family = DifferenceFamily{g, std::move(blocks)};
  }
  return out;
}

}  // namespace trisys
