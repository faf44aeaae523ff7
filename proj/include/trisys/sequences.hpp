#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "trisys/common.hpp"

namespace trisys {

/// k-extended Skolem sequence of order n: (s_1..s_n) with
/// union of {s_i, s_i + i} = {1..2n+1} \ {k}.
struct ExtendedSkolemSequence {
  int n = 0;
  int k = 0;
  std::vector<int> entries;
};

/// k-extended Langford sequence of order n and defect d: gaps are i + d - 1
/// instead of i.
struct ExtendedLangfordSequence {
  int n = 0;
  int d = 1;
  int k = 0;
  std::vector<int> entries;
};

/// Existence predicate for k-extended Skolem sequences of order n:
/// k odd with n = 0,1 (mod 4), or k even with n = 2,3 (mod 4).
inline bool skolem_exists(int n, int k) {
  if (n < 0 || k < 1 || k > 2 * n + 1) throw std::invalid_argument("k must lie in [1, 2n+1]");
  int r = n % 4;
  return (k % 2 == 1) ? (r == 0 || r == 1) : (r == 2 || r == 3);
}

namespace detail {

// Exact-cover style placement of pairs {a, a+gap} over slots {1..2n+1}\{k}.
// The lowest free slot must be the left end of some unplaced pair; gaps are
// tried largest first. A node is pruned when the parity of the free-slot sum
// no longer matches the parity of the unplaced gap sum (every completion
// satisfies sum(free slots) = 2*sum(left ends) + sum(gaps)).
class PairPlacer {
 public:
  PairPlacer(int n, int hole, int gap_lo, long long node_limit)
      : n_(n), slots_(2 * n + 1), gap_lo_(gap_lo), node_limit_(node_limit) {
    free_.assign(static_cast<std::size_t>(slots_ / 64 + 1), ~0ULL);
    for (int s = 1; s <= slots_; ++s)
      if (s != hole) free_parity_ ^= s & 1;
    clear_slot(0);
    clear_slot(hole);
    for (int w = slots_ + 1; w <= 64 * static_cast<int>(free_.size()) - 1; ++w) clear_slot(w);
    for (int i = 0; i < n_; ++i) gap_parity_ ^= (gap_lo_ + i) & 1;
    left_pos_.assign(static_cast<std::size_t>(n_), 0);
  }

  SearchStatus run() {
    if (free_parity_ != gap_parity_) return SearchStatus::Absent;
    return place(n_) ? SearchStatus::Found
                     : (exhausted_ ? SearchStatus::Exhausted : SearchStatus::Absent);
  }

  // left positions per pair index (gap of pair i, 1-based, is gap_lo + i - 1)
  const std::vector<int>& left_positions() const { return left_pos_; }
  long long nodes() const { return nodes_; }

 private:
  bool slot_free(int s) const { return free_[s >> 6] >> (s & 63) & 1; }
  void clear_slot(int s) { free_[s >> 6] &= ~(1ULL << (s & 63)); }
  void set_slot(int s) { free_[s >> 6] |= 1ULL << (s & 63); }

  int lowest_free() const {
    for (std::size_t w = 0; w < free_.size(); ++w)
      if (free_[w]) return static_cast<int>(w * 64) + __builtin_ctzll(free_[w]);
    return -1;
  }

  bool place(int remaining) {
    if (remaining == 0) return true;
    int s = lowest_free();
    for (int idx = n_ - 1; idx >= 0; --idx) {  // largest gap first
      if (left_pos_[static_cast<std::size_t>(idx)] != 0) continue;
      int gap = gap_lo_ + idx;
      int t = s + gap;
      if (t > slots_ || !slot_free(t)) continue;
      if (++nodes_ > node_limit_) {
        exhausted_ = true;
        return false;
      }
      int fp = free_parity_ ^ (s & 1) ^ (t & 1);
      int gp = gap_parity_ ^ (gap & 1);
      if (fp != gp) continue;
      clear_slot(s);
      clear_slot(t);
      left_pos_[static_cast<std::size_t>(idx)] = s;
      free_parity_ = fp;
      gap_parity_ = gp;
      if (place(remaining - 1)) return true;
      free_parity_ ^= (s & 1) ^ (t & 1);
      gap_parity_ ^= gap & 1;
      left_pos_[static_cast<std::size_t>(idx)] = 0;
      set_slot(s);
      set_slot(t);
      if (exhausted_) return false;
    }
    return false;
  }

  int n_;
  int slots_;
  int gap_lo_;
  long long node_limit_;
  long long nodes_ = 0;
  int free_parity_ = 0;
  int gap_parity_ = 0;
  bool exhausted_ = false;
  std::vector<std::uint64_t> free_;
  std::vector<int> left_pos_;
};

}  // namespace detail

struct SkolemSearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<ExtendedSkolemSequence> sequence;
  long long nodes = 0;
};

struct LangfordSearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<ExtendedLangfordSequence> sequence;
  long long nodes = 0;
};

/// Deterministic backtracking search. Absent is returned only after the
/// (parity-pruned but complete) search space is exhausted, so it is a proof
/// of non-existence; Exhausted means the node budget ran out.
inline SkolemSearchResult find_extended_skolem(int n, int k,
                                               long long node_limit = default_node_limit()) {
  if (n < 0 || k < 1 || k > 2 * n + 1) throw std::invalid_argument("k must lie in [1, 2n+1]");
  detail::PairPlacer placer(n, k, 1, node_limit);
  SkolemSearchResult out;
  out.status = placer.run();
  out.nodes = placer.nodes();
  if (out.status == SearchStatus::Found) {
    out.sequence = ExtendedSkolemSequence{n, k, placer.left_positions()};
  }
  return out;
}

inline LangfordSearchResult find_extended_langford(int n, int d, int k,
                                                   long long node_limit = default_node_limit()) {
  if (d < 1) throw std::invalid_argument("defect must be >= 1");
  if (n < 0 || k < 1 || k > 2 * n + 1) throw std::invalid_argument("k must lie in [1, 2n+1]");
  detail::PairPlacer placer(n, k, d, node_limit);
  LangfordSearchResult out;
  out.status = placer.run();
  out.nodes = placer.nodes();
  if (out.status == SearchStatus::Found) {
    out.sequence = ExtendedLangfordSequence{n, d, k, placer.left_positions()};
  }
  return out;
}

namespace detail {

inline bool covers_all_but_hole(const std::vector<int>& entries, int n, int k, int gap_lo) {
  if (static_cast<int>(entries.size()) != n) return false;
  if (k < 1 || k > 2 * n + 1) return false;
  std::vector<char> hit(static_cast<std::size_t>(2 * n + 2), 0);
  for (int i = 1; i <= n; ++i) {
    int a = entries[static_cast<std::size_t>(i - 1)];
    int b = a + gap_lo + i - 1;
    if (a < 1 || b > 2 * n + 1) return false;
    if (hit[static_cast<std::size_t>(a)] || hit[static_cast<std::size_t>(b)] || a == k || b == k)
      return false;
    hit[static_cast<std::size_t>(a)] = hit[static_cast<std::size_t>(b)] = 1;
  }
  return true;  // 2n distinct values avoiding k cover {1..2n+1}\{k} exactly
}

}  // namespace detail

inline bool validate_extended_skolem(const ExtendedSkolemSequence& seq) {
  return detail::covers_all_but_hole(seq.entries, seq.n, seq.k, 1);
}

inline bool validate_extended_langford(const ExtendedLangfordSequence& seq) {
  return seq.d >= 1 && detail::covers_all_but_hole(seq.entries, seq.n, seq.k, seq.d);
}

}  // namespace trisys
