#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "supchar/sigma.hpp"

namespace supchar {

/// Ascending, duplicate-free list of indices drawn from {1..64}, stored as a mask.
class RemainderSet {
 public:
  RemainderSet() = default;
  explicit RemainderSet(IndexSubset elements) : elements_(elements) {}
  // Throws ArgumentError unless the list is strictly ascending within [1, 64].
  static RemainderSet from_list(std::span<const int> elements);

  IndexSubset mask() const noexcept { return elements_; }
  int size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  std::vector<int> elements() const { return elements_.indices(); }

 private:
  IndexSubset elements_;
};

// Subset of S holding the i-th element iff bit i-1 of k is set.
IndexSubset alpha_decode(const RemainderSet& s, std::uint64_t k);
// Inverse of alpha_decode on nonempty subsets of S.
std::uint64_t alpha_encode(const RemainderSet& s, IndexSubset f);

struct EnumerationStats {
  std::uint64_t visited_partitions = 0;  // complete partitions handed to the visitor
  std::uint64_t pruned_nodes = 0;        // candidate parts rejected as forbidden
  std::uint64_t tree_edges = 0;          // accepted parts, one per tree edge

  EnumerationStats& operator+=(const EnumerationStats& o) {
    visited_partitions += o.visited_partitions;
    pruned_nodes += o.pruned_nodes;
    tree_edges += o.tree_edges;
    return *this;
  }
  bool operator==(const EnumerationStats&) const = default;
};

namespace detail {

template <typename Visitor>
void enumerate_rec(IndexSubset re, const BadPartSet* forbidden, std::vector<IndexSubset>& parts, Visitor& visit,
                   EnumerationStats& stats) {
  if (re.empty()) {
    ++stats.visited_partitions;
    visit(std::span<const IndexSubset>(parts));
    return;
  }
  // Odd k in increasing order: the least element plus every submask of the
  // rest, and submasks of a fixed mask come out in increasing order under
  // sub = (sub - rest) & rest.
  const std::uint64_t low = re.bits() & (~re.bits() + 1);
  const std::uint64_t rest = re.bits() ^ low;
  std::uint64_t sub = 0;
  do {
    const IndexSubset part(low | sub);
    if (forbidden != nullptr && forbidden->contains(part)) {
      ++stats.pruned_nodes;
    } else {
      ++stats.tree_edges;
      parts.push_back(part);
      enumerate_rec(re - part, forbidden, parts, visit, stats);
      parts.pop_back();
    }
    sub = (sub - rest) & rest;
  } while (sub != 0);
}

}  // namespace detail

/// Depth-first generation of the set partitions of s that avoid every part in
/// forbidden (nullptr for none). Parts come out in increasing order of their
/// least element, and branches are taken in increasing alpha code. The
/// visitor receives a span that is only valid during the call.
template <typename Visitor>
EnumerationStats enumerate_partitions(const RemainderSet& s, const BadPartSet* forbidden, Visitor&& visit) {
  EnumerationStats stats;
  std::vector<IndexSubset> parts;
  parts.reserve(static_cast<std::size_t>(s.size()));
  detail::enumerate_rec(s.mask(), forbidden, parts, visit, stats);
  return stats;
}

template <typename Visitor>
EnumerationStats enumerate_partitions(const RemainderSet& s, const BadPartSet& forbidden, Visitor&& visit) {
  return enumerate_partitions(s, &forbidden, std::forward<Visitor>(visit));
}

// Accepted first parts of a nonempty s in traversal order; rejected
// candidates are added to stats.pruned_nodes.
std::vector<IndexSubset> first_parts(const RemainderSet& s, const BadPartSet* forbidden, EnumerationStats& stats);

// The subtree below one accepted first part (the edge into it is counted).
// Summing over first_parts reproduces enumerate_partitions exactly.
template <typename Visitor>
EnumerationStats enumerate_below(const RemainderSet& s, IndexSubset first, const BadPartSet* forbidden, Visitor&& visit) {
  EnumerationStats stats;
  stats.tree_edges = 1;
  std::vector<IndexSubset> parts{first};
  parts.reserve(static_cast<std::size_t>(s.size()));
  detail::enumerate_rec(s.mask() - first, forbidden, parts, visit, stats);
  return stats;
}

// B(m) via B(m+1) = sum_i C(m, i) B(i).
BigInt bell_number(int m);

inline constexpr int kMaxCodewordLength = 20;

/// Restricted growth strings c_1..c_m with c_1 = 1 and
/// c_{i+1} <= 1 + max(c_1..c_i), emitted in lexicographic order by the
/// recursive scheme of Er. Returns the number emitted, B(m).
std::uint64_t er_codewords(int m, const std::function<void(std::span<const std::uint8_t>)>& visit);

// Codewords extending a fixed valid prefix, in lexicographic order.
std::uint64_t er_codewords_with_prefix(int m, std::span<const std::uint8_t> prefix,
                                       const std::function<void(std::span<const std::uint8_t>)>& visit);

// All valid codeword prefixes of the given length (at most m).
std::vector<std::vector<std::uint8_t>> codeword_prefixes(int length);

// Parts of the partition of s encoded by a codeword: element i of s goes to part c_i.
std::vector<IndexSubset> codeword_partition(const RemainderSet& s, std::span<const std::uint8_t> codeword);

}  // namespace supchar
