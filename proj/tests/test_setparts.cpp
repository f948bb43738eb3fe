#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "supchar/setparts.hpp"

using namespace supchar;

namespace {

using Partition = std::vector<IndexSubset>;

// Oracle: partitions of a list by inserting each element into an existing
// block or a new one.
void oracle_partitions(const std::vector<int>& elems, std::size_t i, Partition& blocks, std::set<Partition>& out) {
  if (i == elems.size()) {
    Partition p = blocks;
    std::sort(p.begin(), p.end(), [](IndexSubset a, IndexSubset b) { return a.min_index() < b.min_index(); });
    out.insert(p);
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto saved = blocks[b];
    blocks[b].insert(elems[i]);
    oracle_partitions(elems, i + 1, blocks, out);
    blocks[b] = saved;
  }
  blocks.push_back(IndexSubset::of({elems[i]}));
  oracle_partitions(elems, i + 1, blocks, out);
  blocks.pop_back();
}

std::set<Partition> oracle_partitions(const std::vector<int>& elems) {
  std::set<Partition> out;
  Partition blocks;
  oracle_partitions(elems, 0, blocks, out);
  return out;
}

// Oracle: Bell numbers from the Bell triangle.
std::vector<BigInt> bell_triangle(int upto) {
  std::vector<BigInt> bell{1};
  std::vector<BigInt> row{1};
  for (int i = 1; i <= upto; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = next;
    bell.push_back(row.front());
  }
  return bell;
}

// Edges of the unpruned tree on m elements: choose the first part (the
// least element plus j of the other m-1), one edge, then the subtree.
std::uint64_t tree_edges_oracle(int m) {
  if (m == 0) return 0;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (int j = 0; j <= m - 1; ++j) {
    total += binom * (1 + tree_edges_oracle(m - 1 - j));
    binom = binom * static_cast<std::uint64_t>(m - 1 - j) / static_cast<std::uint64_t>(j + 1);
  }
  return total;
}

}  // namespace

TEST_CASE("bell numbers") {
  CHECK(bell_number(0) == 1);
  CHECK(bell_number(9) == 21147);
  CHECK(bell_number(10) == 115975);
  CHECK(bell_number(12) == 4213597);
  CHECK(bell_number(17) == BigInt("82864869804"));
  const auto tri = bell_triangle(40);
  for (int m = 0; m <= 40; ++m) CHECK(bell_number(m) == tri[static_cast<std::size_t>(m)]);
}

TEST_CASE("alpha code") {
  const auto s = RemainderSet::from_list(std::vector<int>{2, 4, 5, 9});
  CHECK(alpha_decode(s, 1) == IndexSubset::of({2}));
  CHECK(alpha_decode(s, 0b1011) == IndexSubset::of({2, 4, 9}));
  for (std::uint64_t k = 1; k < 16; ++k) CHECK(alpha_encode(s, alpha_decode(s, k)) == k);
  CHECK_THROWS(alpha_decode(s, 16));
  CHECK_THROWS(RemainderSet::from_list(std::vector<int>{3, 2}));
}

TEST_CASE("unpruned enumeration visits every partition once") {
  for (int m = 0; m <= 10; ++m) {
    const auto s = RemainderSet(IndexSubset::range(2, m + 1));
    std::set<Partition> seen;
    std::uint64_t visits = 0;
    const auto stats = enumerate_partitions(s, nullptr, [&](std::span<const IndexSubset> p) {
      ++visits;
      if (m <= 7) seen.insert(Partition(p.begin(), p.end()));
    });
    CHECK(visits == bell_number(m).get_ui());
    CHECK(stats.visited_partitions == visits);
    CHECK(stats.pruned_nodes == 0);
    CHECK(stats.tree_edges == tree_edges_oracle(m));
    if (m >= 1) CHECK(stats.tree_edges == 2 * bell_number(m).get_ui() - 1);
    if (m <= 7) {
      std::vector<int> elems;
      for (int i = 2; i <= m + 1; ++i) elems.push_back(i);
      CHECK(seen == oracle_partitions(elems));
    }
  }
}

TEST_CASE("first parts follow increasing alpha code") {
  const auto s = RemainderSet(IndexSubset::range(2, 6));
  EnumerationStats st;
  const auto firsts = first_parts(s, nullptr, st);
  CHECK(firsts.size() == 16);
  for (std::size_t i = 0; i < firsts.size(); ++i) CHECK(alpha_encode(s, firsts[i]) == 2 * i + 1);
}

TEST_CASE("pruning a small tree") {
  // S = {2,3,4}, forbidden {2,3}, {2,4}, {3}, {4}
  const auto s = RemainderSet(IndexSubset::range(2, 4));
  const auto bad = BadPartSet::from(4, {IndexSubset::of({2, 3}), IndexSubset::of({2, 4}), IndexSubset::of({3}), IndexSubset::of({4})});
  std::vector<Partition> got;
  const auto stats = enumerate_partitions(s, bad, [&](std::span<const IndexSubset> p) { got.emplace_back(p.begin(), p.end()); });
  const std::vector<Partition> want{{IndexSubset::of({2}), IndexSubset::of({3, 4})}, {IndexSubset::of({2, 3, 4})}};
  CHECK(got == want);
  CHECK(stats.visited_partitions == 2);
}

TEST_CASE("pruned enumeration equals filtering") {
  std::mt19937_64 rng(3);
  for (int m = 1; m <= 8; ++m) {
    const int n = m + 1;
    const auto s = RemainderSet(IndexSubset::range(2, n));
    for (int trial = 0; trial < 10; ++trial) {
      BadPartSet bad(n);
      for (std::uint64_t k = 1; k < (1ULL << m); ++k)
        if (rng() % 4 == 0) bad.insert(IndexSubset(k << 1));
      std::vector<Partition> pruned, filtered;
      enumerate_partitions(s, bad, [&](std::span<const IndexSubset> p) { pruned.emplace_back(p.begin(), p.end()); });
      enumerate_partitions(s, nullptr, [&](std::span<const IndexSubset> p) {
        if (std::none_of(p.begin(), p.end(), [&](IndexSubset x) { return bad.contains(x); })) filtered.emplace_back(p.begin(), p.end());
      });
      CHECK(pruned == filtered);
      // splitting at the first part reproduces the whole walk
      EnumerationStats total;
      const auto firsts = first_parts(s, &bad, total);
      std::vector<Partition> split;
      for (auto f : firsts)
        total += enumerate_below(s, f, &bad, [&](std::span<const IndexSubset> p) { split.emplace_back(p.begin(), p.end()); });
      CHECK(split == pruned);
      const auto whole = enumerate_partitions(s, bad, [](std::span<const IndexSubset>) {});
      CHECK(total == whole);
    }
  }
}

TEST_CASE("codewords") {
  for (int m = 0; m <= 9; ++m) {
    std::vector<std::vector<std::uint8_t>> words;
    const auto count = er_codewords(m, [&](std::span<const std::uint8_t> w) { words.emplace_back(w.begin(), w.end()); });
    CHECK(count == bell_number(m).get_ui());
    CHECK(words.size() == count);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
    for (const auto& w : words) {
      int mx = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == 0) CHECK(w[i] == 1);
        CHECK(w[i] <= mx + 1);
        mx = std::max<int>(mx, w[i]);
      }
    }
    if (m >= 1 && m <= 7) {
      const auto s = RemainderSet(IndexSubset::range(2, m + 1));
      std::set<Partition> from_words;
      for (const auto& w : words) from_words.insert(codeword_partition(s, w));
      std::vector<int> elems;
      for (int i = 2; i <= m + 1; ++i) elems.push_back(i);
      CHECK(from_words == oracle_partitions(elems));
    }
  }
}

TEST_CASE("codeword prefixes split the enumeration") {
  const int m = 8;
  std::vector<std::vector<std::uint8_t>> whole;
  er_codewords(m, [&](std::span<const std::uint8_t> w) { whole.emplace_back(w.begin(), w.end()); });
  std::vector<std::vector<std::uint8_t>> split;
  const auto prefixes = codeword_prefixes(4);
  CHECK(prefixes.size() == bell_number(4).get_ui());
  for (const auto& p : prefixes)
    er_codewords_with_prefix(m, p, [&](std::span<const std::uint8_t> w) { split.emplace_back(w.begin(), w.end()); });
  CHECK(split == whole);
}
