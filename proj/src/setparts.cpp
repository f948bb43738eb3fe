#include "supchar/setparts.hpp"

#include <algorithm>

namespace supchar {

RemainderSet RemainderSet::from_list(std::span<const int> elements) {
  IndexSubset mask;
  int prev = 0;
  for (int e : elements) {
    if (e <= prev || e > 64) throw ArgumentError("remainder set must be strictly ascending within [1, 64]");
    mask.insert(e);
    prev = e;
  }
  return RemainderSet(mask);
}

IndexSubset alpha_decode(const RemainderSet& s, std::uint64_t k) {
  const int size = s.size();
  const std::uint64_t limit = size >= 64 ? ~0ULL : (1ULL << size) - 1;
  if (k < 1 || k > limit) throw ArgumentError("alpha_decode: k = " + std::to_string(k) + " outside [1, 2^|S|-1]");
  IndexSubset out;
  std::uint64_t remaining = s.mask().bits();
  for (int i = 0; remaining != 0; ++i) {
    const std::uint64_t low = remaining & (~remaining + 1);
    if ((k >> i) & 1U) out = out | IndexSubset(low);
    remaining ^= low;
  }
  return out;
}

std::uint64_t alpha_encode(const RemainderSet& s, IndexSubset f) {
  if (f.empty() || !f.subset_of(s.mask())) throw ArgumentError("alpha_encode: " + to_string(f) + " is not a nonempty subset of S");
  std::uint64_t k = 0;
  std::uint64_t remaining = s.mask().bits();
  for (int i = 0; remaining != 0; ++i) {
    const std::uint64_t low = remaining & (~remaining + 1);
    if (f.bits() & low) k |= 1ULL << i;
    remaining ^= low;
  }
  return k;
}

std::vector<IndexSubset> first_parts(const RemainderSet& s, const BadPartSet* forbidden, EnumerationStats& stats) {
  std::vector<IndexSubset> out;
  if (s.empty()) return out;
  const std::uint64_t bits = s.mask().bits();
  const std::uint64_t low = bits & (~bits + 1);
  const std::uint64_t rest = bits ^ low;
  std::uint64_t sub = 0;
  do {
    const IndexSubset part(low | sub);
    if (forbidden != nullptr && forbidden->contains(part)) {
      ++stats.pruned_nodes;
    } else {
      out.push_back(part);
    }
    sub = (sub - rest) & rest;
  } while (sub != 0);
  return out;
}

BigInt bell_number(int m) {
  if (m < 0) throw ArgumentError("bell_number: m must be nonnegative");
  std::vector<BigInt> bell{1};
  for (int k = 0; k < m; ++k) {
    // B(k+1) = sum_{i=0}^{k} C(k, i) B(i)
    BigInt next = 0;
    BigInt binom = 1;
    for (int i = 0; i <= k; ++i) {
      next += binom * bell[static_cast<std::size_t>(i)];
      binom = binom * (k - i) / (i + 1);
    }
    bell.push_back(next);
  }
  return bell.back();
}

namespace {

// Er's recursion: position i (0-based) takes values 1..max+1.
void er_rec(int m, std::vector<std::uint8_t>& word, int max_value, std::uint64_t& count,
            const std::function<void(std::span<const std::uint8_t>)>& visit) {
  const auto i = word.size();
  if (static_cast<int>(i) == m) {
    ++count;
    visit(std::span<const std::uint8_t>(word));
    return;
  }
  for (int v = 1; v <= max_value + 1; ++v) {
    word.push_back(static_cast<std::uint8_t>(v));
    er_rec(m, word, std::max(max_value, v), count, visit);
    word.pop_back();
  }
}

bool valid_prefix(std::span<const std::uint8_t> prefix, int& max_value) {
  max_value = 0;
  for (auto c : prefix) {
    if (c < 1 || c > max_value + 1) return false;
    max_value = std::max<int>(max_value, c);
  }
  return true;
}

}  // namespace

std::uint64_t er_codewords_with_prefix(int m, std::span<const std::uint8_t> prefix,
                                       const std::function<void(std::span<const std::uint8_t>)>& visit) {
  if (m < 0 || m > kMaxCodewordLength) throw ArgumentError("er_codewords: length must be in [0, 20]");
  int max_value = 0;
  if (static_cast<int>(prefix.size()) > m || !valid_prefix(prefix, max_value)) {
    throw ArgumentError("er_codewords: invalid codeword prefix");
  }
  std::vector<std::uint8_t> word(prefix.begin(), prefix.end());
  word.reserve(static_cast<std::size_t>(m));
  std::uint64_t count = 0;
  er_rec(m, word, max_value, count, visit);
  return count;
}

std::uint64_t er_codewords(int m, const std::function<void(std::span<const std::uint8_t>)>& visit) {
  return er_codewords_with_prefix(m, {}, visit);
}

std::vector<std::vector<std::uint8_t>> codeword_prefixes(int length) {
  std::vector<std::vector<std::uint8_t>> out;
  er_codewords(length, [&](std::span<const std::uint8_t> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

std::vector<IndexSubset> codeword_partition(const RemainderSet& s, std::span<const std::uint8_t> codeword) {
  const auto elements = s.elements();
  if (elements.size() != codeword.size()) throw ArgumentError("codeword length does not match the remainder set");
  std::vector<IndexSubset> parts;
  for (std::size_t i = 0; i < codeword.size(); ++i) {
    const auto block = static_cast<std::size_t>(codeword[i]) - 1;
    if (block > parts.size()) throw ArgumentError("not a restricted growth codeword");
    if (block == parts.size()) parts.emplace_back();
    parts[block].insert(elements[i]);
  }
  return parts;
}

}  // namespace supchar
