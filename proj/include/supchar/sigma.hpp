#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <variant>
#include <vector>

#include "supchar/chartab.hpp"

namespace supchar {

/// Subset of {1..64}; bit j-1 is set iff index j is a member.
class IndexSubset {
 public:
  constexpr IndexSubset() = default;
  constexpr explicit IndexSubset(std::uint64_t bits) : bits_(bits) {}

  static IndexSubset of(std::initializer_list<int> indices) {
    IndexSubset s;
    for (int i : indices) s.insert(i);
    return s;
  }
  static IndexSubset of(std::span<const int> indices) {
    IndexSubset s;
    for (int i : indices) s.insert(i);
    return s;
  }
  // {first, first+1, ..., last}
  static constexpr IndexSubset range(int first, int last) {
    if (last < first) return IndexSubset{};
    const std::uint64_t upper = last >= 64 ? ~0ULL : ((1ULL << last) - 1);
    const std::uint64_t lower = (1ULL << (first - 1)) - 1;
    return IndexSubset(upper & ~lower);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int index) const noexcept { return (bits_ >> (index - 1)) & 1U; }
  // Smallest member; undefined on the empty set.
  constexpr int min_index() const noexcept { return std::countr_zero(bits_) + 1; }
  constexpr int max_index() const noexcept { return 64 - std::countl_zero(bits_); }

  void insert(int index) {
    if (index < 1 || index > 64) throw ArgumentError("index " + std::to_string(index) + " outside [1, 64]");
    bits_ |= 1ULL << (index - 1);
  }
  constexpr bool subset_of(IndexSubset other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  constexpr IndexSubset operator|(IndexSubset o) const noexcept { return IndexSubset(bits_ | o.bits_); }
  constexpr IndexSubset operator&(IndexSubset o) const noexcept { return IndexSubset(bits_ & o.bits_); }
  // Set difference.
  constexpr IndexSubset operator-(IndexSubset o) const noexcept { return IndexSubset(bits_ & ~o.bits_); }
  constexpr auto operator<=>(const IndexSubset&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

std::string to_string(IndexSubset s);

/// Rows chi_i(1) * chi_i(K_j) of a character table, kept exactly.
///
/// Besides the Cyclotomic matrix, every entry is stored as integer
/// coordinates in the power basis after scaling the whole matrix by a common
/// denominator, plus a fingerprint: a fixed random linear functional of those
/// coordinates modulo 2^61-1. Sums of entries have the sum of fingerprints, so
/// distinct fingerprints prove distinct values; equal fingerprints are always
/// confirmed on the integer coordinates. Coordinates are int64 when the bound
/// |c| * n < 2^61 holds for every coordinate, arbitrary precision otherwise.
class SigmaMatrix {
 public:
  explicit SigmaMatrix(const CharacterTable& t);
  // Forces the arbitrary-precision coordinate path regardless of magnitude.
  SigmaMatrix(const CharacterTable& t, bool force_bigint);

  int n() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return field_; }
  // 0-based character row and class column.
  const Cyclotomic& entry(int row, int col) const {
    return base_[static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col)];
  }
  std::uint64_t fingerprint(int row, int col) const {
    return fingerprints_[static_cast<std::size_t>(col) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(row)];
  }
  // Fingerprints of column col, one per row, contiguous.
  const std::uint64_t* fingerprint_column(int col) const {
    return fingerprints_.data() + static_cast<std::size_t>(col) * static_cast<std::size_t>(n_);
  }
  bool uses_bigint() const noexcept { return std::holds_alternative<std::vector<BigInt>>(coords_); }

  // sigma_part(col_a) == sigma_part(col_b), exactly (0-based columns).
  bool part_columns_equal(IndexSubset part, int col_a, int col_b) const;

  static constexpr std::uint64_t kModulus = (1ULL << 61) - 1;

 private:
  template <typename T>
  bool columns_equal_impl(const std::vector<T>& c, IndexSubset part, int col_a, int col_b) const;

  int n_;
  int degree_;
  FieldPtr field_;
  std::vector<Cyclotomic> base_;
  // coords[((row * n) + col) * degree + k]
  std::variant<std::vector<std::int64_t>, std::vector<BigInt>> coords_;
  // column-major: fingerprints[col * n + row]
  std::vector<std::uint64_t> fingerprints_;
};

SigmaMatrix sigma_matrix(const CharacterTable& t);

inline std::uint64_t add_mod61(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= SigmaMatrix::kModulus ? s - SigmaMatrix::kModulus : s;
}

// Componentwise sum of the rows in part; throws ArgumentError on an empty part.
std::vector<Cyclotomic> sigma_of_part(const SigmaMatrix& m, IndexSubset part);

// True iff sigma_part takes pairwise distinct values on classes 2..n.
// part must be a nonempty subset of {2..n}.
bool is_bad_part(const SigmaMatrix& m, IndexSubset part);

/// Membership structure over bad parts, keyed by global index encoding.
/// Dense bitmap for up to 27 non-trivial characters, hash set beyond.
class BadPartSet {
 public:
  BadPartSet() : BadPartSet(1) {}
  explicit BadPartSet(int n);

  static BadPartSet from(int n, std::initializer_list<IndexSubset> parts) {
    BadPartSet s(n);
    for (auto p : parts) s.insert(p);
    return s;
  }

  int n() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return count_; }
  bool contains(IndexSubset part) const noexcept {
    if (dense_) {
      const std::uint64_t k = part.bits() >> 1;
      return (bitmap_[k >> 6] >> (k & 63)) & 1U;
    }
    return sparse_.contains(part.bits());
  }
  void insert(IndexSubset part);
  void merge(const BadPartSet& other);
  // All members in increasing bit order.
  std::vector<IndexSubset> members() const;

  bool operator==(const BadPartSet& other) const { return n_ == other.n_ && members() == other.members(); }

 private:
  static constexpr int kDenseLimit = 27;

  int n_;
  bool dense_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> bitmap_;
  std::unordered_set<std::uint64_t> sparse_;
};

// Every nonempty X of {2..n} with is_bad_part(X). Subsets are walked in Gray
// code order within contiguous ranges, one range per worker.
BadPartSet find_bad_parts(const SigmaMatrix& m, unsigned threads = 1);
BadPartSet find_bad_parts(const CharacterTable& t, unsigned threads = 1);

// |BP| / (2^(n-1) - 1)
Rational alpha_ratio(const CharacterTable& t);
Rational alpha_ratio(std::uint64_t bad_parts, int n);

// Percentage truncated toward zero at two decimals, e.g. "98.16".
std::string format_percent(const Rational& fraction);

}  // namespace supchar
