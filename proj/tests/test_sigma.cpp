#include <doctest.h>

#include <set>

#include "supchar/sigma.hpp"

using namespace supchar;

namespace {

// Oracle straight from the table: sigma_X(K_j) summed with Cyclotomic
// arithmetic, bad when the n-1 values on classes 2..n are pairwise distinct.
std::vector<IndexSubset> oracle_bad_parts(const CharacterTable& t) {
  const int n = t.num_classes();
  std::vector<IndexSubset> out;
  for (std::uint64_t k = 1; k < (1ULL << (n - 1)); ++k) {
    const IndexSubset part(k << 1);
    std::vector<Cyclotomic> values;
    for (int j = 1; j < n; ++j) {
      Cyclotomic s(t.field, 0L);
      for (int i : part.indices()) s += t.value(i - 1, 0) * t.value(i - 1, j);
      values.push_back(s);
    }
    bool distinct = true;
    for (std::size_t a = 0; a < values.size() && distinct; ++a)
      for (std::size_t b = a + 1; b < values.size() && distinct; ++b) distinct = !(values[a] == values[b]);
    if (distinct) out.push_back(part);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("index subsets") {
  const auto s = IndexSubset::of({2, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.min_index() == 2);
  CHECK(s.max_index() == 5);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(to_string(s) == "{2,3,5}");
  CHECK(IndexSubset::range(2, 5) == IndexSubset::of({2, 3, 4, 5}));
  CHECK(IndexSubset::range(1, 64).size() == 64);
  CHECK((IndexSubset::range(1, 5) - s) == IndexSubset::of({1, 4}));
  CHECK_THROWS_AS(IndexSubset::of({65}), ArgumentError);
  CHECK_THROWS_AS(IndexSubset::of({0}), ArgumentError);
}

TEST_CASE("bad parts match the oracle") {
  std::vector<CharacterTable> tables;
  for (int m = 2; m <= 11; ++m) tables.push_back(cyclic_table(m));
  for (int m = 3; m <= 17; ++m)
    if (dihedral_table(m).num_classes() <= 11) tables.push_back(dihedral_table(m));
  tables.push_back(frobenius_pq_table(7, 3));
  tables.push_back(frobenius_pq_table(13, 3));
  for (const auto& t : tables) {
    INFO(t.name);
    const auto want = oracle_bad_parts(t);
    const auto got = find_bad_parts(t);
    CHECK(got.members() == want);
    CHECK(got.count() == want.size());
    const SigmaMatrix m(t);
    for (std::uint64_t k = 1; k < (1ULL << (t.num_classes() - 1)); ++k) {
      const IndexSubset part(k << 1);
      CHECK(is_bad_part(m, part) == got.contains(part));
    }
  }
}

TEST_CASE("bad part counts") {
  CHECK(find_bad_parts(cyclic_table(13)).count() == 4020);
  CHECK(find_bad_parts(cyclic_table(11)).count() == 990);
  CHECK(find_bad_parts(cyclic_table(10)).count() == 376);
  CHECK(find_bad_parts(cyclic_table(2)).count() == 1);
  CHECK(find_bad_parts(dihedral_table(14)).count() == 144);
  CHECK(find_bad_parts(dihedral_table(17)).count() == 480);
  CHECK(find_bad_parts(dihedral_table(19)).count() == 1008);
  CHECK(find_bad_parts(dihedral_table(23)).count() == 4092);
  CHECK(find_bad_parts(dihedral_table(2)).count() == 0);
}

TEST_CASE("alpha") {
  CHECK(alpha_ratio(cyclic_table(13)) == make_rational(4020, 4095));
  CHECK(format_percent(make_rational(4020, 4095)) == "98.16");
  CHECK(format_percent(make_rational(4092, 4095)) == "99.92");
  CHECK(format_percent(Rational(1)) == "100.00");
  CHECK(format_percent(Rational(0)) == "0.00");
  CHECK(alpha_ratio(cyclic_table(2)) == 1);
  CHECK(alpha_ratio(dihedral_table(2)) == 0);
}

TEST_CASE("bigint coordinates agree with int64 coordinates") {
  for (const auto& t : {cyclic_table(12), dihedral_table(9), frobenius_pq_table(7, 3)}) {
    const SigmaMatrix small(t);
    const SigmaMatrix big(t, true);
    CHECK_FALSE(small.uses_bigint());
    CHECK(big.uses_bigint());
    for (int r = 0; r < t.num_classes(); ++r)
      for (int c = 0; c < t.num_classes(); ++c) CHECK(small.fingerprint(r, c) == big.fingerprint(r, c));
    CHECK(find_bad_parts(small) == find_bad_parts(big));
    const int n = t.num_classes();
    for (std::uint64_t k = 1; k < (1ULL << (n - 1)); k += 3) {
      const IndexSubset part(k << 1);
      for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) CHECK(small.part_columns_equal(part, a, b) == big.part_columns_equal(part, a, b));
    }
  }
}

TEST_CASE("thread count does not change the result") {
  for (const auto& t : {cyclic_table(13), dihedral_table(23), cyclic_table(16)}) {
    const auto one = find_bad_parts(t, 1);
    for (unsigned k : {2u, 3u, 8u}) CHECK(find_bad_parts(t, k) == one);
  }
}

TEST_CASE("sparse bad part sets") {
  BadPartSet s(40);
  s.insert(IndexSubset::of({2, 40}));
  CHECK(s.contains(IndexSubset::of({2, 40})));
  CHECK_FALSE(s.contains(IndexSubset::of({3, 40})));
  CHECK_THROWS(s.insert(IndexSubset::of({1, 2})));
  BadPartSet other(40);
  other.insert(IndexSubset::of({5}));
  other.insert(IndexSubset::of({2, 40}));
  s.merge(other);
  CHECK(s.count() == 2);
  CHECK(s.members() == std::vector<IndexSubset>{IndexSubset::of({5}), IndexSubset::of({2, 40})});
}

TEST_CASE("sigma of a part") {
  const auto t = cyclic_table(3);
  const SigmaMatrix m(t);
  const auto row = sigma_of_part(m, IndexSubset::of({2, 3}));
  CHECK(row[0] == Cyclotomic(t.field, 2L));
  CHECK(row[1] == Cyclotomic(t.field, -1L));
  CHECK(row[2] == Cyclotomic(t.field, -1L));
  CHECK_THROWS_AS(sigma_of_part(m, IndexSubset{}), ArgumentError);
}
