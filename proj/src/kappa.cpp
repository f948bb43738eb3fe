#include "supchar/kappa.hpp"

#include <algorithm>

namespace supchar {

KappaWorkspace::Outcome KappaWorkspace::classify(const SigmaMatrix& m, std::span<const IndexSubset> parts) {
  const int n = m.n();
  const auto r = parts.size();
  kappa_.clear();
  reps_.clear();
  rep_fp_.clear();

  if (n == 1) {
    kappa_.push_back(IndexSubset::of({1}));
    if (r == 1) return {true, {}};
    return {false, {KappaFailure::Kind::TooFewParts, 1}};
  }

  column_fp_.resize(r);
  auto load_column = [&](int col) {
    const std::uint64_t* fp = m.fingerprint_column(col);
    for (std::size_t i = 1; i < r; ++i) {
      std::uint64_t s = 0;
      for (std::uint64_t b = parts[i].bits(); b != 0; b &= b - 1) s = add_mod61(s, fp[std::countr_zero(b)]);
      column_fp_[i] = s;
    }
  };

  kappa_.push_back(IndexSubset::of({1}));
  kappa_.push_back(IndexSubset::of({2}));
  reps_ = {0, 1};
  rep_fp_.assign(r, 0);  // identity column is never compared
  load_column(1);
  rep_fp_.insert(rep_fp_.end(), column_fp_.begin(), column_fp_.end());
  if (kappa_.size() > r) return {false, {KappaFailure::Kind::TooManyParts, 2}};

  for (int col = 2; col < n; ++col) {
    load_column(col);
    bool merged = false;
    for (std::size_t s = 1; s < kappa_.size() && !merged; ++s) {
      const std::uint64_t* rep = rep_fp_.data() + s * r;
      if (!std::equal(column_fp_.begin() + 1, column_fp_.end(), rep + 1)) continue;
      bool exact = true;
      for (std::size_t i = 1; i < r && exact; ++i) exact = m.part_columns_equal(parts[i], col, reps_[s]);
      if (exact) {
        kappa_[s].insert(col + 1);
        merged = true;
      }
    }
    if (merged) continue;
    kappa_.push_back(IndexSubset::of({col + 1}));
    reps_.push_back(col);
    rep_fp_.insert(rep_fp_.end(), column_fp_.begin(), column_fp_.end());
    if (kappa_.size() > r) return {false, {KappaFailure::Kind::TooManyParts, col + 1}};
  }
  if (kappa_.size() == r) return {true, {}};
  return {false, {KappaFailure::Kind::TooFewParts, n}};
}

CyclotomicMatrix supercharacter_table(const SigmaMatrix& m, std::span<const IndexSubset> x_parts,
                                      std::span<const IndexSubset> k_parts) {
  CyclotomicMatrix st;
  st.reserve(x_parts.size());
  for (auto x : x_parts) {
    std::vector<Cyclotomic> row;
    row.reserve(k_parts.size());
    for (auto k : k_parts) {
      const int col = k.min_index() - 1;
      Cyclotomic v(m.field(), 0L);
      for (int i : x.indices()) v += m.entry(i - 1, col);
      row.push_back(std::move(v));
    }
    st.push_back(std::move(row));
  }
  return st;
}

KappaResult create_kappa(const SigmaMatrix& m, const CharPartition& irrp) {
  const int n = m.n();
  const IndexSubset target = IndexSubset::range(2, n);
  IndexSubset seen;
  for (auto p : irrp.parts) {
    if (p.empty() || !(p & seen).empty() || !p.subset_of(target)) {
      throw ArgumentError("create_kappa: not a set partition of {2.." + std::to_string(n) + "}");
    }
    seen = seen | p;
  }
  if (seen != target) throw ArgumentError("create_kappa: parts do not cover {2.." + std::to_string(n) + "}");

  std::vector<IndexSubset> parts{IndexSubset::of({1})};
  parts.insert(parts.end(), irrp.parts.begin(), irrp.parts.end());
  std::sort(parts.begin() + 1, parts.end(), [](IndexSubset a, IndexSubset b) { return a.min_index() < b.min_index(); });

  KappaWorkspace ws;
  const auto outcome = ws.classify(m, parts);
  if (!outcome.ok) return outcome.failure;
  SuperTheory theory{parts, ws.class_parts(), {}};
  theory.st = supercharacter_table(m, theory.x_parts, theory.k_parts);
  return theory;
}

SuperTheory finest_theory(const SigmaMatrix& m) {
  SuperTheory theory;
  for (int i = 1; i <= m.n(); ++i) {
    theory.x_parts.push_back(IndexSubset::of({i}));
    theory.k_parts.push_back(IndexSubset::of({i}));
  }
  theory.st = supercharacter_table(m, theory.x_parts, theory.k_parts);
  return theory;
}

namespace {

std::optional<std::string> check_partition(const std::vector<IndexSubset>& parts, int n, const char* side) {
  IndexSubset seen;
  for (auto p : parts) {
    if (p.empty()) return std::string(side) + " partition has an empty part";
    if (!(p & seen).empty()) return std::string(side) + " partition has overlapping parts";
    seen = seen | p;
  }
  if (seen != IndexSubset::range(1, n)) return std::string(side) + " partition does not cover {1.." + std::to_string(n) + "}";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_theory(const CharacterTable& t, const SuperTheory& theory) {
  const int n = t.num_classes();
  if (auto e = check_partition(theory.x_parts, n, "character")) return e;
  if (auto e = check_partition(theory.k_parts, n, "class")) return e;
  if (std::find(theory.k_parts.begin(), theory.k_parts.end(), IndexSubset::of({1})) == theory.k_parts.end()) {
    return "identity class is not a part on its own";
  }
  if (theory.x_parts.size() != theory.k_parts.size()) return "character and class partitions differ in size";
  if (!theory.st.empty() && theory.st.size() != theory.x_parts.size()) return "supercharacter table has the wrong number of rows";

  for (std::size_t a = 0; a < theory.x_parts.size(); ++a) {
    std::vector<Cyclotomic> sigma;
    for (int j = 0; j < n; ++j) {
      Cyclotomic v(t.field, 0L);
      for (int i : theory.x_parts[a].indices()) v += t.value(i - 1, 0) * t.value(i - 1, j);
      sigma.push_back(std::move(v));
    }
    for (std::size_t b = 0; b < theory.k_parts.size(); ++b) {
      const auto cls = theory.k_parts[b].indices();
      const Cyclotomic& first = sigma[static_cast<std::size_t>(cls.front() - 1)];
      for (int j : cls) {
        if (!sigma[static_cast<std::size_t>(j - 1)].equals(first)) {
          return "sigma of " + to_string(theory.x_parts[a]) + " is not constant on " + to_string(theory.k_parts[b]);
        }
      }
      if (!theory.st.empty()) {
        if (theory.st[a].size() != theory.k_parts.size()) return "supercharacter table has the wrong number of columns";
        if (!theory.st[a][b].equals(first)) return "supercharacter table entry disagrees with sigma";
      }
    }
  }
  return std::nullopt;
}

bool verify_theory(const CharacterTable& t, const SuperTheory& theory) { return !check_theory(t, theory).has_value(); }

}  // namespace supchar
