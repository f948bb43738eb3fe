#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "supchar/kappa.hpp"
#include "supchar/setparts.hpp"

namespace supchar {

enum class SearchMode {
  main,   // bad-part pruning, alpha-code partition tree
  first,  // every codeword partition, no pruning
};

std::string_view mode_name(SearchMode mode);
SearchMode parse_mode(std::string_view name);

struct SearchOptions {
  SearchMode mode = SearchMode::main;
  unsigned threads = 1;
};

struct SearchStats {
  std::optional<std::uint64_t> bad_part_count;  // main mode only
  std::uint64_t partitions_visited = 0;
  std::uint64_t kappa_calls = 0;
  std::uint64_t kappa_successes = 0;
  std::uint64_t early_aborts = 0;     // TooManyParts
  std::uint64_t too_few_parts = 0;    // TooFewParts
  std::uint64_t pruned_nodes = 0;
  std::uint64_t tree_edges = 0;
  bool finest_injected = false;       // m(G) added after the search
  double bad_parts_seconds = 0.0;
  double search_seconds = 0.0;
};

/// Duplicate-free theories in canonical order: by number of parts, then
/// character partition, then class partition, comparing parts as sorted
/// index lists.
class TheorySet {
 public:
  // Returns false when a theory with the same character partition is present.
  bool insert(SuperTheory theory);
  bool contains(const std::vector<IndexSubset>& x_parts) const;

  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<SuperTheory>& items() const noexcept { return items_; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  // Same partitions on both sides for every theory, ignoring tables.
  bool same_partitions(const TheorySet& other) const;

 private:
  std::vector<SuperTheory> items_;
};

bool theory_less(const SuperTheory& a, const SuperTheory& b);

struct SearchResult {
  TheorySet theories;
  SearchStats stats;
};

/// All supercharacter theories of the group. Main mode precomputes the bad
/// parts and walks only partitions of {2..n} that avoid them; first mode
/// walks every partition. The finest theory is added when the search did
/// not produce it (pruning removes it whenever a singleton part is bad).
/// Top-level branches are shared among `threads` workers; results and
/// counters do not depend on the thread count.
SearchResult find_supertheories(const CharacterTable& t, const SearchOptions& options = {});

// Streaming count; fills stats when given.
std::uint64_t count_supertheories(const CharacterTable& t, const SearchOptions& options = {}, SearchStats* stats = nullptr);

inline constexpr int kBruteForceMaxClasses = 7;

/// Reference enumeration straight from the definition: every pair of set
/// partitions of {1..n} (characters) and {1..n} with {1} a part (classes) of
/// equal size, kept when each sigma_X is constant on each class part.
TheorySet brute_force_supertheories(const CharacterTable& t);

// Rows sigma_X evaluated at one representative class per class part.
CyclotomicMatrix supercharacter_table_of(const CharacterTable& t, const SuperTheory& theory);
std::string render_supercharacter_table(const SuperTheory& theory);

// Canonical result document. Timings are included only on request so the
// default output is identical across runs and thread counts.
nlohmann::ordered_json result_to_json(const CharacterTable& t, const SearchResult& result, std::string_view mode,
                                      bool include_timings = false);
std::string result_to_text(const CharacterTable& t, const SearchResult& result, std::string_view mode);

// Theories of a result document, tables included, for re-verification.
std::vector<SuperTheory> theories_from_json(const CharacterTable& t, const nlohmann::json& doc);

// "{1}|{2,3,5}|{4,6,7}"
std::string partition_to_string(const std::vector<IndexSubset>& parts);

}  // namespace supchar
