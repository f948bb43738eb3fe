#include "supchar/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace supchar {

std::string_view mode_name(SearchMode mode) { return mode == SearchMode::main ? "main" : "first"; }

SearchMode parse_mode(std::string_view name) {
  if (name == "main") return SearchMode::main;
  if (name == "first") return SearchMode::first;
  throw ArgumentError("unknown mode '" + std::string(name) + "' (expected main or first)");
}

namespace {

int compare_parts(const std::vector<IndexSubset>& a, const std::vector<IndexSubset>& b) {
  const auto len = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const auto ia = a[i].indices();
    const auto ib = b[i].indices();
    if (ia != ib) return ia < ib ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

bool theory_less(const SuperTheory& a, const SuperTheory& b) {
  if (a.x_parts.size() != b.x_parts.size()) return a.x_parts.size() < b.x_parts.size();
  if (int c = compare_parts(a.x_parts, b.x_parts); c != 0) return c < 0;
  return compare_parts(a.k_parts, b.k_parts) < 0;
}

bool TheorySet::insert(SuperTheory theory) {
  auto pos = std::lower_bound(items_.begin(), items_.end(), theory, theory_less);
  if (pos != items_.end() && pos->x_parts == theory.x_parts) return false;
  if (contains(theory.x_parts)) return false;
  items_.insert(pos, std::move(theory));
  return true;
}

bool TheorySet::contains(const std::vector<IndexSubset>& x_parts) const {
  return std::any_of(items_.begin(), items_.end(), [&](const SuperTheory& s) { return s.x_parts == x_parts; });
}

bool TheorySet::same_partitions(const TheorySet& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (items_[i].x_parts != other.items_[i].x_parts || items_[i].k_parts != other.items_[i].k_parts) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Found {
  std::vector<IndexSubset> x_parts;
  std::vector<IndexSubset> k_parts;
};

// Per-worker state: kappa buffers, counters and (optionally) kept theories.
struct Worker {
  const SigmaMatrix* sigma;
  bool retain;
  KappaWorkspace workspace;
  std::vector<IndexSubset> buffer;
  SearchStats stats;
  std::vector<Found> found;
  bool finest_found = false;

  void consider(std::span<const IndexSubset> parts) {
    buffer.resize(parts.size() + 1);
    buffer[0] = IndexSubset::of({1});
    std::copy(parts.begin(), parts.end(), buffer.begin() + 1);
    ++stats.kappa_calls;
    const auto outcome = workspace.classify(*sigma, buffer);
    if (!outcome.ok) {
      if (outcome.failure.kind == KappaFailure::Kind::TooManyParts) {
        ++stats.early_aborts;
      } else {
        ++stats.too_few_parts;
      }
      return;
    }
    ++stats.kappa_successes;
    if (static_cast<int>(buffer.size()) == sigma->n()) finest_found = true;
    if (retain) found.push_back({buffer, workspace.class_parts()});
  }
};

void merge_stats(SearchStats& into, const SearchStats& from) {
  into.kappa_calls += from.kappa_calls;
  into.kappa_successes += from.kappa_successes;
  into.early_aborts += from.early_aborts;
  into.too_few_parts += from.too_few_parts;
  into.partitions_visited += from.partitions_visited;
  into.pruned_nodes += from.pruned_nodes;
  into.tree_edges += from.tree_edges;
}

// Runs job(worker, index) for index in [0, jobs) on up to `threads` workers.
void run_jobs(std::vector<Worker>& workers, std::size_t jobs, const std::function<void(Worker&, std::size_t)>& job) {
  if (workers.size() == 1) {
    for (std::size_t i = 0; i < jobs; ++i) job(workers[0], i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (auto& w : workers) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) job(w, i);
    });
  }
  for (auto& t : pool) t.join();
}

struct RawSearch {
  SearchStats stats;
  std::vector<Found> found;
  bool finest_found = false;
};

RawSearch run_search(const CharacterTable& t, const SigmaMatrix& sigma, const SearchOptions& options, bool retain) {
  const int n = t.num_classes();
  if (n > kMaxClasses) throw SizeError("search supports at most 64 classes");
  const unsigned threads = std::max(1U, options.threads);
  const RemainderSet rest(IndexSubset::range(2, n));

  std::vector<Worker> workers(threads, Worker{&sigma, retain, {}, {}, {}, {}, false});
  SearchStats total;

  if (options.mode == SearchMode::main) {
    auto start = Clock::now();
    const BadPartSet bad = n >= 2 ? find_bad_parts(sigma, threads) : BadPartSet(n);
    total.bad_part_count = bad.count();
    total.bad_parts_seconds = seconds_since(start);

    start = Clock::now();
    if (rest.empty()) {
      const auto es = enumerate_partitions(rest, &bad, [&](std::span<const IndexSubset> p) { workers[0].consider(p); });
      workers[0].stats.partitions_visited += es.visited_partitions;
    } else {
      EnumerationStats top;
      const auto firsts = first_parts(rest, &bad, top);
      total.pruned_nodes += top.pruned_nodes;
      run_jobs(workers, firsts.size(), [&](Worker& w, std::size_t i) {
        const auto es = enumerate_below(rest, firsts[i], &bad, [&](std::span<const IndexSubset> p) { w.consider(p); });
        w.stats.partitions_visited += es.visited_partitions;
        w.stats.pruned_nodes += es.pruned_nodes;
        w.stats.tree_edges += es.tree_edges;
      });
    }
    total.search_seconds = seconds_since(start);
  } else {
    const auto start = Clock::now();
    const int m = n - 1;
    if (m > kMaxCodewordLength) throw SizeError("first mode supports at most 21 classes");
    const auto elements = rest.elements();
    auto visit_codeword = [&](Worker& w, std::span<const std::uint8_t> word) {
      std::array<IndexSubset, 64> parts{};
      std::size_t count = 0;
      for (std::size_t i = 0; i < word.size(); ++i) {
        const auto block = static_cast<std::size_t>(word[i]) - 1;
        if (block == count) parts[count++] = IndexSubset{};
        parts[block] = parts[block] | IndexSubset(1ULL << (elements[i] - 1));
      }
      ++w.stats.partitions_visited;
      w.consider(std::span<const IndexSubset>(parts.data(), count));
    };
    const int prefix_len = threads > 1 ? std::min(m, 5) : 0;
    const auto prefixes = codeword_prefixes(prefix_len);
    run_jobs(workers, prefixes.size(), [&](Worker& w, std::size_t i) {
      er_codewords_with_prefix(m, prefixes[i], [&](std::span<const std::uint8_t> word) { visit_codeword(w, word); });
    });
    total.search_seconds = seconds_since(start);
  }

  RawSearch raw;
  for (auto& w : workers) {
    merge_stats(total, w.stats);
    raw.finest_found = raw.finest_found || w.finest_found;
    for (auto& f : w.found) raw.found.push_back(std::move(f));
  }
  raw.stats = total;
  return raw;
}

}  // namespace

SearchResult find_supertheories(const CharacterTable& t, const SearchOptions& options) {
  const SigmaMatrix sigma(t);
  RawSearch raw = run_search(t, sigma, options, true);
  SearchResult result;
  result.stats = raw.stats;
  for (auto& f : raw.found) {
    SuperTheory theory{std::move(f.x_parts), std::move(f.k_parts), {}};
    theory.st = supercharacter_table(sigma, theory.x_parts, theory.k_parts);
    result.theories.insert(std::move(theory));
  }
  if (result.theories.insert(finest_theory(sigma))) result.stats.finest_injected = true;
  return result;
}

std::uint64_t count_supertheories(const CharacterTable& t, const SearchOptions& options, SearchStats* stats) {
  const SigmaMatrix sigma(t);
  RawSearch raw = run_search(t, sigma, options, false);
  raw.stats.finest_injected = !raw.finest_found;
  if (stats != nullptr) *stats = raw.stats;
  return raw.stats.kappa_successes + (raw.finest_found ? 0 : 1);
}

namespace {

// Set partitions of `elements`, each block created at its least element.
void all_partitions(const std::vector<int>& elements, std::size_t i, std::vector<IndexSubset>& blocks,
                    std::vector<std::vector<IndexSubset>>& out) {
  if (i == elements.size()) {
    out.push_back(blocks);
    return;
  }
  // index loop: the recursion appends to blocks
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b].insert(elements[i]);
    all_partitions(elements, i + 1, blocks, out);
    blocks[b] = blocks[b] - IndexSubset::of({elements[i]});
  }
  blocks.push_back(IndexSubset::of({elements[i]}));
  all_partitions(elements, i + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

TheorySet brute_force_supertheories(const CharacterTable& t) {
  const int n = t.num_classes();
  if (n > kBruteForceMaxClasses) throw SizeError("brute force supports at most 7 classes");

  // label[X][j]: id of sigma_X on class j; equal ids iff equal values.
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::vector<int>> label(subsets, std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::vector<Cyclotomic>> sigma(subsets);
  for (std::size_t x = 1; x < subsets; ++x) {
    std::map<std::string, int> ids;
    for (int j = 0; j < n; ++j) {
      Cyclotomic v(t.field, 0L);
      for (int i = 0; i < n; ++i) {
        if ((x >> i) & 1U) v += t.value(i, 0) * t.value(i, j);
      }
      label[x][static_cast<std::size_t>(j)] = ids.emplace(v.canonical_key(), static_cast<int>(ids.size())).first->second;
      sigma[x].push_back(std::move(v));
    }
  }

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<IndexSubset>> partitions;
  std::vector<IndexSubset> blocks;
  all_partitions(all, 0, blocks, partitions);

  const IndexSubset identity = IndexSubset::of({1});
  TheorySet out;
  for (const auto& xs : partitions) {
    for (const auto& ks : partitions) {
      if (xs.size() != ks.size()) continue;
      if (std::find(ks.begin(), ks.end(), identity) == ks.end()) continue;
      bool consistent = true;
      for (auto x : xs) {
        const auto& lx = label[x.bits()];
        for (auto k : ks) {
          const int first = lx[static_cast<std::size_t>(k.min_index() - 1)];
          for (int j : k.indices()) consistent = consistent && lx[static_cast<std::size_t>(j - 1)] == first;
        }
      }
      if (!consistent) continue;
      SuperTheory theory{xs, ks, {}};
      for (auto x : xs) {
        std::vector<Cyclotomic> row;
        for (auto k : ks) row.push_back(sigma[x.bits()][static_cast<std::size_t>(k.min_index() - 1)]);
        theory.st.push_back(std::move(row));
      }
      out.insert(std::move(theory));
    }
  }
  return out;
}

CyclotomicMatrix supercharacter_table_of(const CharacterTable& t, const SuperTheory& theory) {
  CyclotomicMatrix st;
  for (auto x : theory.x_parts) {
    std::vector<Cyclotomic> row;
    for (auto k : theory.k_parts) {
      const int col = k.min_index() - 1;
      Cyclotomic v(t.field, 0L);
      for (int i : x.indices()) v += t.value(i - 1, 0) * t.value(i - 1, col);
      row.push_back(std::move(v));
    }
    st.push_back(std::move(row));
  }
  return st;
}

std::string render_supercharacter_table(const SuperTheory& theory) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(theory.k_parts.size(), 0);
  for (const auto& row : theory.st) {
    std::vector<std::string> r;
    for (std::size_t c = 0; c < row.size(); ++c) {
      r.push_back(row[c].to_string());
      width[c] = std::max(width[c], r.back().size());
    }
    cells.push_back(std::move(r));
  }
  std::ostringstream out;
  for (const auto& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(width[c] - r[c].size(), ' ') << r[c];
    }
    out << '\n';
  }
  return out.str();
}

std::string partition_to_string(const std::vector<IndexSubset>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += "|";
    out += to_string(parts[i]);
  }
  return out;
}

namespace {

nlohmann::ordered_json parts_json(const std::vector<IndexSubset>& parts) {
  auto out = nlohmann::ordered_json::array();
  for (auto p : parts) out.push_back(p.indices());
  return out;
}

std::vector<IndexSubset> parts_from_json(const nlohmann::json& doc, int n) {
  if (!doc.is_array()) throw ParseError("partition must be an array of index arrays");
  std::vector<IndexSubset> parts;
  for (const auto& p : doc) {
    if (!p.is_array()) throw ParseError("partition part must be an array of indices");
    IndexSubset s;
    for (const auto& i : p) {
      const int idx = i.get<int>();
      if (idx < 1 || idx > n) throw ParseError("index " + std::to_string(idx) + " out of range");
      s.insert(idx);
    }
    parts.push_back(s);
  }
  return parts;
}

}  // namespace

nlohmann::ordered_json result_to_json(const CharacterTable& t, const SearchResult& result, std::string_view mode,
                                      bool include_timings) {
  nlohmann::ordered_json doc;
  doc["group"] = t.name;
  doc["n"] = t.num_classes();
  doc["root_order"] = t.root_order();
  doc["mode"] = mode;
  const auto& s = result.stats;
  nlohmann::ordered_json stats;
  stats["bad_part_count"] = s.bad_part_count ? nlohmann::ordered_json(*s.bad_part_count) : nlohmann::ordered_json(nullptr);
  stats["partitions_visited"] = s.partitions_visited;
  stats["kappa_calls"] = s.kappa_calls;
  stats["kappa_successes"] = s.kappa_successes;
  stats["early_aborts"] = s.early_aborts;
  stats["too_few_parts"] = s.too_few_parts;
  stats["pruned_nodes"] = s.pruned_nodes;
  stats["tree_edges"] = s.tree_edges;
  stats["finest_injected"] = s.finest_injected;
  if (include_timings) {
    stats["bad_parts_seconds"] = s.bad_parts_seconds;
    stats["search_seconds"] = s.search_seconds;
  }
  doc["stats"] = std::move(stats);
  auto theories = nlohmann::ordered_json::array();
  for (const auto& th : result.theories) {
    nlohmann::ordered_json item;
    item["x_partition"] = parts_json(th.x_parts);
    item["k_partition"] = parts_json(th.k_parts);
    auto st = nlohmann::ordered_json::array();
    for (const auto& row : th.st) {
      auto r = nlohmann::ordered_json::array();
      for (const auto& v : row) r.push_back(to_json(v));
      st.push_back(std::move(r));
    }
    item["st"] = std::move(st);
    theories.push_back(std::move(item));
  }
  doc["theories"] = std::move(theories);
  return doc;
}

std::vector<SuperTheory> theories_from_json(const CharacterTable& t, const nlohmann::json& doc) {
  if (!doc.contains("theories") || !doc["theories"].is_array()) throw ParseError("result document has no theories array");
  if (doc.value("root_order", 0) != t.root_order()) throw ParseError("result document root_order does not match the table");
  std::vector<SuperTheory> out;
  for (const auto& item : doc["theories"]) {
    SuperTheory th;
    th.x_parts = parts_from_json(item.at("x_partition"), t.num_classes());
    th.k_parts = parts_from_json(item.at("k_partition"), t.num_classes());
    for (const auto& row : item.at("st")) {
      std::vector<Cyclotomic> r;
      for (const auto& v : row) r.push_back(cyclotomic_from_json(t.field, v));
      th.st.push_back(std::move(r));
    }
    out.push_back(std::move(th));
  }
  return out;
}

std::string result_to_text(const CharacterTable& t, const SearchResult& result, std::string_view mode) {
  std::ostringstream out;
  out << t.name << ": " << result.theories.size() << " supercharacter theories (n = " << t.num_classes() << ", mode " << mode
      << ")\n";
  std::vector<std::string> xs;
  std::size_t width = std::string("characters").size();
  for (const auto& th : result.theories) {
    xs.push_back(partition_to_string(th.x_parts));
    width = std::max(width, xs.back().size());
  }
  out << "  #  parts  " << "characters" << std::string(width - 10, ' ') << "  classes\n";
  std::size_t idx = 0;
  for (const auto& th : result.theories) {
    std::string num = std::to_string(idx + 1);
    std::string parts = std::to_string(th.size());
    out << std::string(3 - std::min<std::size_t>(3, num.size()), ' ') << num << "  " << std::string(5 - std::min<std::size_t>(5, parts.size()), ' ')
        << parts << "  " << xs[idx] << std::string(width - xs[idx].size(), ' ') << "  " << partition_to_string(th.k_parts) << '\n';
    ++idx;
  }
  return out.str();
}

}  // namespace supchar
