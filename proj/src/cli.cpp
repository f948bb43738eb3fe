#include "supchar/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace supchar {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ArgumentError("bad " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::cyclic: return "cyclic:" + std::to_string(a);
    case Kind::dihedral: return "dihedral:" + std::to_string(a);
    case Kind::frobenius: return "frobenius:" + std::to_string(a) + ":" + std::to_string(b);
    case Kind::file: return "file:" + path;
  }
  return {};
}

GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ArgumentError("group spec '" + std::string(text) + "' has no ':'");
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind == "file") {
    if (rest.empty()) throw ArgumentError("file: needs a path");
    spec.kind = GroupSpec::Kind::file;
    spec.path = std::string(rest);
    return spec;
  }
  const auto fields = split(rest, ':');
  if (kind == "cyclic" || kind == "dihedral") {
    if (fields.size() != 1) throw ArgumentError("expected " + std::string(kind) + ":m");
    spec.kind = kind == "cyclic" ? GroupSpec::Kind::cyclic : GroupSpec::Kind::dihedral;
    spec.a = parse_int(fields[0], "m");
  } else if (kind == "frobenius") {
    if (fields.size() != 2) throw ArgumentError("expected frobenius:p:q");
    spec.kind = GroupSpec::Kind::frobenius;
    spec.a = parse_int(fields[0], "p");
    spec.b = parse_int(fields[1], "q");
  } else {
    throw ArgumentError("unknown group kind '" + std::string(kind) + "'");
  }
  return spec;
}

CharacterTable resolve_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return cyclic_table(spec.a);
    case GroupSpec::Kind::dihedral: return dihedral_table(spec.a);
    case GroupSpec::Kind::frobenius: return frobenius_pq_table(spec.a, spec.b);
    case GroupSpec::Kind::file: return load_table_file(spec.path);
  }
  throw ArgumentError("bad group spec");
}

std::optional<double> BenchRow::ratio() const {
  if (!main_seconds || !first_seconds || *main_seconds <= 0.0) return std::nullopt;
  return *first_seconds / *main_seconds;
}

namespace {

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

template <class T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) return fixed(*v, 6);
  else return std::to_string(*v);
}

std::string pad(const std::string& s, std::size_t w, bool right) {
  if (s.size() >= w) return s;
  return right ? std::string(w - s.size(), ' ') + s : s + std::string(w - s.size(), ' ');
}

}  // namespace

std::string BenchReport::to_csv() const {
  std::ostringstream out;
  out << "kappa,group,sup,bad_parts,alpha_percent,ma_seconds,fa_seconds,fa_ma,ma_kappa_calls,fa_kappa_calls\n";
  for (const auto& r : rows) {
    const auto ratio = r.ratio();
    out << r.kappa << ',' << r.group << ',' << r.sup << ',' << opt(r.bad_parts) << ',' << r.alpha_percent << ','
        << opt(r.main_seconds) << ',' << opt(r.first_seconds) << ',' << (ratio ? fixed(*ratio, 2) : "") << ','
        << opt(r.main_kappa_calls) << ',' << opt(r.first_kappa_calls) << '\n';
  }
  return out.str();
}

std::string BenchReport::to_text() const {
  const std::vector<std::string> head{"kappa", "group", "|Sup|", "|BP|", "alpha%", "MA s", "FA s", "FA/MA", "MA calls", "FA calls"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    const auto ratio = r.ratio();
    cells.push_back({std::to_string(r.kappa), r.group, std::to_string(r.sup), opt(r.bad_parts), r.alpha_percent,
                     r.main_seconds ? fixed(*r.main_seconds, 4) : "", r.first_seconds ? fixed(*r.first_seconds, 4) : "",
                     ratio ? fixed(*ratio, 2) : "", opt(r.main_kappa_calls), opt(r.first_kappa_calls)});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  out << "mean wall time over " << repeats << (repeats == 1 ? " run\n" : " runs\n");
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << "  ";
      out << pad(row[c], width[c], c != 1);
    }
    out << '\n';
  };
  line(head);
  for (const auto& row : cells) line(row);
  return out.str();
}

BenchReport run_bench(const std::vector<GroupSpec>& specs, const std::vector<SearchMode>& modes, int repeats,
                      unsigned threads) {
  if (repeats < 1) throw ArgumentError("repeats must be at least 1");
  if (modes.empty()) throw ArgumentError("no modes to run");
  BenchReport report;
  report.repeats = repeats;
  for (const auto& spec : specs) {
    const auto table = resolve_group(spec);
    BenchRow row;
    row.kappa = table.num_classes();
    row.group = table.name;
    std::optional<TheorySet> reference;
    for (const auto mode : modes) {
      double total = 0.0;
      SearchResult result;
      for (int i = 0; i < repeats; ++i) {
        const auto start = std::chrono::steady_clock::now();
        result = find_supertheories(table, SearchOptions{mode, threads});
        total += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
      const double mean = total / repeats;
      if (reference && !reference->same_partitions(result.theories))
        throw ModeMismatch(table.name + ": main and first modes found different theories");
      if (!reference) reference = result.theories;
      row.sup = result.theories.size();
      if (mode == SearchMode::main) {
        row.main_seconds = mean;
        row.main_kappa_calls = result.stats.kappa_calls;
        row.bad_parts = result.stats.bad_part_count;
      } else {
        row.first_seconds = mean;
        row.first_kappa_calls = result.stats.kappa_calls;
      }
    }
    if (!row.bad_parts) row.bad_parts = find_bad_parts(table, threads).count();
    row.alpha_percent = format_percent(alpha_ratio(*row.bad_parts, table.num_classes()));
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

struct CommonOptions {
  std::string group;
  std::string mode = "main";
  std::string format;
  std::string output;
  unsigned threads = 1;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw IoError("write to " + path + " failed");
}

std::vector<SearchMode> modes_of(const std::string& mode) {
  if (mode == "both") return {SearchMode::main, SearchMode::first};
  return {parse_mode(mode)};
}

struct ModeRun {
  SearchMode mode;
  SearchResult result;
};

std::vector<ModeRun> run_modes(const CharacterTable& t, const std::string& mode, unsigned threads) {
  std::vector<ModeRun> runs;
  for (const auto m : modes_of(mode)) runs.push_back({m, find_supertheories(t, SearchOptions{m, threads})});
  if (runs.size() == 2 && !runs[0].result.theories.same_partitions(runs[1].result.theories))
    throw ModeMismatch(t.name + ": main mode found " + std::to_string(runs[0].result.theories.size()) +
                       " theories, first mode " + std::to_string(runs[1].result.theories.size()));
  return runs;
}

int cmd_list(const CommonOptions& o, bool timings, std::ostream& out) {
  const auto table = resolve_group(parse_group_spec(o.group));
  const auto runs = run_modes(table, o.mode, o.threads);
  std::string text;
  if (o.format == "text") {
    text = result_to_text(table, runs.front().result, o.mode);
  } else {
    auto doc = result_to_json(table, runs.front().result, o.mode, timings);
    if (runs.size() == 2) {
      // stats of the first-mode run next to the main-mode stats
      auto other = result_to_json(table, runs[1].result, "first", timings);
      doc["stats_first"] = other["stats"];
    }
    text = doc.dump(2) + "\n";
  }
  emit(text, o.output, out);
  return kExitOk;
}

int cmd_count(const CommonOptions& o, std::ostream& out) {
  const auto table = resolve_group(parse_group_spec(o.group));
  const auto modes = modes_of(o.mode);
  std::optional<std::uint64_t> count;
  if (modes.size() == 2) {
    count = run_modes(table, o.mode, o.threads).front().result.theories.size();
  } else {
    count = count_supertheories(table, SearchOptions{modes.front(), o.threads});
  }
  emit(std::to_string(*count) + "\n", o.output, out);
  return kExitOk;
}

int cmd_badparts(const CommonOptions& o, bool masks, std::ostream& out) {
  const auto table = resolve_group(parse_group_spec(o.group));
  const auto bad = find_bad_parts(table, o.threads);
  const auto alpha = alpha_ratio(bad.count(), table.num_classes());
  std::string text;
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["group"] = table.name;
    doc["n"] = table.num_classes();
    doc["bad_part_count"] = bad.count();
    doc["alpha"] = to_string(alpha);
    doc["alpha_percent"] = format_percent(alpha);
    if (masks) {
      auto list = nlohmann::ordered_json::array();
      for (const auto& part : bad.members()) list.push_back(part.indices());
      doc["bad_parts"] = std::move(list);
    }
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "group: " << table.name << "\nclasses: " << table.num_classes() << "\nbad_parts: " << bad.count()
      << "\nalpha: " << to_string(alpha) << " (" << format_percent(alpha) << "%)\n";
    if (masks)
      for (const auto& part : bad.members()) s << to_string(part) << '\n';
    text = s.str();
  }
  emit(text, o.output, out);
  return kExitOk;
}

int cmd_validate(const std::string& group, std::ostream& out) {
  const auto spec = parse_group_spec(group);
  CharacterTable table;
  if (spec.kind == GroupSpec::Kind::file) {
    std::ifstream file(spec.path, std::ios::binary);
    if (!file) throw IoError("cannot read " + spec.path);
    std::stringstream buf;
    buf << file.rdbuf();
    table = parse_table(buf.str());
  } else {
    table = resolve_group(spec);
  }
  const auto violations = validate_table(table);
  if (violations.empty()) {
    out << "OK\n";
    return kExitOk;
  }
  for (const auto& v : violations) out << v.to_string() << '\n';
  return kExitInvalidTable;
}

int cmd_bench(const std::vector<std::string>& groups, const std::string& mode, int repeats, unsigned threads,
              const std::string& format, const std::string& output, std::ostream& out) {
  std::vector<GroupSpec> specs;
  for (const auto& g : groups) specs.push_back(parse_group_spec(g));
  const auto report = run_bench(specs, modes_of(mode), repeats, threads);
  emit(format == "csv" ? report.to_csv() : report.to_text(), output, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate supercharacter theories from a character table"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  CommonOptions o;
  bool timings = false;
  bool masks = false;
  int repeats = 3;
  std::vector<std::string> bench_groups;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group,-g", o.group, "cyclic:m | dihedral:m | frobenius:p:q | file:PATH")->required();
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads,-j", o.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  };
  const auto modes = CLI::IsMember({"main", "first", "both"});

  auto* list = app.add_subcommand("list", "list every supercharacter theory");
  add_group(list);
  list->add_option("--mode", o.mode)->check(modes);
  list->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  list->add_option("--output,-o", o.output);
  list->add_flag("--timings", timings, "include wall-clock timings in JSON stats");
  add_threads(list);

  auto* count = app.add_subcommand("count", "print the number of theories");
  add_group(count);
  count->add_option("--mode", o.mode)->check(modes);
  count->add_option("--output,-o", o.output);
  add_threads(count);

  auto* badparts = app.add_subcommand("badparts", "bad-part count and alpha");
  add_group(badparts);
  badparts->add_flag("--masks", masks, "list every bad part");
  badparts->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  badparts->add_option("--output,-o", o.output);
  add_threads(badparts);

  auto* bench = app.add_subcommand("bench", "time main and first modes");
  bench->add_option("--group,-g", bench_groups, "repeatable")->required();
  bench->add_option("--mode", o.mode)->check(modes);
  bench->add_option("--repeats,-r", repeats)->check(CLI::PositiveNumber);
  bench->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv"}));
  bench->add_option("--output,-o", o.output);
  add_threads(bench);

  auto* validate = app.add_subcommand("validate", "check the table invariants");
  add_group(validate);

  auto* table = app.add_subcommand("table", "print the table document");
  add_group(table);
  table->add_option("--output,-o", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitArguments;
  }

  try {
    if (*list) return cmd_list(o, timings, out);
    if (*count) return cmd_count(o, out);
    if (*badparts) return cmd_badparts(o, masks, out);
    if (*bench) {
      if (o.mode == "main" && bench->count("--mode") == 0) o.mode = "both";
      return cmd_bench(bench_groups, o.mode, repeats, o.threads, o.format, o.output, out);
    }
    if (*validate) return cmd_validate(o.group, out);
    if (*table) {
      emit(serialize_table(resolve_group(parse_group_spec(o.group))), o.output, out);
      return kExitOk;
    }
  } catch (const InvalidTable& e) {
    err << e.what() << '\n';
    return kExitInvalidTable;
  } catch (const ParseError& e) {
    err << "invalid table: " << e.what() << '\n';
    return kExitInvalidTable;
  } catch (const SizeError& e) {
    err << "size limit: " << e.what() << '\n';
    return kExitSize;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ModeMismatch& e) {
    err << "mode mismatch: " << e.what() << '\n';
    return kExitModeMismatch;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitArguments;
  }
  return kExitArguments;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"supchar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace supchar
