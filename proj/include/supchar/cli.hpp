#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supchar/engine.hpp"

namespace supchar {

struct GroupSpec {
  enum class Kind { cyclic, dihedral, frobenius, file };
  Kind kind = Kind::cyclic;
  int a = 0;  // m, or p for frobenius
  int b = 0;  // q for frobenius
  std::string path;

  std::string to_string() const;
};

// cyclic:m, dihedral:m (order 2m), frobenius:p:q, file:PATH. Throws ArgumentError.
GroupSpec parse_group_spec(std::string_view text);
CharacterTable resolve_group(const GroupSpec& spec);

// Theory sets of the two modes disagree.
class ModeMismatch : public Error {
 public:
  using Error::Error;
};

struct BenchRow {
  int kappa = 0;  // number of classes
  std::string group;
  std::uint64_t sup = 0;
  std::optional<std::uint64_t> bad_parts;
  std::string alpha_percent;
  std::optional<double> main_seconds;
  std::optional<double> first_seconds;
  std::optional<std::uint64_t> main_kappa_calls;
  std::optional<std::uint64_t> first_kappa_calls;

  std::optional<double> ratio() const;  // first / main
};

struct BenchReport {
  int repeats = 1;
  std::vector<BenchRow> rows;

  std::string to_text() const;
  std::string to_csv() const;
};

/// Runs every (group, mode) pair `repeats` times and averages wall time.
/// Throws ModeMismatch when two modes disagree on the theories of a group.
BenchReport run_bench(const std::vector<GroupSpec>& specs, const std::vector<SearchMode>& modes, int repeats,
                      unsigned threads = 1);

// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidTable = 1;
inline constexpr int kExitSize = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitArguments = 4;
inline constexpr int kExitModeMismatch = 5;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supchar
