#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "supchar/exactnum.hpp"

namespace supchar {

inline constexpr int kMaxClasses = 64;

/// Ordinary character table. Row i is the irreducible character chi_{i+1},
/// column j the conjugacy class K_{j+1}; row 0 is the trivial character and
/// column 0 the identity class. All values live in Q(zeta_N), N = root_order.
struct CharacterTable {
  std::string name;
  std::uint64_t order = 0;
  FieldPtr field;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::vector<Cyclotomic>> values;

  int num_classes() const noexcept { return static_cast<int>(class_sizes.size()); }
  int root_order() const noexcept { return field->order(); }
  const Cyclotomic& value(int character, int cls) const {
    return values[static_cast<std::size_t>(character)][static_cast<std::size_t>(cls)];
  }
};

// Z_m, classes and characters indexed by exponent: chi_i(K_j) = zeta_m^{(i-1)(j-1)}.
CharacterTable cyclic_table(int m);

// Dihedral group of order 2m. Classes: identity, rotation pairs {r^j, r^-j}
// for ascending j (r^{m/2} last when m is even), then the reflection
// classes. Characters: trivial, the remaining linear characters, then the
// degree-2 characters chi_k for ascending k.
CharacterTable dihedral_table(int m);

// Nonabelian group Z_p : Z_q of order pq (q | p-1). Classes: identity, the
// <h>-orbits on Z_p^* ordered by least element, then b, b^2, ..., b^{q-1}.
// Characters: trivial, the q-1 nontrivial lifts from Z_q, then the induced
// characters of degree q in order of the orbit they come from.
CharacterTable frobenius_pq_table(int p, int q);

// All violated invariants; empty when the table is valid.
std::vector<TableViolation> validate_table(const CharacterTable& t);

// Parses the JSON table document without validating invariants beyond shape.
// Throws ParseError on malformed input and SizeError when num_classes > 64.
CharacterTable parse_table(const nlohmann::json& doc);
CharacterTable parse_table(std::string_view text);
inline CharacterTable parse_table(const std::string& text) { return parse_table(std::string_view(text)); }
inline CharacterTable parse_table(const char* text) { return parse_table(std::string_view(text)); }

// parse_table followed by validate_table; throws InvalidTable with every
// violation when any invariant fails.
CharacterTable load_table(const nlohmann::json& doc);
CharacterTable load_table(std::string_view text);
inline CharacterTable load_table(const std::string& text) { return load_table(std::string_view(text)); }
inline CharacterTable load_table(const char* text) { return load_table(std::string_view(text)); }
CharacterTable load_table_file(const std::string& path);

nlohmann::ordered_json table_to_json(const CharacterTable& t);
std::string serialize_table(const CharacterTable& t);

}  // namespace supchar
