#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "supchar/sigma.hpp"

namespace supchar {

// Partition of {2..n} into nonempty parts, ordered by least element. The
// trivial character {1} is implicit.
struct CharPartition {
  std::vector<IndexSubset> parts;
};

using CyclotomicMatrix = std::vector<std::vector<Cyclotomic>>;

/// A supercharacter theory: character partition and class partition, both
/// with {1} as first part and ordered by least element, and the
/// supercharacter table (row per character part, column per class part).
struct SuperTheory {
  std::vector<IndexSubset> x_parts;
  std::vector<IndexSubset> k_parts;
  CyclotomicMatrix st;

  int size() const noexcept { return static_cast<int>(x_parts.size()); }
};

struct KappaFailure {
  enum class Kind { TooManyParts, TooFewParts };
  Kind kind;
  // 1-based class index at which the class partition outgrew the character
  // partition (TooManyParts), or n for TooFewParts.
  int column;
};

using KappaResult = std::variant<SuperTheory, KappaFailure>;

/// Reusable buffers for the class-partition kernel. One per thread.
class KappaWorkspace {
 public:
  struct Outcome {
    bool ok = false;
    KappaFailure failure{KappaFailure::Kind::TooFewParts, 0};
  };

  // Builds the class partition for parts = {1} followed by the character
  // parts. On success class_parts() holds it, ordered by least element.
  Outcome classify(const SigmaMatrix& m, std::span<const IndexSubset> parts);
  const std::vector<IndexSubset>& class_parts() const noexcept { return kappa_; }

 private:
  std::vector<IndexSubset> kappa_;
  std::vector<int> reps_;                // representative column per class part
  std::vector<std::uint64_t> rep_fp_;    // fingerprint columns of the representatives, part-major
  std::vector<std::uint64_t> column_fp_;
};

// Fills in the supercharacter table for a consistent pair.
CyclotomicMatrix supercharacter_table(const SigmaMatrix& m, std::span<const IndexSubset> x_parts,
                                      std::span<const IndexSubset> k_parts);

/// For a partition of the nontrivial characters, derive the only candidate
/// partition of the classes column by column and return the theory, or the
/// reason none exists. Aborts as soon as the class side has more parts than
/// the character side.
KappaResult create_kappa(const SigmaMatrix& m, const CharPartition& irrp);

// The finest theory m(G): all parts singletons.
SuperTheory finest_theory(const SigmaMatrix& m);

// Checks the defining conditions directly from the table with Cyclotomic
// arithmetic: both sides are set partitions of {1..n}, {1} is a class part,
// the part counts agree, each sigma_X is constant on each class part, and st
// (when present) holds those constants. Returns the first failed condition.
std::optional<std::string> check_theory(const CharacterTable& t, const SuperTheory& theory);
bool verify_theory(const CharacterTable& t, const SuperTheory& theory);

}  // namespace supchar
