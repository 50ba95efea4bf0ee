#pragma once

#include <array>
#include <optional>

#include "scd/core.hpp"

// Extended Skolem sequences, Langford-style pair partitions, and additive
// triple partitions.  Existence predicates transcribe the known conditions;
// constructors are data-first (embedded tables) with verified backtracking
// as fallback.  Every returned object is re-verified before return.

namespace scd::seq {

struct ExtendedSkolem {
  int v = 0;
  int d = 0;                // hole position in {1..2v+1}
  std::vector<int> values;  // a_1..a_v
};

struct PairPartition {
  int u = 0, d = 0, c = 0;
  std::vector<std::pair<int, int>> pairs;  // x_i < y_i, y_i - x_i spans [d, d+u-1]
};

struct TriplePartition {
  int d = 0, u = 0;
  std::optional<int> hole;
  std::vector<std::array<int, 3>> triples;  // a + b = c
};

inline constexpr long long kDefaultBudget = 100'000'000;

bool skolem_exists(int v, int d);  // throws OutOfRange unless 1 <= d <= 2v+1
ExtendedSkolem find_extended_skolem(int v, int d,
                                    long long budget = kDefaultBudget);

bool langford_pairs_exists(int u, int d, int c);
PairPartition find_langford_pairs(int u, int d, int c,
                                  long long budget = kDefaultBudget);

// Partition [lo, hi] \ {hole?} into pairs whose difference multiset is
// exactly [d, d+count-1].  Generalized helper behind find_langford_pairs and
// the PDF extension lemmas.
std::optional<std::vector<std::pair<int, int>>> pair_cover(
    int lo, int hi, std::optional<int> hole, int d, long long budget);

TriplePartition find_triple_partition(int d, int u, std::optional<int> hole,
                                      long long budget = kDefaultBudget);

bool verify_skolem(const ExtendedSkolem& s);
bool verify_pairs(const PairPartition& p);
bool verify_triples(const TriplePartition& p);

}  // namespace scd::seq
