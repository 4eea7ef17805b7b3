#pragma once

// Enumeration of the distinct annihilators ann R^p(z^A) over the weight box
// {1..pmax}^m.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "residuum/monomial_ideal.hpp"
#include "residuum/residue.hpp"

namespace residuum {

struct SweepOptions {
  /// Run even when pmax^m exceeds the guard.
  bool force = false;
  /// Worker threads; 0 or 1 evaluates on the calling thread.
  unsigned threads = 1;
  /// Largest number of weights evaluated without `force`.
  std::uint64_t guard = 10'000'000;
};

struct SweepClass {
  MonomialIdeal ideal;
  Weight representative;  // lexicographically smallest weight producing `ideal`
  std::uint64_t count = 0;  // number of weights in the box producing `ideal`
};

struct SweepResult {
  std::int64_t pmax = 0;
  std::uint64_t weights = 0;
  /// Ordered by representative weight.
  std::vector<SweepClass> classes;
};

/// Throws ScaleRefusedError when pmax^m exceeds the guard and force is off.
SweepResult enumerate_annihilators(const MonomialSeq& seq, std::int64_t pmax, const SweepOptions& options = {});

}  // namespace residuum
