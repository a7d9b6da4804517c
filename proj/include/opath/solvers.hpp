#pragma once

#include "opath/geometry.hpp"
#include "opath/noise.hpp"

namespace opath {

/// Largest N accepted by exact_exhaustive unless the caller raises the limit.
inline constexpr int kExhaustiveDefaultLimit = 10;

/// Largest N accepted by exact_held_karp (memory guard: the DP table holds
/// N * 2^N doubles).
inline constexpr int kHeldKarpLimit = 24;

/// Nearest-neighbor collection: repeatedly visit the closest unvisited
/// collectible, starting from the instance's start. Ties go to the lowest
/// index. Deterministic.
SolveResult greedy(const Instance& instance);

/// Nearest-neighbor under noisy distance perception: at each step every
/// unvisited candidate's true distance is multiplied by an independent
/// truncated-normal factor drawn from `rng` (candidates in ascending index
/// order), and the smallest perceived distance wins. The reported
/// total_length is the true geometric length of the chosen order.
/// sigma == 0 reproduces `greedy` exactly.
SolveResult greedy_with_error(const Instance& instance, double sigma, RandomStream& rng);

/// Globally optimal open path by depth-first enumeration of all N!
/// permutations; among equal-length optima returns the lexicographically
/// smallest order. Branch-and-bound pruning (on by default) abandons any
/// partial path at least as long as the incumbent and never changes the
/// result. Throws SizeExceededError when N > limit.
SolveResult exact_exhaustive(const Instance& instance, int limit = kExhaustiveDefaultLimit,
                             bool prune = true);

/// Globally optimal open path by dynamic programming over collectible
/// subsets: O(N^2 * 2^N) transitions. Agrees with exact_exhaustive in
/// length on any instance both accept; tie orders may differ. Throws
/// SizeExceededError when N > kHeldKarpLimit.
SolveResult exact_held_karp(const Instance& instance);

}  // namespace opath
