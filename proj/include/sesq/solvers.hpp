#pragma once

#include "sesq/problems.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace sesq {

struct SolveStats {
  std::uint64_t subsets_examined = 0;
  double wall_ms = 0.0;
};

struct SolveResult {
  bool yes = false;
  std::optional<SubsetCertificate> subset_cert;
  std::optional<SplitCertificate> split_cert;
  std::string strategy;
  SolveStats stats;
};

struct SolveOptions {
  int limit_n = 22;
  int threads = 1;
  bool deterministic = true;  // lexicographically smallest witness
  int block_cap = kDefaultBlockCap;
};

// Exhaustive scan over all 2^n subsets. Semantic ground truth at desk scale.
// OpenMP-parallel Gray-code kernel; witnesses are reduced to the
// lexicographically smallest regardless of worker count.
SolveResult solve_ses_bruteforce(const SESInstance& instance, const SolveOptions& opts = {});

// Serial reference: one verifier call per subset, no incremental state.
// Kept as the oracle the fast kernel is tested against.
SolveResult solve_ses_reference(const SESInstance& instance, int limit_n = 22);

// Meet-in-the-middle over per-qubit weights; requires a product state and an
// additive (magnetization) weight. Exact when the instance carries exact
// per-qubit decimals.
SolveResult solve_ses_separable(const SESInstance& instance);

SolveResult solve_sessp_bruteforce(const SESSPInstance& instance, const SolveOptions& opts = {});
SolveResult solve_sessp_reference(const SESSPInstance& instance, int limit_n = 22);

// Classical pseudo-polynomial oracles (exact, with witness reconstruction).
std::optional<std::vector<int>> solve_subset_sum_dp(const std::vector<long long>& values,
                                                    long long target);
std::optional<std::vector<int>> solve_partition_dp(const std::vector<long long>& values);

// Lexicographic order on the ascending site lists encoded by two bit masks.
bool mask_lex_less(std::uint64_t a, std::uint64_t b);
std::vector<int> mask_to_sites(std::uint64_t mask, int n);

}  // namespace sesq
