#pragma once

#include "sesq/problems.hpp"
#include "sesq/rational.hpp"

#include <utility>
#include <vector>

namespace sesq {

struct SubsetSumInstance {
  std::vector<long long> sizes;  // positive
  long long target = 0;          // positive
};

struct PartitionInstance {
  std::vector<long long> sizes;  // positive
};

struct RealSubsetSumInstance {
  std::vector<Rational> sizes;  // nonnegative
  Rational target;              // B, with B > epsilon
  Rational epsilon;             // nonnegative
  int precision_digits = 0;
};

// Scale-equivalence-class representative: sizes divided by C = sum s(a).
// The all-zero case passes through unaltered and is flagged; its decision
// is forced to "no" by B > epsilon.
struct NormalizedRealInstance {
  std::vector<Rational> tilde_sizes;
  Rational tilde_target;
  Rational tilde_epsilon;
  Rational normalization;  // C
  bool zero_total = false;
  int precision_digits = 0;
};

// Data needed to pull a quantum certificate back to a classical subset.
struct ReductionMap {
  enum class Kind { Identity, PairDoubling };
  Kind kind = Kind::Identity;
  int item_count = 0;
  Rational normalization;  // C of the source instance

  // classical item subset -> qubit subset
  std::vector<int> forward(const std::vector<int>& items) const;
  // qubit subset -> classical item subset. Under pair doubling, an item is
  // selected iff exactly one qubit of its pair is present; fully included
  // pairs are pure and contribute weight 0.
  std::vector<int> back(const std::vector<int>& sites) const;
};

void validate(const SubsetSumInstance& inst);
void validate(const PartitionInstance& inst);
void validate(const RealSubsetSumInstance& inst);
void validate(const NormalizedRealInstance& inst);

// SUBSET SUM -> REAL SUBSET SUM. Requires 0 <= epsilon < 1/2 so the real
// window contains exactly the integer target.
RealSubsetSumInstance lift_to_real(const SubsetSumInstance& inst, const Rational& epsilon);

NormalizedRealInstance normalize(const RealSubsetSumInstance& inst);

// Product state with qubit i in sqrt(1 - s_i)|0> + sqrt(s_i)|1> and
// magnetization(Z) weight; per-qubit weight equals s_i exactly.
std::pair<SESInstance, ReductionMap> reduce_to_ses_magnetization(
    const NormalizedRealInstance& inst);

// PARTITION -> SESSP over the same product-state family, epsilon = 1/(2C).
std::pair<SESSPInstance, ReductionMap> reduce_to_sessp(const PartitionInstance& inst);

// 2n-qubit entangled-pair gadget with entropy weight; pair i carries
// single-qubit entropy s_i on both members. The window is widened by the
// float-realizability guard; instances whose decision depends on a window
// narrower than the guard are rejected with WindowTooNarrow.
std::pair<SESInstance, ReductionMap> reduce_to_ses_entropy(
    const NormalizedRealInstance& inst);

}  // namespace sesq
