#include "sesq/reductions.hpp"

#include "sesq/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sesq {

std::vector<int> ReductionMap::forward(const std::vector<int>& items) const {
  std::vector<int> sites;
  for (int i : items) {
    if (i < 0 || i >= item_count) throw InvalidSubset("item index out of range");
    sites.push_back(kind == Kind::Identity ? i : 2 * i);
  }
  std::sort(sites.begin(), sites.end());
  return sites;
}

std::vector<int> ReductionMap::back(const std::vector<int>& sites) const {
  int qubits = kind == Kind::Identity ? item_count : 2 * item_count;
  std::vector<int> count(item_count, 0);
  for (int s : sites) {
    if (s < 0 || s >= qubits) throw InvalidSubset("site index out of range");
    count[kind == Kind::Identity ? s : s / 2] += 1;
  }
  std::vector<int> items;
  for (int i = 0; i < item_count; ++i) {
    if (kind == Kind::Identity) {
      if (count[i]) items.push_back(i);
    } else if (count[i] == 1) {  // fully included pairs are pure, weight 0
      items.push_back(i);
    }
  }
  return items;
}

void validate(const SubsetSumInstance& inst) {
  if (inst.sizes.empty()) throw InvariantViolation("instance has no items");
  for (long long s : inst.sizes)
    if (s < 1) throw InvariantViolation("sizes must be positive integers");
  if (inst.target < 1) throw InvariantViolation("target must be positive");
}

void validate(const PartitionInstance& inst) {
  if (inst.sizes.empty()) throw InvariantViolation("instance has no items");
  for (long long s : inst.sizes)
    if (s < 1) throw InvariantViolation("sizes must be positive integers");
}

void validate(const RealSubsetSumInstance& inst) {
  if (inst.sizes.empty()) throw InvariantViolation("instance has no items");
  for (const auto& s : inst.sizes)
    if (s < 0) throw InvariantViolation("sizes must be nonnegative");
  if (inst.target < 0 || inst.epsilon < 0)
    throw InvariantViolation("B and epsilon must be nonnegative");
  if (!(inst.target > inst.epsilon)) throw InvariantViolation("requires B > epsilon");
}

void validate(const NormalizedRealInstance& inst) {
  if (inst.tilde_sizes.empty()) throw InvariantViolation("instance has no items");
  Rational sum = 0;
  for (const auto& s : inst.tilde_sizes) {
    if (s < 0 || s > 1) throw InvariantViolation("normalized sizes must lie in [0,1]");
    sum += s;
  }
  if (!(inst.tilde_target > inst.tilde_epsilon))
    throw InvariantViolation("requires B > epsilon");
  if (inst.tilde_target > Rational(static_cast<long long>(inst.tilde_sizes.size())))
    throw InvariantViolation("normalized target exceeds item count");
  if (!inst.zero_total && sum != 1)
    throw InvariantViolation("normalized sizes must sum to 1");
  if (inst.zero_total && sum != 0)
    throw InvariantViolation("flagged instance must be all-zero");
}

RealSubsetSumInstance lift_to_real(const SubsetSumInstance& inst, const Rational& epsilon) {
  validate(inst);
  if (epsilon < 0 || epsilon >= Rational(1, 2))
    throw EpsilonTooLarge("epsilon must lie in [0, 1/2) to keep the integer window tight");
  RealSubsetSumInstance real;
  for (long long s : inst.sizes) real.sizes.emplace_back(s);
  real.target = inst.target;
  real.epsilon = epsilon;
  real.precision_digits = std::max(0, decimal_digits(epsilon));
  validate(real);
  return real;
}

NormalizedRealInstance normalize(const RealSubsetSumInstance& inst) {
  validate(inst);
  Rational c = 0;
  for (const auto& s : inst.sizes) c += s;

  NormalizedRealInstance out;
  out.normalization = c;
  out.precision_digits = inst.precision_digits;
  if (c == 0) {
    out.zero_total = true;
    out.tilde_sizes = inst.sizes;
    out.tilde_target = inst.target;
    out.tilde_epsilon = inst.epsilon;
  } else {
    for (const auto& s : inst.sizes) out.tilde_sizes.push_back(s / c);
    out.tilde_target = inst.target / c;
    out.tilde_epsilon = inst.epsilon / c;
  }
  validate(out);
  return out;
}

namespace {

MPSState amplitude_state(const std::vector<Rational>& sizes) {
  std::vector<std::array<cd, 2>> amps;
  for (const auto& s : sizes) {
    double p = to_double(s);
    amps.push_back({std::sqrt(1.0 - p), std::sqrt(p)});
  }
  return product_state(amps);
}

}  // namespace

std::pair<SESInstance, ReductionMap> reduce_to_ses_magnetization(
    const NormalizedRealInstance& inst) {
  validate(inst);
  SESInstance ses;
  ses.state = amplitude_state(inst.tilde_sizes);
  ses.weight = WeightFunction::magnetization(Axis::Z);
  ses.target = inst.tilde_target;
  ses.epsilon = inst.tilde_epsilon;
  ses.precision_digits = inst.precision_digits;
  ses.exact_site_weights = inst.tilde_sizes;
  validate(ses);

  ReductionMap map;
  map.kind = ReductionMap::Kind::Identity;
  map.item_count = static_cast<int>(inst.tilde_sizes.size());
  map.normalization = inst.normalization;
  return {std::move(ses), map};
}

std::pair<SESSPInstance, ReductionMap> reduce_to_sessp(const PartitionInstance& inst) {
  validate(inst);
  Rational c = 0;
  for (long long s : inst.sizes) c += s;

  std::vector<Rational> tilde;
  for (long long s : inst.sizes) tilde.push_back(Rational(s) / c);

  SESSPInstance sp;
  sp.state = amplitude_state(tilde);
  sp.weight = WeightFunction::magnetization(Axis::Z);
  // unequal integer side sums differ by at least 1, i.e. 1/C after
  // normalization; half that is the largest safe window
  sp.epsilon = Rational(1) / (2 * c);
  sp.exact_site_weights = tilde;
  validate(sp);

  ReductionMap map;
  map.kind = ReductionMap::Kind::Identity;
  map.item_count = static_cast<int>(inst.sizes.size());
  map.normalization = c;
  return {std::move(sp), map};
}

std::pair<SESInstance, ReductionMap> reduce_to_ses_entropy(
    const NormalizedRealInstance& inst) {
  validate(inst);
  const int items = static_cast<int>(inst.tilde_sizes.size());
  const int qubits = 2 * items;

  // Realizing the pair entropies in doubles leaves up to ~1e-12 error per
  // pair; widen the window by qubits * 1e-9 and reject instances whose
  // decision could flip inside that guard band.
  const Rational widen = Rational(qubits, 1000000000);

  BigInt grid_den = common_denominator(inst.tilde_sizes);
  Rational grid = Rational(1) / Rational(grid_den);
  Rational max_sum = inst.zero_total ? Rational(0) : Rational(1);

  Rational upper = inst.tilde_target + inst.tilde_epsilon;
  if (upper < max_sum) {
    Rational f = upper / grid;
    BigInt fl = floor_rational(f);
    Rational dist = (Rational(fl) + 1 - f) * grid;
    if (dist <= 2 * widen)
      throw WindowTooNarrow("achievable sums approach the upper window edge");
  }
  Rational lower = inst.tilde_target - inst.tilde_epsilon;
  if (lower > 0) {
    Rational f = lower / grid;
    BigInt fl = floor_rational(f);
    Rational dist = (f == Rational(fl)) ? grid : (f - Rational(fl)) * grid;
    if (dist <= 2 * widen)
      throw WindowTooNarrow("achievable sums approach the lower window edge");
  }

  std::vector<double> entropies;
  for (const auto& s : inst.tilde_sizes) entropies.push_back(to_double(s));

  SESInstance ses;
  ses.state = entangled_pair_chain(entropies);
  ses.weight = WeightFunction::entropy();
  ses.target = inst.tilde_target;
  ses.epsilon = inst.tilde_epsilon + widen;
  ses.precision_digits = inst.precision_digits;
  validate(ses);

  ReductionMap map;
  map.kind = ReductionMap::Kind::PairDoubling;
  map.item_count = items;
  map.normalization = inst.normalization;
  return {std::move(ses), map};
}

}  // namespace sesq
