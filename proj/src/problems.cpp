#include "sesq/problems.hpp"

#include "sesq/errors.hpp"

#include <algorithm>

namespace sesq {

namespace {

void check_sites(const std::vector<int>& sites, int n, bool allow_empty) {
  if (sites.empty()) {
    if (!allow_empty) throw InvalidSubset("certificate is empty");
    return;
  }
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (sites[k] < 0 || sites[k] >= n) throw InvalidSubset("site index out of range");
    if (k > 0 && sites[k] <= sites[k - 1])
      throw InvalidSubset("sites must be strictly increasing");
  }
}

void check_instance_common(const MPSState& state, const Rational& epsilon,
                           int precision_digits) {
  if (state.n < 1) throw InvariantViolation("instance state has no qubits");
  if (epsilon < 0) throw InvariantViolation("epsilon must be nonnegative");
  if (precision_digits < 0) throw InvariantViolation("negative precision");
}

}  // namespace

void validate(const SESInstance& instance) {
  check_instance_common(instance.state, instance.epsilon, instance.precision_digits);
  if (instance.target < 0) throw InvariantViolation("B must be nonnegative");
  if (!(instance.target > instance.epsilon))
    throw InvariantViolation("instances require B > epsilon");
  if (instance.exact_site_weights &&
      static_cast<int>(instance.exact_site_weights->size()) != instance.state.n)
    throw InvariantViolation("site weight annotation length mismatch");
}

void validate(const SESSPInstance& instance) {
  check_instance_common(instance.state, instance.epsilon, instance.precision_digits);
  if (instance.exact_site_weights &&
      static_cast<int>(instance.exact_site_weights->size()) != instance.state.n)
    throw InvariantViolation("site weight annotation length mismatch");
}

bool verify_ses(const SESInstance& instance, const SubsetCertificate& cert,
                int block_cap) {
  check_sites(cert.sites, instance.state.n, /*allow_empty=*/true);

  if (instance.exact_site_weights &&
      instance.weight.kind == WeightFunction::Kind::Magnetization) {
    Rational sum = 0;
    for (int s : cert.sites) sum += (*instance.exact_site_weights)[s];
    return sum >= instance.target - instance.epsilon &&
           sum <= instance.target + instance.epsilon;
  }

  double w = subset_weight(instance.state, instance.weight, cert.sites, block_cap);
  double b = to_double(instance.target);
  double eps = to_double(instance.epsilon);
  return w >= b - eps - kVerifySlack && w <= b + eps + kVerifySlack;
}

bool verify_sessp(const SESSPInstance& instance, const SplitCertificate& cert,
                  int block_cap) {
  check_sites(cert.side_a, instance.state.n, /*allow_empty=*/false);
  if (static_cast<int>(cert.side_a.size()) == instance.state.n)
    throw InvalidSubset("split must leave both sides nonempty");

  std::vector<int> side_b;
  {
    std::vector<bool> in_a(instance.state.n, false);
    for (int s : cert.side_a) in_a[s] = true;
    for (int i = 0; i < instance.state.n; ++i)
      if (!in_a[i]) side_b.push_back(i);
  }

  if (instance.exact_site_weights &&
      instance.weight.kind == WeightFunction::Kind::Magnetization) {
    Rational wa = 0, wb = 0;
    for (int s : cert.side_a) wa += (*instance.exact_site_weights)[s];
    for (int s : side_b) wb += (*instance.exact_site_weights)[s];
    Rational diff = wa >= wb ? wa - wb : wb - wa;
    return diff <= instance.epsilon;
  }

  double wa = subset_weight(instance.state, instance.weight, cert.side_a, block_cap);
  double wb = subset_weight(instance.state, instance.weight, side_b, block_cap);
  return std::abs(wa - wb) <= to_double(instance.epsilon) + kVerifySlack;
}

}  // namespace sesq
