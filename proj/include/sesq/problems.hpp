#pragma once

#include "sesq/mps.hpp"
#include "sesq/rational.hpp"
#include "sesq/weights.hpp"

#include <optional>
#include <vector>

namespace sesq {

// Slack absorbed into floating-point window comparisons. Instances carrying
// exact per-qubit weights are compared in rational arithmetic instead.
inline constexpr double kVerifySlack = 1e-9;

struct SESInstance {
  MPSState state;
  WeightFunction weight;
  Rational target;   // B
  Rational epsilon;
  int precision_digits = 0;
  // Present when the state was built from exact per-qubit decimal data
  // (separable reductions); enables exact window decisions.
  std::optional<std::vector<Rational>> exact_site_weights;
};

struct SESSPInstance {
  MPSState state;
  WeightFunction weight;
  Rational epsilon;
  int precision_digits = 0;
  std::optional<std::vector<Rational>> exact_site_weights;
};

struct SubsetCertificate {
  std::vector<int> sites;  // sorted, possibly empty (weight 0 by convention)
};

struct SplitCertificate {
  std::vector<int> side_a;  // nonempty, proper; side_b is the complement
};

void validate(const SESInstance& instance);
void validate(const SESSPInstance& instance);

// True iff B - eps <= W(rho_cert) <= B + eps.
bool verify_ses(const SESInstance& instance, const SubsetCertificate& cert,
                int block_cap = kDefaultBlockCap);

// True iff |W(rho_A1) - W(rho_A2)| <= eps.
bool verify_sessp(const SESSPInstance& instance, const SplitCertificate& cert,
                  int block_cap = kDefaultBlockCap);

}  // namespace sesq
