#pragma once

#include "sesq/mps.hpp"

#include <string>

namespace sesq {

enum class Axis { X, Y, Z };

// Additive, range-normalized functional on density matrices. Closed variant:
// per-axis magnetization or von Neumann entropy.
struct WeightFunction {
  enum class Kind { Magnetization, Entropy };
  Kind kind = Kind::Magnetization;
  Axis axis = Axis::Z;  // meaningful for Magnetization only

  static WeightFunction magnetization(Axis a) { return {Kind::Magnetization, a}; }
  static WeightFunction entropy() { return {Kind::Entropy, Axis::Z}; }
};

std::string to_string(const WeightFunction& w);

// Single-qubit projector (1 - sigma^axis)/2.
Eigen::Matrix2cd down_projector(Axis axis);

// Magnetization reads only site_rdms; entropy reads only the spectrum.
double evaluate(const WeightFunction& w, const DensityMatrix& rho);

// W of the reduced state of `sites` without materializing its full spectrum;
// empty subsets evaluate to 0 by the additive convention.
double subset_weight(const MPSState& state, const WeightFunction& w,
                     const std::vector<int>& sites, int block_cap = kDefaultBlockCap);

struct AxiomReport {
  bool passed = false;
  int trials = 0;
  double max_additivity_dev = 0.0;     // |W(r1 x r2) - W(r1) - W(r2)|
  double worst_range_violation = 0.0;  // distance outside [0,1] per qubit
};

// Randomized check of additivity on tensor-product splits and of the [0,1]
// range on single-qubit pure states.
AxiomReport check_weight_axioms(const WeightFunction& w, int trials, unsigned seed);

}  // namespace sesq
