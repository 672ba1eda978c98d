#include "sesq/weights.hpp"

#include "sesq/errors.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

namespace sesq {

std::string to_string(const WeightFunction& w) {
  if (w.kind == WeightFunction::Kind::Entropy) return "entropy";
  switch (w.axis) {
    case Axis::X: return "magnetization(x)";
    case Axis::Y: return "magnetization(y)";
    case Axis::Z: return "magnetization(z)";
  }
  return "magnetization";
}

Eigen::Matrix2cd down_projector(Axis axis) {
  Eigen::Matrix2cd sigma;
  switch (axis) {
    case Axis::X: sigma << 0, 1, 1, 0; break;
    case Axis::Y: sigma << 0, cd(0, -1), cd(0, 1), 0; break;
    case Axis::Z: sigma << 1, 0, 0, -1; break;
  }
  return (Eigen::Matrix2cd::Identity() - sigma) / 2.0;
}

double evaluate(const WeightFunction& w, const DensityMatrix& rho) {
  if (w.kind == WeightFunction::Kind::Entropy)
    return entropy_of_spectrum(rho.spectrum);
  Eigen::Matrix2cd p = down_projector(w.axis);
  double total = 0.0;
  for (const auto& site_rdm : rho.site_rdms)
    total += (site_rdm * p).trace().real();
  return total;
}

double subset_weight(const MPSState& state, const WeightFunction& w,
                     const std::vector<int>& sites, int block_cap) {
  if (sites.empty()) return 0.0;
  if (w.kind == WeightFunction::Kind::Magnetization) {
    Eigen::Matrix2cd p = down_projector(w.axis);
    double total = 0.0;
    for (int s : sites) total += (single_site_rdm(state, s) * p).trace().real();
    return total;
  }
  double total = 0.0;
  for (const auto& spectrum : subset_factor_spectra(state, sites, block_cap))
    total += entropy_of_spectrum(spectrum);
  return total;
}

namespace {

DensityMatrix single_qubit_density(const Eigen::Matrix2cd& rdm) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rdm);
  DensityMatrix rho;
  rho.sites = {0};
  for (int k = 1; k >= 0; --k)
    if (es.eigenvalues()(k) > 1e-14) rho.spectrum.push_back(es.eigenvalues()(k));
  rho.rank = static_cast<int>(rho.spectrum.size());
  rho.site_rdms = {rdm};
  return rho;
}

std::vector<int> random_subset(std::mt19937& rng, int lo, int hi) {
  // nonempty subset of [lo, hi)
  std::vector<int> out;
  while (out.empty()) {
    out.clear();
    for (int i = lo; i < hi; ++i)
      if (rng() & 1u) out.push_back(i);
  }
  return out;
}

}  // namespace

AxiomReport check_weight_axioms(const WeightFunction& w, int trials, unsigned seed) {
  if (trials < 1) throw Error("trials must be >= 1");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  AxiomReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    // Additivity across a tensor-product split. Pair-chain states give
    // genuinely mixed reduced states on both sides.
    int left_pairs = 1 + static_cast<int>(rng() % 3);
    int right_pairs = 1 + static_cast<int>(rng() % 3);
    std::vector<double> entropies;
    for (int i = 0; i < left_pairs + right_pairs; ++i) entropies.push_back(uni(rng));
    MPSState state = entangled_pair_chain(entropies);

    std::vector<int> a1 = random_subset(rng, 0, 2 * left_pairs);
    std::vector<int> a2 = random_subset(rng, 2 * left_pairs, 2 * (left_pairs + right_pairs));
    std::vector<int> both = a1;
    both.insert(both.end(), a2.begin(), a2.end());

    double dev = std::abs(subset_weight(state, w, both) -
                          subset_weight(state, w, a1) - subset_weight(state, w, a2));
    report.max_additivity_dev = std::max(report.max_additivity_dev, dev);

    // Range axiom on a random single-qubit pure state.
    double theta = std::acos(std::clamp(2.0 * uni(rng) - 1.0, -1.0, 1.0)) / 2.0;
    double phi = 2.0 * M_PI * uni(rng);
    Eigen::Vector2cd a(std::cos(theta), std::polar(std::sin(theta), phi));
    Eigen::Matrix2cd rdm = a * a.adjoint();
    double value = evaluate(w, single_qubit_density(rdm));
    double violation = std::max(0.0 - value, value - 1.0);
    report.worst_range_violation = std::max(report.worst_range_violation, violation);
  }
  report.passed =
      report.max_additivity_dev <= 1e-9 && report.worst_range_violation <= 1e-12;
  return report;
}

}  // namespace sesq
