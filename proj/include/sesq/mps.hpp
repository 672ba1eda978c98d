#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <span>
#include <vector>

namespace sesq {

using cd = std::complex<double>;

// Schmidt coefficients below this are treated as numerical noise and dropped.
inline constexpr double kSchmidtCutoff = 1e-12;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kCanonicalTol = 1e-10;
inline constexpr double kSpectrumTol = 1e-10;
// Maximum number of maximal contiguous blocks a subset may have inside one
// entangled factor of the chain; contraction cost grows like chi^(2*blocks).
inline constexpr int kDefaultBlockCap = 4;
// Hard cap on the size of an explicitly returned reduced spectrum.
inline constexpr int kMaxSpectrumSize = 1 << 16;

// Rank-3 site tensor, axes (left, physical, right), physical dimension 2.
struct GammaTensor {
  int left = 1;
  int right = 1;
  std::vector<cd> data;  // index (l*2 + s)*right + r

  GammaTensor() = default;
  GammaTensor(int l, int r)
      : left(l), right(r), data(static_cast<std::size_t>(l) * 2 * r) {}

  cd& at(int l, int s, int r) {
    return data[(static_cast<std::size_t>(l) * 2 + s) * right + r];
  }
  const cd& at(int l, int s, int r) const {
    return data[(static_cast<std::size_t>(l) * 2 + s) * right + r];
  }
};

// Vidal-form pure state of n qubits: Gamma tensors on sites, Schmidt
// coefficient vectors on the n-1 bonds. Immutable after construction.
struct MPSState {
  int n = 0;
  int chi_cap = 1;
  std::vector<GammaTensor> gammas;
  std::vector<std::vector<double>> lambdas;

  int bond_dim(int cut) const {
    if (cut < 0 || cut >= n - 1) return 1;
    return static_cast<int>(lambdas[cut].size());
  }
};

// Reduced state of a qubit subset: the nonzero spectrum of the partial
// trace plus the exact single-site reduced matrices.
struct DensityMatrix {
  std::vector<int> sites;             // sorted, strictly increasing
  std::vector<double> spectrum;       // nonzero eigenvalues, descending
  std::vector<Eigen::Matrix2cd> site_rdms;
  int rank = 0;
};

double binary_entropy(double p);
// Unique p in [0, 1/2] with H2(p) = s, |H2(p) - s| <= 1e-12.
double inverse_binary_entropy(double s);
double entropy_of_spectrum(std::span<const double> spectrum);

MPSState product_state(std::span<const std::array<cd, 2>> amplitudes);
// 2n-qubit chain of pair factors sqrt(1-p_i)|00> + sqrt(p_i)|11> with
// H2(p_i) = entropies[i].
MPSState entangled_pair_chain(std::span<const double> entropies);
// Exact Vidal decomposition of a dense statevector (length 2^n, site 0 is
// the most significant bit). Throws if any cut rank exceeds chi_cap.
MPSState mps_from_dense(std::span<const cd> amplitudes, int chi_cap);

// Checks all structural invariants; throws InvariantViolation.
void validate(const MPSState& state);

std::vector<cd> to_statevector(const MPSState& state);  // n <= 20
std::vector<int> cut_ranks(const MPSState& state);
int max_bipartite_rank(const MPSState& state);
// Cuts with bond dimension 1; the state factorizes exactly across these.
std::vector<int> trivial_cuts(const MPSState& state);
bool is_product(const MPSState& state);

Eigen::Matrix2cd single_site_rdm(const MPSState& state, int site);

// Nonzero spectra of the independent pure factors covering `sites`, one
// entry per factor segment the subset touches. Fully included factors
// contribute {1}. Throws BlockCapExceeded when the subset has more than
// block_cap blocks inside a single entangled factor.
std::vector<std::vector<double>> subset_factor_spectra(const MPSState& state,
                                                       const std::vector<int>& sites,
                                                       int block_cap = kDefaultBlockCap);

DensityMatrix reduced_density_matrix(const MPSState& state, std::vector<int> sites,
                                     int block_cap = kDefaultBlockCap);

}  // namespace sesq
