// Shared test oracle: dense statevector algebra done directly with Eigen,
// independent of the tensor-network contraction paths under test.
#pragma once

#include "sesq/mps.hpp"

#include <Eigen/Dense>

#include <random>
#include <vector>

namespace sesq::test {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline Vec dense_kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

inline Vec dense_product(const std::vector<std::array<cd, 2>>& amps) {
  Vec psi = Vec::Ones(1);
  for (const auto& a : amps) {
    Vec q(2);
    q << a[0], a[1];
    psi = dense_kron(psi, q);
  }
  return psi;
}

inline std::array<cd, 2> random_qubit(std::mt19937& rng) {
  std::normal_distribution<double> g;
  cd a(g(rng), g(rng)), b(g(rng), g(rng));
  double norm = std::sqrt(std::norm(a) + std::norm(b));
  return {a / norm, b / norm};
}

inline Vec random_dense_state(int n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  Vec psi(1 << n);
  for (Eigen::Index i = 0; i < psi.size(); ++i) psi[i] = cd(g(rng), g(rng));
  return psi / psi.norm();
}

// Reduced matrix of `sites` (ascending; site 0 is the most significant bit).
inline Mat dense_partial_trace(const Vec& psi, int n, const std::vector<int>& sites) {
  int k = static_cast<int>(sites.size());
  std::vector<int> kept_shift;
  for (int s : sites) kept_shift.push_back(n - 1 - s);
  std::vector<bool> kept(n, false);
  for (int s : sites) kept[s] = true;
  std::vector<int> traced_shift;
  for (int s = 0; s < n; ++s)
    if (!kept[s]) traced_shift.push_back(n - 1 - s);

  auto kept_index = [&](long long full) {
    long long idx = 0;
    for (int b = 0; b < k; ++b) idx = (idx << 1) | ((full >> kept_shift[b]) & 1);
    return idx;
  };

  // Psi as a (kept x traced) matrix; rho = Psi Psi^dagger.
  int t = n - k;
  Mat m = Mat::Zero(1LL << k, 1LL << t);
  for (long long full = 0; full < psi.size(); ++full) {
    long long tr = 0;
    for (int b = 0; b < t; ++b) tr = (tr << 1) | ((full >> traced_shift[b]) & 1);
    m(kept_index(full), tr) += psi[full];
  }
  return m * m.adjoint();
}

inline std::vector<double> dense_spectrum(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  std::vector<double> out;
  for (Eigen::Index i = es.eigenvalues().size() - 1; i >= 0; --i) {
    double v = es.eigenvalues()[i];
    if (v > 1e-12) out.push_back(v);
  }
  return out;
}

inline double dense_entropy(const Mat& rho) {
  double s = 0;
  for (double p : dense_spectrum(rho)) s -= p * std::log2(p);
  return s;
}

// Random bounded-rank state: a dense vector decomposed exactly.
inline MPSState random_bounded_state(int n, int chi_cap, std::mt19937& rng) {
  Vec psi = random_dense_state(n, rng);
  std::vector<cd> amps(psi.data(), psi.data() + psi.size());
  return mps_from_dense(amps, chi_cap);
}

// Sum of `rank` random product vectors: every cut rank is at most `rank`,
// and generically the state has no trivial cuts.
inline MPSState random_low_rank_state(int n, int rank, std::mt19937& rng) {
  Vec psi = Vec::Zero(1 << n);
  for (int r = 0; r < rank; ++r) {
    std::vector<std::array<cd, 2>> amps;
    for (int i = 0; i < n; ++i) amps.push_back(random_qubit(rng));
    psi += dense_product(amps);
  }
  psi /= psi.norm();
  std::vector<cd> flat(psi.data(), psi.data() + psi.size());
  return mps_from_dense(flat, rank);
}

}  // namespace sesq::test
