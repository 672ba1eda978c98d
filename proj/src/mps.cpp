#include "sesq/mps.hpp"

#include "sesq/errors.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace sesq {

namespace {

double xlog2x(double x) {
  if (x <= 0.0) return 0.0;
  return x * std::log2(x);
}

// Site matrix M_i[s] with the bond Schmidt vector absorbed on the right,
// so that the full amplitude is the 1x1 product M_0[s_0] ... M_{n-1}[s_{n-1}].
Eigen::MatrixXcd site_matrix(const MPSState& state, int site, int s) {
  const GammaTensor& g = state.gammas[site];
  Eigen::MatrixXcd m(g.left, g.right);
  for (int a = 0; a < g.left; ++a)
    for (int b = 0; b < g.right; ++b) {
      double lam = (site < state.n - 1) ? state.lambdas[site][b] : 1.0;
      m(a, b) = g.at(a, s, b) * lam;
    }
  return m;
}

}  // namespace

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) throw EntropyOutOfRange("probability outside [0,1]");
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double inverse_binary_entropy(double s) {
  if (s < 0.0 || s > 1.0) throw EntropyOutOfRange("entropy outside [0,1]");
  if (s == 0.0) return 0.0;
  if (s == 1.0) return 0.5;
  double lo = 0.0, hi = 0.5;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < s)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double entropy_of_spectrum(std::span<const double> spectrum) {
  double s = 0.0;
  for (double p : spectrum) s -= xlog2x(p);
  return s;
}

MPSState product_state(std::span<const std::array<cd, 2>> amplitudes) {
  if (amplitudes.empty()) throw EmptyState("product state needs at least one qubit");
  MPSState state;
  state.n = static_cast<int>(amplitudes.size());
  state.chi_cap = 1;
  for (const auto& amp : amplitudes) {
    double norm = std::norm(amp[0]) + std::norm(amp[1]);
    if (std::abs(norm - 1.0) > 1e-10)
      throw NonNormalizedInput("single-qubit amplitudes are not normalized");
    GammaTensor g(1, 1);
    g.at(0, 0, 0) = amp[0];
    g.at(0, 1, 0) = amp[1];
    state.gammas.push_back(std::move(g));
  }
  state.lambdas.assign(state.n - 1, {1.0});
  return state;
}

MPSState entangled_pair_chain(std::span<const double> entropies) {
  if (entropies.empty()) throw EmptyState("pair chain needs at least one pair");
  MPSState state;
  state.n = 2 * static_cast<int>(entropies.size());
  state.chi_cap = 1;
  for (std::size_t i = 0; i < entropies.size(); ++i) {
    double s = entropies[i];
    if (s < 0.0 || s > 1.0) throw EntropyOutOfRange("pair entropy outside [0,1]");
    double p = inverse_binary_entropy(s);
    if (p < kSchmidtCutoff) {
      // product pair |00>
      GammaTensor ga(1, 1), gb(1, 1);
      ga.at(0, 0, 0) = 1.0;
      gb.at(0, 0, 0) = 1.0;
      state.gammas.push_back(std::move(ga));
      state.gammas.push_back(std::move(gb));
      state.lambdas.push_back({1.0});  // intra-pair bond
    } else {
      GammaTensor ga(1, 2), gb(2, 1);
      ga.at(0, 0, 0) = 1.0;
      ga.at(0, 1, 1) = 1.0;
      gb.at(0, 0, 0) = 1.0;
      gb.at(1, 1, 0) = 1.0;
      state.gammas.push_back(std::move(ga));
      state.gammas.push_back(std::move(gb));
      state.lambdas.push_back({std::sqrt(1.0 - p), std::sqrt(p)});
      state.chi_cap = 2;
    }
    if (i + 1 < entropies.size()) state.lambdas.push_back({1.0});  // inter-pair bond
  }
  return state;
}

MPSState mps_from_dense(std::span<const cd> amplitudes, int chi_cap) {
  std::size_t dim = amplitudes.size();
  if (dim < 2) throw EmptyState("statevector must cover at least one qubit");
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim) throw ParseError("statevector length is not a power of two");

  MPSState state;
  state.n = n;
  state.chi_cap = chi_cap;

  // W holds the remaining wavefunction in the basis (left Schmidt, rest).
  Eigen::MatrixXcd w(1, dim);
  for (std::size_t i = 0; i < dim; ++i) w(0, i) = amplitudes[i];
  double nrm = w.norm();
  if (std::abs(nrm - 1.0) > 1e-9) throw NonNormalizedInput("statevector is not normalized");
  w /= nrm;

  std::vector<double> lambda_prev{1.0};
  for (int i = 0; i < n - 1; ++i) {
    int rows = static_cast<int>(w.rows()) * 2;
    int cols = static_cast<int>(w.cols()) / 2;
    Eigen::MatrixXcd m(rows, cols);
    for (int a = 0; a < w.rows(); ++a)
      for (int s = 0; s < 2; ++s)
        for (int c = 0; c < cols; ++c)
          m(a * 2 + s, c) = w(a, static_cast<Eigen::Index>(s) * cols + c);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    int r = 0;
    while (r < sv.size() && sv(r) > kSchmidtCutoff) ++r;
    if (r == 0) throw InvariantViolation("vanishing Schmidt spectrum");
    if (r > chi_cap)
      throw InvariantViolation("Schmidt rank exceeds declared chi_cap");

    GammaTensor g(static_cast<int>(w.rows()), r);
    for (int a = 0; a < w.rows(); ++a)
      for (int s = 0; s < 2; ++s)
        for (int b = 0; b < r; ++b)
          g.at(a, s, b) = svd.matrixU()(a * 2 + s, b) / lambda_prev[a];
    state.gammas.push_back(std::move(g));

    Eigen::VectorXd kept = sv.head(r);
    double knorm = kept.norm();
    kept /= knorm;
    std::vector<double> lam(kept.data(), kept.data() + r);
    state.lambdas.push_back(lam);
    lambda_prev = lam;

    w = (kept.asDiagonal() * svd.matrixV().leftCols(r).adjoint().eval()).eval();
  }
  // last site: w is chi x 2
  GammaTensor g(static_cast<int>(w.rows()), 1);
  for (int a = 0; a < w.rows(); ++a)
    for (int s = 0; s < 2; ++s) g.at(a, s, 0) = w(a, s) / lambda_prev[a];
  state.gammas.push_back(std::move(g));
  return state;
}

void validate(const MPSState& state) {
  if (state.n < 1) throw InvariantViolation("state has no qubits");
  if (static_cast<int>(state.gammas.size()) != state.n)
    throw InvariantViolation("gamma count does not match n");
  if (static_cast<int>(state.lambdas.size()) != state.n - 1)
    throw InvariantViolation("lambda count does not match n-1");
  if (state.gammas.front().left != 1 || state.gammas.back().right != 1)
    throw InvariantViolation("boundary bond dimensions must be 1");
  if (state.chi_cap < 1) throw InvariantViolation("chi_cap must be positive");

  for (int i = 0; i < state.n; ++i) {
    const GammaTensor& g = state.gammas[i];
    if (g.left < 1 || g.right < 1 ||
        g.data.size() != static_cast<std::size_t>(g.left) * 2 * g.right)
      throw InvariantViolation("malformed gamma tensor");
    if (i < state.n - 1 &&
        static_cast<int>(state.lambdas[i].size()) != g.right)
      throw InvariantViolation("bond dimension mismatch at cut " + std::to_string(i));
    if (i > 0 && state.gammas[i - 1].right != g.left)
      throw InvariantViolation("adjacent tensor dimensions do not match");
  }
  for (int i = 0; i < state.n - 1; ++i) {
    const auto& lam = state.lambdas[i];
    if (static_cast<int>(lam.size()) > state.chi_cap)
      throw InvariantViolation("bond dimension exceeds chi_cap");
    double sum2 = 0.0;
    for (std::size_t k = 0; k < lam.size(); ++k) {
      if (lam[k] <= 0.0) throw InvariantViolation("Schmidt coefficients must be positive");
      if (k > 0 && lam[k] > lam[k - 1] + 1e-15)
        throw InvariantViolation("Schmidt coefficients must be descending");
      sum2 += lam[k] * lam[k];
    }
    if (std::abs(sum2 - 1.0) > kNormTol)
      throw InvariantViolation("Schmidt spectrum does not sum to 1");
  }

  // Vidal canonical isometry conditions at every site.
  for (int i = 0; i < state.n; ++i) {
    const GammaTensor& g = state.gammas[i];
    const std::vector<double> left_lam =
        (i == 0) ? std::vector<double>{1.0} : state.lambdas[i - 1];
    const std::vector<double> right_lam =
        (i == state.n - 1) ? std::vector<double>{1.0} : state.lambdas[i];

    Eigen::MatrixXcd lcheck = Eigen::MatrixXcd::Zero(g.right, g.right);
    for (int s = 0; s < 2; ++s)
      for (int a = 0; a < g.left; ++a)
        for (int b = 0; b < g.right; ++b)
          for (int b2 = 0; b2 < g.right; ++b2)
            lcheck(b, b2) +=
                left_lam[a] * left_lam[a] * std::conj(g.at(a, s, b)) * g.at(a, s, b2);
    if ((lcheck - Eigen::MatrixXcd::Identity(g.right, g.right)).cwiseAbs().maxCoeff() >
        kCanonicalTol)
      throw InvariantViolation("left canonical condition violated at site " +
                               std::to_string(i));

    Eigen::MatrixXcd rcheck = Eigen::MatrixXcd::Zero(g.left, g.left);
    for (int s = 0; s < 2; ++s)
      for (int a = 0; a < g.left; ++a)
        for (int a2 = 0; a2 < g.left; ++a2)
          for (int b = 0; b < g.right; ++b)
            rcheck(a, a2) +=
                right_lam[b] * right_lam[b] * g.at(a, s, b) * std::conj(g.at(a2, s, b));
    if ((rcheck - Eigen::MatrixXcd::Identity(g.left, g.left)).cwiseAbs().maxCoeff() >
        kCanonicalTol)
      throw InvariantViolation("right canonical condition violated at site " +
                               std::to_string(i));
  }

  if (state.n <= 20) {
    double norm2 = 0.0;
    for (const cd& amp : to_statevector(state)) norm2 += std::norm(amp);
    if (std::abs(norm2 - 1.0) > 1e-9)
      throw InvariantViolation("global norm deviates from 1");
  }
}

std::vector<cd> to_statevector(const MPSState& state) {
  if (state.n > 20) throw Error("statevector contraction limited to 20 qubits");
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Ones(1, 1);
  for (int i = 0; i < state.n; ++i) {
    int right = state.gammas[i].right;
    Eigen::MatrixXcd next(r.rows() * 2, right);
    for (int s = 0; s < 2; ++s) {
      Eigen::MatrixXcd block = r * site_matrix(state, i, s);
      for (Eigen::Index x = 0; x < r.rows(); ++x) next.row(x * 2 + s) = block.row(x);
    }
    r = std::move(next);
  }
  std::vector<cd> out(r.rows());
  for (Eigen::Index x = 0; x < r.rows(); ++x) out[x] = r(x, 0);
  return out;
}

std::vector<int> cut_ranks(const MPSState& state) {
  std::vector<int> ranks;
  for (const auto& lam : state.lambdas) ranks.push_back(static_cast<int>(lam.size()));
  return ranks;
}

int max_bipartite_rank(const MPSState& state) {
  int chi = 1;
  for (const auto& lam : state.lambdas) chi = std::max(chi, static_cast<int>(lam.size()));
  return chi;
}

std::vector<int> trivial_cuts(const MPSState& state) {
  std::vector<int> cuts;
  for (int i = 0; i < state.n - 1; ++i)
    if (state.lambdas[i].size() == 1) cuts.push_back(i);
  return cuts;
}

bool is_product(const MPSState& state) {
  return max_bipartite_rank(state) == 1;
}

Eigen::Matrix2cd single_site_rdm(const MPSState& state, int site) {
  if (site < 0 || site >= state.n) throw InvalidSubset("site index out of range");
  const GammaTensor& g = state.gammas[site];
  const std::vector<double> left_lam =
      (site == 0) ? std::vector<double>{1.0} : state.lambdas[site - 1];
  const std::vector<double> right_lam =
      (site == state.n - 1) ? std::vector<double>{1.0} : state.lambdas[site];
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int s = 0; s < 2; ++s)
    for (int s2 = 0; s2 < 2; ++s2)
      for (int a = 0; a < g.left; ++a)
        for (int b = 0; b < g.right; ++b)
          rho(s, s2) += left_lam[a] * left_lam[a] * right_lam[b] * right_lam[b] *
                        g.at(a, s, b) * std::conj(g.at(a, s2, b));
  return rho;
}

namespace {

// Spectrum of the reduced state of the marked sites inside one pure factor
// [a, b]. Sweeps the segment once, keeping orthonormalized bases for the
// kept and traced sides; cost is polynomial in the bond dimension for a
// bounded number of blocks.
std::vector<double> segment_subset_spectrum(const MPSState& state, int a, int b,
                                            const std::vector<bool>& member) {
  Eigen::Index dim_i = 1, dim_j = 1, bond = 1;
  std::vector<cd> theta{1.0};  // index (i*dim_j + j)*bond + a

  for (int site = a; site <= b; ++site) {
    bool keep = member[site - a];
    int right = state.gammas[site].right;
    Eigen::MatrixXcd m0 = site_matrix(state, site, 0);
    Eigen::MatrixXcd m1 = site_matrix(state, site, 1);

    Eigen::Index grow = keep ? dim_i : dim_j;
    Eigen::Index other = keep ? dim_j : dim_i;
    Eigen::MatrixXcd x(grow * 2, other * right);
    x.setZero();
    for (Eigen::Index i = 0; i < dim_i; ++i)
      for (Eigen::Index j = 0; j < dim_j; ++j)
        for (Eigen::Index c = 0; c < bond; ++c) {
          cd t = theta[(i * dim_j + j) * bond + c];
          if (t == cd{}) continue;
          for (int s = 0; s < 2; ++s) {
            const Eigen::MatrixXcd& m = s == 0 ? m0 : m1;
            Eigen::Index row = (keep ? i : j) * 2 + s;
            for (int b2 = 0; b2 < right; ++b2) {
              Eigen::Index col = (keep ? j : i) * right + b2;
              x(row, col) += t * m(c, b2);
            }
          }
        }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    double tol = sv.size() > 0 ? sv(0) * 1e-13 : 0.0;
    Eigen::Index r = 0;
    while (r < sv.size() && sv(r) > tol && sv(r) > 0.0) ++r;
    if (r == 0) r = 1;
    Eigen::MatrixXcd compressed =
        sv.head(r).asDiagonal() * svd.matrixV().leftCols(r).adjoint();  // r x other*right

    Eigen::Index new_dim_i = keep ? r : dim_i;
    Eigen::Index new_dim_j = keep ? dim_j : r;
    std::vector<cd> next(static_cast<std::size_t>(new_dim_i) * new_dim_j * right);
    for (Eigen::Index k = 0; k < r; ++k)
      for (Eigen::Index o = 0; o < other; ++o)
        for (int b2 = 0; b2 < right; ++b2) {
          Eigen::Index i2 = keep ? k : o;
          Eigen::Index j2 = keep ? o : k;
          next[(i2 * new_dim_j + j2) * right + b2] = compressed(k, o * right + b2);
        }
    theta = std::move(next);
    dim_i = new_dim_i;
    dim_j = new_dim_j;
    bond = right;
  }

  // right edge of the segment has bond dimension 1
  Eigen::MatrixXcd psi(dim_i, dim_j);
  for (Eigen::Index i = 0; i < dim_i; ++i)
    for (Eigen::Index j = 0; j < dim_j; ++j) psi(i, j) = theta[(i * dim_j + j)];

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(psi);
  std::vector<double> spectrum;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
    double p = svd.singularValues()(k) * svd.singularValues()(k);
    if (p > 1e-13) spectrum.push_back(p);
  }
  if (spectrum.empty()) spectrum.push_back(1.0);
  return spectrum;
}

}  // namespace

std::vector<std::vector<double>> subset_factor_spectra(const MPSState& state,
                                                       const std::vector<int>& sites,
                                                       int block_cap) {
  if (sites.empty()) throw InvalidSubset("subset is empty");
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (sites[k] < 0 || sites[k] >= state.n) throw InvalidSubset("site index out of range");
    if (k > 0 && sites[k] <= sites[k - 1])
      throw InvalidSubset("sites must be strictly increasing");
  }

  std::vector<bool> in_subset(state.n, false);
  for (int s : sites) in_subset[s] = true;

  // segment boundaries: chain ends plus trivial cuts
  std::vector<int> starts{0};
  for (int c : trivial_cuts(state)) starts.push_back(c + 1);

  std::vector<std::vector<double>> spectra;
  for (std::size_t seg = 0; seg < starts.size(); ++seg) {
    int a = starts[seg];
    int b = (seg + 1 < starts.size()) ? starts[seg + 1] - 1 : state.n - 1;
    int count = 0, blocks = 0;
    bool prev = false;
    for (int i = a; i <= b; ++i) {
      if (in_subset[i]) {
        ++count;
        if (!prev) ++blocks;
      }
      prev = in_subset[i];
    }
    if (count == 0) continue;
    if (count == b - a + 1) {
      spectra.push_back({1.0});  // the whole pure factor is kept
      continue;
    }
    if (blocks > block_cap)
      throw BlockCapExceeded("subset has " + std::to_string(blocks) +
                             " blocks in one entangled factor (cap " +
                             std::to_string(block_cap) + ")");
    std::vector<bool> member(b - a + 1);
    for (int i = a; i <= b; ++i) member[i - a] = in_subset[i];
    spectra.push_back(segment_subset_spectrum(state, a, b, member));
  }
  return spectra;
}

DensityMatrix reduced_density_matrix(const MPSState& state, std::vector<int> sites,
                                     int block_cap) {
  auto spectra = subset_factor_spectra(state, sites, block_cap);

  std::size_t total = 1;
  for (const auto& sp : spectra) {
    total *= sp.size();
    if (total > kMaxSpectrumSize)
      throw BlockCapExceeded("reduced spectrum size exceeds policy cap");
  }

  std::vector<double> spectrum{1.0};
  for (const auto& sp : spectra) {
    std::vector<double> next;
    next.reserve(spectrum.size() * sp.size());
    for (double p : spectrum)
      for (double q : sp) next.push_back(p * q);
    spectrum = std::move(next);
  }
  std::erase_if(spectrum, [](double p) { return p < 1e-14; });
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());

  DensityMatrix rho;
  rho.sites = std::move(sites);
  rho.spectrum = std::move(spectrum);
  rho.rank = static_cast<int>(rho.spectrum.size());
  rho.site_rdms.reserve(rho.sites.size());
  for (int s : rho.sites) rho.site_rdms.push_back(single_site_rdm(state, s));
  return rho;
}

}  // namespace sesq
