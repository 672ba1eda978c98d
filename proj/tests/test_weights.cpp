#include "sesq/weights.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sesq;
using namespace sesq::test;

namespace {
const std::array<cd, 2> kZero = {cd(1, 0), cd(0, 0)};
const std::array<cd, 2> kOne = {cd(0, 0), cd(1, 0)};
const std::array<cd, 2> kPlus = {cd(1 / std::sqrt(2.0), 0), cd(1 / std::sqrt(2.0), 0)};
}  // namespace

TEST_CASE("magnetization(Z) of computational basis qubits") {
  MPSState s = product_state(std::vector<std::array<cd, 2>>{kOne, kZero});
  auto w = WeightFunction::magnetization(Axis::Z);
  CHECK(subset_weight(s, w, {0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(subset_weight(s, w, {1}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(subset_weight(s, w, {0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(subset_weight(s, w, {}) == doctest::Approx(0.0));
}

TEST_CASE("magnetization(X) of |+> is zero") {
  MPSState s = product_state(std::vector<std::array<cd, 2>>{kPlus});
  CHECK(subset_weight(s, WeightFunction::magnetization(Axis::X), {0}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(subset_weight(s, WeightFunction::magnetization(Axis::Z), {0}) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("weighted qubit sqrt(1-s)|0> + sqrt(s)|1> carries weight s") {
  double sval = 0.37;
  std::vector<std::array<cd, 2>> amps = {
      {cd(std::sqrt(1 - sval), 0), cd(std::sqrt(sval), 0)}};
  MPSState s = product_state(amps);
  CHECK(subset_weight(s, WeightFunction::magnetization(Axis::Z), {0}) ==
        doctest::Approx(sval).epsilon(1e-12));
}

TEST_CASE("entropy of a uniform two-level spectrum is 1") {
  std::vector<double> spec = {0.5, 0.5};
  CHECK(entropy_of_spectrum(spec) == doctest::Approx(1.0).epsilon(1e-12));
  MPSState bell = entangled_pair_chain(std::vector<double>{1.0});
  CHECK(subset_weight(bell, WeightFunction::entropy(), {0}) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("entropy weight is additive over independent pairs") {
  MPSState chain = entangled_pair_chain(std::vector<double>{0.25, 0.6, 0.9});
  auto w = WeightFunction::entropy();
  // one qubit from each pair: entropies add
  CHECK(subset_weight(chain, w, {0, 2, 4}) ==
        doctest::Approx(0.25 + 0.6 + 0.9).epsilon(1e-9));
  // a whole pair is pure: contributes 0
  CHECK(subset_weight(chain, w, {0, 1, 2}) == doctest::Approx(0.6).epsilon(1e-9));
}

TEST_CASE("evaluate agrees with the dense oracle on random low-rank states") {
  std::mt19937 rng(31);
  MPSState s = random_low_rank_state(6, 3, rng);
  auto v = to_statevector(s);
  Vec psi(1 << 6);
  for (int i = 0; i < 1 << 6; ++i) psi[i] = v[i];

  for (const auto& sites : std::vector<std::vector<int>>{{0, 2}, {1, 3, 5}, {4}}) {
    Mat rho = dense_partial_trace(psi, 6, sites);
    CHECK(subset_weight(s, WeightFunction::entropy(), sites) ==
          doctest::Approx(dense_entropy(rho)).epsilon(1e-8));
    double mz = 0;
    for (int q : sites) {
      Mat r1 = dense_partial_trace(psi, 6, {q});
      mz += (r1 * down_projector(Axis::Z)).trace().real();
    }
    CHECK(subset_weight(s, WeightFunction::magnetization(Axis::Z), sites) ==
          doctest::Approx(mz).epsilon(1e-8));
  }
}

TEST_CASE("axiom check passes for the closed weight family") {
  for (auto w : {WeightFunction::magnetization(Axis::X),
                 WeightFunction::magnetization(Axis::Y),
                 WeightFunction::magnetization(Axis::Z), WeightFunction::entropy()}) {
    auto report = check_weight_axioms(w, 50, 42);
    CAPTURE(to_string(w));
    CHECK(report.passed);
    CHECK(report.trials == 50);
    CHECK(report.max_additivity_dev <= 1e-9);
    CHECK(report.worst_range_violation <= 1e-12);
  }
}
