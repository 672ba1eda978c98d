#include "sesq/errors.hpp"
#include "sesq/solvers.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace sesq;
using namespace sesq::test;

namespace {

const std::array<cd, 2> kZero = {cd(1, 0), cd(0, 0)};
const std::array<cd, 2> kOne = {cd(0, 0), cd(1, 0)};

MPSState basis_state(const std::vector<int>& bits) {
  std::vector<std::array<cd, 2>> amps;
  for (int b : bits) amps.push_back(b ? kOne : kZero);
  return product_state(amps);
}

SESInstance weighted_instance(const std::vector<Rational>& weights, Rational b,
                              Rational eps) {
  SESInstance inst;
  std::vector<std::array<cd, 2>> amps;
  for (const auto& w : weights) {
    double p = to_double(w);
    amps.push_back({cd(std::sqrt(1 - p), 0), cd(std::sqrt(p), 0)});
  }
  inst.state = product_state(amps);
  inst.weight = WeightFunction::magnetization(Axis::Z);
  inst.exact_site_weights = weights;
  inst.target = b;
  inst.epsilon = eps;
  return inst;
}

}  // namespace

TEST_CASE("mask ordering helpers") {
  CHECK(mask_to_sites(0b101, 4) == std::vector<int>{0, 2});
  // {0,2} precedes {0,3} precedes {1}
  CHECK(mask_lex_less(0b0101, 0b1001));
  CHECK(mask_lex_less(0b1001, 0b0010));
  CHECK_FALSE(mask_lex_less(0b0010, 0b1001));
}

TEST_CASE("brute force on |1111>, B=3, eps=1/4") {
  SESInstance inst;
  inst.state = basis_state({1, 1, 1, 1});
  inst.weight = WeightFunction::magnetization(Axis::Z);
  inst.target = 3;
  inst.epsilon = Rational(1, 4);
  auto r = solve_ses_bruteforce(inst);
  REQUIRE(r.yes);
  REQUIRE(r.subset_cert);
  CHECK(r.subset_cert->sites == std::vector<int>{0, 1, 2});
}

TEST_CASE("brute force with fractional exact weights") {
  auto inst =
      weighted_instance({Rational(1, 5), Rational(3, 10), Rational(1, 2)},
                        Rational(4, 5), Rational(1, 100));
  auto yes = solve_ses_bruteforce(inst);
  REQUIRE(yes.yes);
  CHECK(yes.subset_cert->sites == std::vector<int>{1, 2});

  inst.target = Rational(19, 20);  // 0.95
  inst.epsilon = Rational(1, 50);  // 0.02
  auto no = solve_ses_bruteforce(inst);
  CHECK_FALSE(no.yes);
}

TEST_CASE("brute force, reference, and meet-in-the-middle agree") {
  std::mt19937 rng(51);
  std::uniform_int_distribution<int> num(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + trial % 6;
    std::vector<Rational> weights;
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      weights.emplace_back(num(rng), 10 + num(rng));
      total += weights.back();
    }
    for (auto& w : weights) w /= total;
    auto inst = weighted_instance(weights, Rational(num(rng), 10), Rational(1, 40));

    auto ref = solve_ses_reference(inst);
    auto brute = solve_ses_bruteforce(inst);
    auto mim = solve_ses_separable(inst);
    CAPTURE(trial);
    CHECK(ref.yes == brute.yes);
    CHECK(ref.yes == mim.yes);
    if (brute.yes) {
      CHECK(brute.subset_cert.has_value());
      CHECK(verify_ses(inst, *brute.subset_cert));
      CHECK(verify_ses(inst, *mim.subset_cert));
    }
  }
}

TEST_CASE("brute force on entropy instances matches the reference") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<double> entropies = {u(rng), u(rng), u(rng)};
    SESInstance inst;
    inst.state = entangled_pair_chain(entropies);
    inst.weight = WeightFunction::entropy();
    inst.target = Rational(trial % 3 + 1, 2);
    inst.epsilon = Rational(1, 20);
    auto ref = solve_ses_reference(inst);
    auto brute = solve_ses_bruteforce(inst);
    CAPTURE(trial);
    CHECK(ref.yes == brute.yes);
    if (brute.yes) CHECK(verify_ses(inst, *brute.subset_cert));
  }
}

TEST_CASE("parallel and serial scans return the identical witness") {
  auto inst = weighted_instance(
      {Rational(1, 10), Rational(1, 10), Rational(2, 10), Rational(2, 10),
       Rational(4, 10)},
      Rational(3, 10), Rational(1, 100));
  SolveOptions serial, parallel;
  parallel.threads = 4;
  auto a = solve_ses_bruteforce(inst, serial);
  auto b = solve_ses_bruteforce(inst, parallel);
  REQUIRE(a.yes);
  REQUIRE(b.yes);
  CHECK(a.subset_cert->sites == b.subset_cert->sites);
}

TEST_CASE("sessp brute force finds balanced splits") {
  SESSPInstance inst;
  inst.state = basis_state({1, 1, 0, 0});
  inst.weight = WeightFunction::magnetization(Axis::Z);
  inst.epsilon = Rational(1, 10);
  auto r = solve_sessp_bruteforce(inst);
  REQUIRE(r.yes);
  REQUIRE(r.split_cert);
  CHECK(verify_sessp(inst, *r.split_cert));
  CHECK(r.split_cert->side_a.front() == 0);  // canonical side contains qubit 0

  SESSPInstance skew;
  skew.state = basis_state({1, 0, 0});
  skew.weight = WeightFunction::magnetization(Axis::Z);
  skew.epsilon = Rational(1, 10);
  CHECK_FALSE(solve_sessp_bruteforce(skew).yes);
}

TEST_CASE("sessp brute force matches the reference on random instances") {
  std::mt19937 rng(57);
  std::uniform_int_distribution<int> num(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + trial % 4;
    std::vector<Rational> weights;
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      weights.emplace_back(num(rng), 10);
      total += weights.back();
    }
    SESSPInstance inst;
    std::vector<std::array<cd, 2>> amps;
    std::vector<Rational> tilde;
    for (const auto& w : weights) {
      tilde.push_back(w / total);
      double p = to_double(tilde.back());
      amps.push_back({cd(std::sqrt(1 - p), 0), cd(std::sqrt(p), 0)});
    }
    inst.state = product_state(amps);
    inst.weight = WeightFunction::magnetization(Axis::Z);
    inst.exact_site_weights = tilde;
    inst.epsilon = Rational(1, 30);
    auto ref = solve_sessp_reference(inst);
    auto brute = solve_sessp_bruteforce(inst);
    CAPTURE(trial);
    CHECK(ref.yes == brute.yes);
  }
}

TEST_CASE("subset-sum dynamic program") {
  auto hit = solve_subset_sum_dp({3, 5, 7}, 12);
  REQUIRE(hit);
  long long sum = 0;
  for (int i : *hit) sum += std::vector<long long>{3, 5, 7}[i];
  CHECK(sum == 12);

  CHECK_FALSE(solve_subset_sum_dp({2, 4, 6}, 5));
  auto zero = solve_subset_sum_dp({2, 4}, 0);
  REQUIRE(zero);
  CHECK(zero->empty());
}

TEST_CASE("partition dynamic program") {
  auto hit = solve_partition_dp({1, 5, 6});
  REQUIRE(hit);
  long long side = 0;
  for (int i : *hit) side += std::vector<long long>{1, 5, 6}[i];
  CHECK(side == 6);
  CHECK_FALSE(solve_partition_dp({1, 1, 3}));
  CHECK_FALSE(solve_partition_dp({7}));
}

TEST_CASE("brute force respects the instance size limit") {
  std::vector<Rational> weights(30, Rational(1, 30));
  auto inst = weighted_instance(weights, Rational(1, 2), Rational(1, 100));
  SolveOptions opts;
  opts.limit_n = 22;
  CHECK_THROWS_AS(solve_ses_bruteforce(inst, opts), InstanceTooLarge);
}

TEST_CASE("dp oracle rejects oversized tables") {
  CHECK_THROWS_AS(solve_subset_sum_dp({1000000000}, 999999999), TableTooLarge);
}
