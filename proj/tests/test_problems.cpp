#include "sesq/errors.hpp"
#include "sesq/problems.hpp"
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

}  // namespace

TEST_CASE("ses verifier on |1111>, magnetization(Z)") {
  SESInstance inst;
  inst.state = basis_state({1, 1, 1, 1});
  inst.weight = WeightFunction::magnetization(Axis::Z);
  inst.target = 2;
  inst.epsilon = Rational(1, 2);
  validate(inst);

  CHECK(verify_ses(inst, SubsetCertificate{{0, 1}}));
  CHECK_FALSE(verify_ses(inst, SubsetCertificate{{0}}));
  CHECK_FALSE(verify_ses(inst, SubsetCertificate{{0, 1, 2, 3}}));
  CHECK_FALSE(verify_ses(inst, SubsetCertificate{{}}));
}

TEST_CASE("ses verifier window is inclusive") {
  SESInstance inst;
  inst.state = basis_state({1, 1, 1, 1});
  inst.weight = WeightFunction::magnetization(Axis::Z);
  inst.target = 2;
  inst.epsilon = 1;
  // weight 3 sits exactly on B + epsilon
  CHECK(verify_ses(inst, SubsetCertificate{{0, 1, 2}}));
  CHECK(verify_ses(inst, SubsetCertificate{{0}}));
  CHECK_FALSE(verify_ses(inst, SubsetCertificate{{0, 1, 2, 3}}));
}

TEST_CASE("widening epsilon only adds accepting certificates") {
  std::mt19937 rng(41);
  MPSState s = random_low_rank_state(5, 2, rng);
  SESInstance tight, loose;
  tight.state = loose.state = s;
  tight.weight = loose.weight = WeightFunction::entropy();
  tight.target = loose.target = Rational(1, 2);
  tight.epsilon = Rational(1, 10);
  loose.epsilon = Rational(3, 10);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    std::vector<int> sites;
    for (int i = 0; i < 5; ++i)
      if (mask >> i & 1) sites.push_back(i);
    if (verify_ses(tight, SubsetCertificate{sites}))
      CHECK(verify_ses(loose, SubsetCertificate{sites}));
  }
}

TEST_CASE("sessp verifier on |1100>") {
  SESSPInstance inst;
  inst.state = basis_state({1, 1, 0, 0});
  inst.weight = WeightFunction::magnetization(Axis::Z);
  inst.epsilon = Rational(1, 10);

  CHECK(verify_sessp(inst, SplitCertificate{{0, 2}}));  // weights 1 vs 1
  CHECK(verify_sessp(inst, SplitCertificate{{1, 3}}));
  CHECK_FALSE(verify_sessp(inst, SplitCertificate{{0, 1}}));  // 2 vs 0
}

TEST_CASE("sessp verifier single-site split of |1100>") {
  SESSPInstance inst;
  inst.state = basis_state({1, 1, 0, 0});
  inst.weight = WeightFunction::magnetization(Axis::Z);
  inst.epsilon = Rational(1, 10);
  // side {0} weighs 1, complement {1,2,3} weighs 1
  CHECK(verify_sessp(inst, SplitCertificate{{0}}));
  // side {2} weighs 0, complement weighs 2
  CHECK_FALSE(verify_sessp(inst, SplitCertificate{{2}}));
}

TEST_CASE("sessp rejects empty or full sides") {
  SESSPInstance inst;
  inst.state = basis_state({1, 0});
  inst.weight = WeightFunction::magnetization(Axis::Z);
  inst.epsilon = Rational(1, 10);
  CHECK_THROWS_AS(verify_sessp(inst, SplitCertificate{{}}), InvalidSubset);
  CHECK_THROWS_AS(verify_sessp(inst, SplitCertificate{{0, 1}}), InvalidSubset);
}

TEST_CASE("entropy splits of a pure state always balance") {
  // both sides of a bipartition of a pure state have equal entropy
  std::mt19937 rng(43);
  MPSState s = random_low_rank_state(6, 4, rng);
  SESSPInstance inst;
  inst.state = s;
  inst.weight = WeightFunction::entropy();
  inst.epsilon = Rational(1, 1000000);
  CHECK(verify_sessp(inst, SplitCertificate{{0, 1, 2}}));
  CHECK(verify_sessp(inst, SplitCertificate{{1, 4}}));
  CHECK(verify_sessp(inst, SplitCertificate{{5}}));
}

TEST_CASE("instance validation") {
  SESInstance inst;
  inst.state = basis_state({1});
  inst.weight = WeightFunction::magnetization(Axis::Z);
  inst.target = Rational(1, 10);
  inst.epsilon = Rational(1, 2);
  CHECK_THROWS_AS(validate(inst), InvariantViolation);  // needs B > epsilon
  inst.target = 1;
  inst.epsilon = Rational(-1, 2);
  CHECK_THROWS_AS(validate(inst), InvariantViolation);
}

TEST_CASE("exact site weights drive exact window decisions") {
  SESInstance inst;
  std::vector<std::array<cd, 2>> amps;
  for (double p : {0.2, 0.3, 0.5})
    amps.push_back({cd(std::sqrt(1 - p), 0), cd(std::sqrt(p), 0)});
  inst.state = product_state(amps);
  inst.weight = WeightFunction::magnetization(Axis::Z);
  inst.exact_site_weights = {Rational(1, 5), Rational(3, 10), Rational(1, 2)};
  inst.target = Rational(4, 5);
  inst.epsilon = 0;  // exact hit required
  CHECK(verify_ses(inst, SubsetCertificate{{1, 2}}));
  CHECK_FALSE(verify_ses(inst, SubsetCertificate{{0, 2}}));
}
