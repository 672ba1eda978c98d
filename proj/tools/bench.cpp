// Benchmark: serial reference solver vs the Gray-code kernel, single- and
// multi-threaded, on a family of product-state magnetization instances.

#include "sesq/reductions.hpp"
#include "sesq/solvers.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

namespace {

using namespace sesq;

SESInstance make_instance(int n, unsigned seed) {
  std::mt19937 rng(seed);
  SubsetSumInstance ss;
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    ss.sizes.push_back(static_cast<long long>(rng() % 1000) + 1);
    total += ss.sizes.back();
  }
  ss.target = total / 3 + 1;
  auto [inst, map] = reduce_to_ses_magnetization(normalize(lift_to_real(ss, Rational(1, 4))));
  (void)map;
  return inst;
}

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 20;
  std::printf("%4s %14s %14s %14s %10s\n", "n", "reference_ms", "gray_1t_ms",
              "gray_4t_ms", "agree");

  for (int n = 12; n <= max_n; n += 2) {
    SESInstance inst = make_instance(n, 7u + static_cast<unsigned>(n));

    SolveResult ref, gray1, gray4;
    double t_ref = time_ms([&] { ref = solve_ses_reference(inst, n); });

    SolveOptions o1;
    o1.limit_n = n;
    double t1 = time_ms([&] { gray1 = solve_ses_bruteforce(inst, o1); });

    SolveOptions o4 = o1;
    o4.threads = 4;
    double t4 = time_ms([&] { gray4 = solve_ses_bruteforce(inst, o4); });

    bool agree = ref.yes == gray1.yes && gray1.yes == gray4.yes;
    std::printf("%4d %14.2f %14.2f %14.2f %10s\n", n, t_ref, t1, t4,
                agree ? "yes" : "NO");
    if (!agree) return 1;
  }
  return 0;
}
