#include "sesq/solvers.hpp"

#include "sesq/errors.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>

namespace sesq {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

constexpr int kSegTableBits = 12;
constexpr double kScreenMargin = 1e-9;  // extra slack on the incremental screen

// ---------------------------------------------------------------------------
// weight models for the enumeration kernels

// Chain split into independent pure factors; subset weight is the sum of a
// per-segment table lookup. Magnetization uses one-qubit segments.
struct SegModel {
  std::vector<int> seg_of;                  // qubit -> segment
  std::vector<std::uint32_t> bit_of;        // qubit -> bit inside the segment
  std::vector<std::vector<double>> tables;  // per segment, indexed by submask
  std::vector<std::uint32_t> full;          // all-ones submask per segment

  double value(std::uint64_t mask, int n) const {
    std::vector<std::uint32_t> cur(tables.size(), 0);
    for (int q = 0; q < n; ++q)
      if (mask >> q & 1) cur[seg_of[q]] ^= bit_of[q];
    double w = 0.0;
    for (std::size_t s = 0; s < tables.size(); ++s) w += tables[s][cur[s]];
    return w;
  }

  double complement_value(std::uint64_t mask, int n) const {
    std::uint64_t all = (n == 64) ? ~0ull : (1ull << n) - 1;
    return value(all & ~mask, n);
  }
};

std::optional<SegModel> build_seg_model(const MPSState& state, const WeightFunction& w) {
  SegModel model;
  model.seg_of.resize(state.n);
  model.bit_of.resize(state.n);

  if (w.kind == WeightFunction::Kind::Magnetization) {
    Eigen::Matrix2cd p = down_projector(w.axis);
    for (int q = 0; q < state.n; ++q) {
      model.seg_of[q] = q;
      model.bit_of[q] = 1;
      double wq = (single_site_rdm(state, q) * p).trace().real();
      model.tables.push_back({0.0, wq});
      model.full.push_back(1);
    }
    return model;
  }

  // entropy: tabulate every factor segment
  std::vector<int> starts{0};
  for (int c : trivial_cuts(state)) starts.push_back(c + 1);
  for (std::size_t seg = 0; seg < starts.size(); ++seg) {
    int a = starts[seg];
    int b = (seg + 1 < starts.size()) ? starts[seg + 1] - 1 : state.n - 1;
    int len = b - a + 1;
    if (len > kSegTableBits) return std::nullopt;
    std::vector<double> table(std::size_t{1} << len, 0.0);
    for (std::uint32_t sub = 1; sub < table.size(); ++sub) {
      std::vector<int> sites;
      for (int q = 0; q < len; ++q)
        if (sub >> q & 1) sites.push_back(a + q);
      // cost inside one segment is bounded by its length, so the block cap
      // policy is waived here
      table[sub] = subset_weight(state, w, sites, /*block_cap=*/len);
    }
    for (int q = a; q <= b; ++q) {
      model.seg_of[q] = static_cast<int>(seg);
      model.bit_of[q] = 1u << (q - a);
    }
    model.tables.push_back(std::move(table));
    model.full.push_back(static_cast<std::uint32_t>((std::size_t{1} << len) - 1));
  }
  return model;
}

// Per-qubit weights scaled to a common integer denominator; window decisions
// become exact integer comparisons.
struct ExactModel {
  std::vector<long long> w;
  long long total = 0;
  BigInt scale;
};

std::optional<ExactModel> build_exact_model(const std::vector<Rational>& site_weights) {
  BigInt scale = common_denominator(site_weights);
  if (scale > BigInt(1000000000000LL)) return std::nullopt;
  ExactModel model;
  model.scale = scale;
  BigInt total = 0;
  for (const auto& r : site_weights) {
    BigInt v = boost::multiprecision::numerator(r) * scale /
               boost::multiprecision::denominator(r);
    if (v < 0 || v > BigInt(1000000000000000LL)) return std::nullopt;
    model.w.push_back(v.convert_to<long long>());
    total += v;
  }
  if (total > BigInt(4000000000000000000LL)) return std::nullopt;
  model.total = total.convert_to<long long>();
  return model;
}

// clamp an exact bound into [-1, limit + 1] so it fits a long long
long long clamp_bound(const BigInt& b, long long limit) {
  if (b < -1) return -1;
  if (b > limit) return limit + 1;
  return b.convert_to<long long>();
}

// ---------------------------------------------------------------------------
// enumeration kernels

void merge_best(std::optional<std::uint64_t>& best, std::optional<std::uint64_t> cand) {
  if (!cand) return;
  if (!best || mask_lex_less(*cand, *best)) best = cand;
}

struct ChunkPlan {
  std::uint64_t total;
  std::uint64_t chunk;
  std::uint64_t count;
};

ChunkPlan plan_chunks(std::uint64_t total, int threads) {
  std::uint64_t chunk = std::max<std::uint64_t>(total / (static_cast<std::uint64_t>(threads) * 8), 4096);
  std::uint64_t count = (total + chunk - 1) / chunk;
  return {total, chunk, std::max<std::uint64_t>(count, 1)};
}

// Gray-code scan of subset masks [via index k -> g(k) = k ^ (k >> 1)],
// summing per-segment table entries incrementally. `to_mask` maps the Gray
// word to the actual subset mask (identity for SES, shifted for SESSP).
template <typename Test>
std::optional<std::uint64_t> scan_chunks(std::uint64_t total, int threads, Test&& test) {
  if (total == 0) return std::nullopt;
  ChunkPlan plan = plan_chunks(total, threads);
  std::vector<std::optional<std::uint64_t>> bests(plan.count);

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long c = 0; c < static_cast<long long>(plan.count); ++c) {
    std::uint64_t k0 = static_cast<std::uint64_t>(c) * plan.chunk;
    std::uint64_t k1 = std::min(k0 + plan.chunk, total);
    bests[c] = test(k0, k1);
  }

  std::optional<std::uint64_t> best;
  for (auto& b : bests) merge_best(best, b);
  return best;
}

// SES over all 2^n subsets with a segment-table model.
std::optional<std::uint64_t> scan_ses_seg(const SegModel& model, int n, double lo,
                                          double hi, int threads) {
  std::uint64_t total = 1ull << n;
  return scan_chunks(total, threads, [&](std::uint64_t k0, std::uint64_t k1) {
    std::optional<std::uint64_t> best;
    std::uint64_t g = k0 ^ (k0 >> 1);
    std::vector<std::uint32_t> cur(model.tables.size(), 0);
    for (int q = 0; q < n; ++q)
      if (g >> q & 1) cur[model.seg_of[q]] ^= model.bit_of[q];
    double w = 0.0;
    for (std::size_t s = 0; s < model.tables.size(); ++s) w += model.tables[s][cur[s]];

    for (std::uint64_t k = k0;;) {
      if (w >= lo - kScreenMargin && w <= hi + kScreenMargin &&
          (!best || mask_lex_less(g, *best))) {
        double exact = model.value(g, n);  // confirm without accumulated drift
        if (exact >= lo && exact <= hi) best = g;
      }
      if (++k == k1) break;
      int q = std::countr_zero(k);
      int s = model.seg_of[q];
      w -= model.tables[s][cur[s]];
      cur[s] ^= model.bit_of[q];
      w += model.tables[s][cur[s]];
      g ^= 1ull << q;
    }
    return best;
  });
}

std::optional<std::uint64_t> scan_ses_exact(const ExactModel& model, int n, long long lo,
                                            long long hi, int threads) {
  std::uint64_t total = 1ull << n;
  return scan_chunks(total, threads, [&](std::uint64_t k0, std::uint64_t k1) {
    std::optional<std::uint64_t> best;
    std::uint64_t g = k0 ^ (k0 >> 1);
    long long w = 0;
    for (int q = 0; q < n; ++q)
      if (g >> q & 1) w += model.w[q];
    for (std::uint64_t k = k0;;) {
      if (w >= lo && w <= hi && (!best || mask_lex_less(g, *best))) best = g;
      if (++k == k1) break;
      int q = std::countr_zero(k);
      g ^= 1ull << q;
      w += (g >> q & 1) ? model.w[q] : -model.w[q];
    }
    return best;
  });
}

// SESSP: Gray word x over qubits 1..n-1, side A = (x << 1) | 1, excluding the
// full set. Tracks both sides of the split.
std::optional<std::uint64_t> scan_sessp_seg(const SegModel& model, int n, double eps,
                                            int threads) {
  // Gray scan over all words containing qubit 0; the full set (not a proper
  // split) shows up at an arbitrary position and is skipped by value.
  const std::uint64_t full_mask = (1ull << n) - 1;
  std::uint64_t total = 1ull << (n - 1);
  return scan_chunks(total, threads, [&](std::uint64_t k0, std::uint64_t k1) {
    std::optional<std::uint64_t> best;
    std::uint64_t x = k0 ^ (k0 >> 1);
    std::uint64_t mask = (x << 1) | 1;
    std::vector<std::uint32_t> cur(model.tables.size(), 0);
    for (int q = 0; q < n; ++q)
      if (mask >> q & 1) cur[model.seg_of[q]] ^= model.bit_of[q];
    double wa = 0.0, wb = 0.0;
    for (std::size_t s = 0; s < model.tables.size(); ++s) {
      wa += model.tables[s][cur[s]];
      wb += model.tables[s][model.full[s] ^ cur[s]];
    }
    for (std::uint64_t k = k0;;) {
      if (mask != full_mask && std::abs(wa - wb) <= eps + kScreenMargin &&
          (!best || mask_lex_less(mask, *best))) {
        double ea = model.value(mask, n);
        double eb = model.complement_value(mask, n);
        if (std::abs(ea - eb) <= eps) best = mask;
      }
      if (++k == k1) break;
      int q = std::countr_zero(k) + 1;
      int s = model.seg_of[q];
      wa -= model.tables[s][cur[s]];
      wb -= model.tables[s][model.full[s] ^ cur[s]];
      cur[s] ^= model.bit_of[q];
      wa += model.tables[s][cur[s]];
      wb += model.tables[s][model.full[s] ^ cur[s]];
      mask ^= 1ull << q;
    }
    return best;
  });
}

std::optional<std::uint64_t> scan_sessp_exact(const ExactModel& model, int n,
                                              long long thr, int threads) {
  const std::uint64_t full_mask = (1ull << n) - 1;
  std::uint64_t total = 1ull << (n - 1);
  return scan_chunks(total, threads, [&](std::uint64_t k0, std::uint64_t k1) {
    std::optional<std::uint64_t> best;
    std::uint64_t x = k0 ^ (k0 >> 1);
    std::uint64_t mask = (x << 1) | 1;
    long long wa = 0;
    for (int q = 0; q < n; ++q)
      if (mask >> q & 1) wa += model.w[q];
    for (std::uint64_t k = k0;;) {
      long long diff = 2 * wa - model.total;
      if (mask != full_mask && std::llabs(diff) <= thr &&
          (!best || mask_lex_less(mask, *best)))
        best = mask;
      if (++k == k1) break;
      int q = std::countr_zero(k) + 1;
      mask ^= 1ull << q;
      wa += (mask >> q & 1) ? model.w[q] : -model.w[q];
    }
    return best;
  });
}

}  // namespace

bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;  // a proper prefix sorts first; empty < nonempty
}

std::vector<int> mask_to_sites(std::uint64_t mask, int n) {
  std::vector<int> sites;
  for (int q = 0; q < n; ++q)
    if (mask >> q & 1) sites.push_back(q);
  return sites;
}

SolveResult solve_ses_bruteforce(const SESInstance& instance, const SolveOptions& opts) {
  validate(instance);
  const int n = instance.state.n;
  if (n > opts.limit_n)
    throw InstanceTooLarge("brute force limited to " + std::to_string(opts.limit_n) +
                           " qubits");
  auto t0 = Clock::now();
  std::optional<std::uint64_t> best;
  std::uint64_t total = 1ull << n;

  std::optional<ExactModel> exact;
  if (instance.exact_site_weights &&
      instance.weight.kind == WeightFunction::Kind::Magnetization)
    exact = build_exact_model(*instance.exact_site_weights);

  if (exact) {
    long long lo = clamp_bound(ceil_rational((instance.target - instance.epsilon) *
                                             Rational(exact->scale)),
                               exact->total);
    long long hi = clamp_bound(floor_rational((instance.target + instance.epsilon) *
                                              Rational(exact->scale)),
                               exact->total);
    best = scan_ses_exact(*exact, n, lo, hi, opts.threads);
  } else if (auto model = build_seg_model(instance.state, instance.weight)) {
    double b = to_double(instance.target);
    double eps = to_double(instance.epsilon);
    best = scan_ses_seg(*model, n, b - eps - kVerifySlack, b + eps + kVerifySlack,
                        opts.threads);
  } else {
    // large entangled factors: evaluate each subset directly
    best = scan_chunks(total, opts.threads, [&](std::uint64_t k0, std::uint64_t k1) {
      std::optional<std::uint64_t> local;
      for (std::uint64_t mask = k0; mask < k1; ++mask) {
        if (local && !mask_lex_less(mask, *local)) continue;
        SubsetCertificate cert{mask_to_sites(mask, n)};
        if (verify_ses(instance, cert, opts.block_cap)) merge_best(local, mask);
      }
      return local;
    });
  }

  SolveResult result;
  result.strategy = "brute";
  result.stats.subsets_examined = total;
  result.stats.wall_ms = ms_since(t0);
  if (best) {
    result.yes = true;
    result.subset_cert = SubsetCertificate{mask_to_sites(*best, n)};
    if (!verify_ses(instance, *result.subset_cert, opts.block_cap))
      throw Error("internal: brute-force witness failed verification");
  }
  return result;
}

SolveResult solve_ses_reference(const SESInstance& instance, int limit_n) {
  validate(instance);
  const int n = instance.state.n;
  if (n > limit_n) throw InstanceTooLarge("reference solver limit exceeded");
  auto t0 = Clock::now();
  std::optional<std::uint64_t> best;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (best && !mask_lex_less(mask, *best)) continue;
    SubsetCertificate cert{mask_to_sites(mask, n)};
    if (verify_ses(instance, cert)) best = mask;
  }
  SolveResult result;
  result.strategy = "reference";
  result.stats.subsets_examined = 1ull << n;
  result.stats.wall_ms = ms_since(t0);
  if (best) {
    result.yes = true;
    result.subset_cert = SubsetCertificate{mask_to_sites(*best, n)};
  }
  return result;
}

SolveResult solve_ses_separable(const SESInstance& instance) {
  validate(instance);
  if (!is_product(instance.state)) throw NotSeparable("state has entangled cuts");
  if (instance.weight.kind != WeightFunction::Kind::Magnetization)
    throw NotAdditiveWeight("meet-in-the-middle needs a per-qubit additive weight");
  const int n = instance.state.n;
  if (n > 44) throw InstanceTooLarge("meet-in-the-middle limited to 44 qubits");
  auto t0 = Clock::now();

  std::optional<ExactModel> exact;
  if (instance.exact_site_weights) exact = build_exact_model(*instance.exact_site_weights);

  const int h = n / 2;
  const std::uint64_t left_count = 1ull << h;
  const std::uint64_t right_count = 1ull << (n - h);
  std::optional<std::uint64_t> witness;

  if (exact) {
    long long lo = clamp_bound(ceil_rational((instance.target - instance.epsilon) *
                                             Rational(exact->scale)),
                               exact->total);
    long long hi = clamp_bound(floor_rational((instance.target + instance.epsilon) *
                                              Rational(exact->scale)),
                               exact->total);
    std::vector<std::pair<long long, std::uint64_t>> right(right_count);
    for (std::uint64_t m = 0; m < right_count; ++m) {
      long long s = 0;
      for (int q = 0; q < n - h; ++q)
        if (m >> q & 1) s += exact->w[h + q];
      right[m] = {s, m};
    }
    std::sort(right.begin(), right.end());
    for (std::uint64_t m = 0; m < left_count && !witness; ++m) {
      long long s = 0;
      for (int q = 0; q < h; ++q)
        if (m >> q & 1) s += exact->w[q];
      auto it = std::lower_bound(right.begin(), right.end(),
                                 std::make_pair(lo - s, std::uint64_t{0}));
      if (it != right.end() && it->first <= hi - s) witness = m | (it->second << h);
    }
  } else {
    Eigen::Matrix2cd p = down_projector(instance.weight.axis);
    std::vector<double> w(n);
    for (int q = 0; q < n; ++q)
      w[q] = (single_site_rdm(instance.state, q) * p).trace().real();
    double lo = to_double(instance.target) - to_double(instance.epsilon) - kVerifySlack;
    double hi = to_double(instance.target) + to_double(instance.epsilon) + kVerifySlack;
    std::vector<std::pair<double, std::uint64_t>> right(right_count);
    for (std::uint64_t m = 0; m < right_count; ++m) {
      double s = 0;
      for (int q = 0; q < n - h; ++q)
        if (m >> q & 1) s += w[h + q];
      right[m] = {s, m};
    }
    std::sort(right.begin(), right.end());
    for (std::uint64_t m = 0; m < left_count && !witness; ++m) {
      double s = 0;
      for (int q = 0; q < h; ++q)
        if (m >> q & 1) s += w[q];
      auto it = std::lower_bound(right.begin(), right.end(),
                                 std::make_pair(lo - s, std::uint64_t{0}));
      if (it != right.end() && it->first <= hi - s) witness = m | (it->second << h);
    }
  }

  SolveResult result;
  result.strategy = "separable-mim";
  result.stats.subsets_examined = left_count + right_count;
  result.stats.wall_ms = ms_since(t0);
  if (witness) {
    result.yes = true;
    result.subset_cert = SubsetCertificate{mask_to_sites(*witness, n)};
    if (!verify_ses(instance, *result.subset_cert))
      throw Error("internal: meet-in-the-middle witness failed verification");
  }
  return result;
}

SolveResult solve_sessp_bruteforce(const SESSPInstance& instance, const SolveOptions& opts) {
  validate(instance);
  const int n = instance.state.n;
  if (n > opts.limit_n) throw InstanceTooLarge("brute force limit exceeded");
  auto t0 = Clock::now();

  SolveResult result;
  result.strategy = "brute";
  result.stats.subsets_examined = n >= 2 ? (1ull << (n - 1)) - 1 : 0;
  if (n < 2) {  // no proper split exists
    result.stats.wall_ms = ms_since(t0);
    return result;
  }

  std::optional<ExactModel> exact;
  if (instance.exact_site_weights &&
      instance.weight.kind == WeightFunction::Kind::Magnetization)
    exact = build_exact_model(*instance.exact_site_weights);

  std::optional<std::uint64_t> best;
  if (exact) {
    long long thr =
        clamp_bound(floor_rational(instance.epsilon * Rational(exact->scale)),
                    exact->total);
    best = scan_sessp_exact(*exact, n, thr, opts.threads);
  } else if (auto model = build_seg_model(instance.state, instance.weight)) {
    best = scan_sessp_seg(*model, n, to_double(instance.epsilon) + kVerifySlack,
                          opts.threads);
  } else {
    std::uint64_t total = (1ull << (n - 1)) - 1;
    best = scan_chunks(total, opts.threads, [&](std::uint64_t k0, std::uint64_t k1) {
      std::optional<std::uint64_t> local;
      for (std::uint64_t x = k0; x < k1; ++x) {
        std::uint64_t mask = (x << 1) | 1;
        if (local && !mask_lex_less(mask, *local)) continue;
        SplitCertificate cert{mask_to_sites(mask, n)};
        if (verify_sessp(instance, cert, opts.block_cap)) merge_best(local, mask);
      }
      return local;
    });
  }

  result.stats.wall_ms = ms_since(t0);
  if (best) {
    result.yes = true;
    result.split_cert = SplitCertificate{mask_to_sites(*best, n)};
    if (!verify_sessp(instance, *result.split_cert, opts.block_cap))
      throw Error("internal: brute-force witness failed verification");
  }
  return result;
}

SolveResult solve_sessp_reference(const SESSPInstance& instance, int limit_n) {
  validate(instance);
  const int n = instance.state.n;
  if (n > limit_n) throw InstanceTooLarge("reference solver limit exceeded");
  auto t0 = Clock::now();
  SolveResult result;
  result.strategy = "reference";
  result.stats.subsets_examined = n >= 2 ? (1ull << (n - 1)) - 1 : 0;
  std::optional<std::uint64_t> best;
  for (std::uint64_t x = 0; n >= 2 && x < (1ull << (n - 1)) - 1; ++x) {
    std::uint64_t mask = (x << 1) | 1;
    if (best && !mask_lex_less(mask, *best)) continue;
    SplitCertificate cert{mask_to_sites(mask, n)};
    if (verify_sessp(instance, cert)) best = mask;
  }
  result.stats.wall_ms = ms_since(t0);
  if (best) {
    result.yes = true;
    result.split_cert = SplitCertificate{mask_to_sites(*best, n)};
  }
  return result;
}

std::optional<std::vector<int>> solve_subset_sum_dp(const std::vector<long long>& values,
                                                    long long target) {
  if (target < 0) throw Error("target must be nonnegative");
  for (long long v : values)
    if (v < 0) throw Error("values must be nonnegative");
  const long long n = static_cast<long long>(values.size());
  if ((n + 1) * (target + 1) > 100000000LL)
    throw TableTooLarge("subset-sum table exceeds 1e8 cells");

  if (target == 0) return std::vector<int>{};
  std::vector<char> reach(target + 1, 0);
  std::vector<int> from(target + 1, -1);
  reach[0] = 1;
  for (int i = 0; i < n; ++i) {
    long long v = values[i];
    if (v == 0 || v > target) continue;
    for (long long s = target; s >= v; --s) {
      if (!reach[s] && reach[s - v]) {
        reach[s] = 1;
        from[s] = i;
      }
    }
  }
  if (!reach[target]) return std::nullopt;
  std::vector<int> subset;
  for (long long s = target; s > 0;) {
    int i = from[s];
    subset.push_back(i);
    s -= values[i];
  }
  std::reverse(subset.begin(), subset.end());
  return subset;
}

std::optional<std::vector<int>> solve_partition_dp(const std::vector<long long>& values) {
  long long total = 0;
  for (long long v : values) {
    if (v < 0) throw Error("values must be nonnegative");
    total += v;
  }
  if (total % 2 != 0) return std::nullopt;
  if (total == 0) {
    if (values.size() < 2) return std::nullopt;
    return std::vector<int>{0};
  }
  auto subset = solve_subset_sum_dp(values, total / 2);
  if (!subset) return std::nullopt;
  // positive total rules out the empty and the full subset
  return subset;
}

}  // namespace sesq
