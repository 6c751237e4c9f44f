#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "antimagic/generator.hpp"
#include "antimagic/labeler.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/verifier.hpp"

namespace antimagic {

/// Seeded generate -> label -> verify loop, stratified over the four
/// Step-I cases so the subtler branches are never under-sampled. Small
/// instances are additionally cross-checked against the oracle.
struct StressConfig {
  int trials = 1000;
  int p_max = 50;
  long long budget_max = 100;  // extra edge budget per tree (even)
  std::uint64_t seed = 0;
  bool cross_check_oracle = true;
  int oracle_edge_limit = 12;
  std::uint64_t oracle_budget = 10'000'000;
};

struct StressSummary {
  int trials = 0;
  int failures = 0;
  int count_p1 = 0, count_leaf = 0, count_swap = 0, count_extend = 0;
  int oracle_checked = 0;
  int oracle_timeouts = 0;  // inconclusive, not counted as failures
  std::string first_failure;  // reproducer for the first failing trial

  std::string to_string() const {
    std::ostringstream out;
    out << "trials=" << trials << " failures=" << failures
        << " P1=" << count_p1 << " LeafEndpoint=" << count_leaf
        << " SwapOnly=" << count_swap << " SwapAndExtend=" << count_extend
        << " oracle_checked=" << oracle_checked
        << " oracle_timeouts=" << oracle_timeouts;
    if (failures > 0) out << "\nfirst failure: " << first_failure;
    return out.str();
  }
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

inline StressSummary run_stress(const StressConfig& cfg) {
  StressSummary sum;
  sum.trials = cfg.trials;
  for (int i = 0; i < cfg.trials; ++i) {
    const std::uint64_t trial_seed = detail::mix_seed(cfg.seed, i);
    std::mt19937_64 rng(trial_seed);

    GenSpec spec;
    spec.seed = trial_seed;
    const int target = i % 4;
    auto rand_in = [&rng](int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    long long min_budget = 2;
    switch (target) {
      case 0:  // P1
        spec.p = 1;
        spec.leaf_endpoint_bias = 1.0;
        break;
      case 1:  // LeafEndpoint
        spec.p = rand_in(2, std::max(2, cfg.p_max));
        spec.leaf_endpoint_bias = 1.0;
        break;
      case 2:  // SwapOnly: odd p >= 3
        spec.p = 2 * rand_in(1, std::max(1, (cfg.p_max - 1) / 2)) + 1;
        spec.leaf_endpoint_bias = 0.0;
        min_budget = 6;
        break;
      default:  // SwapAndExtend: even p >= 2
        spec.p = 2 * rand_in(1, std::max(1, cfg.p_max / 2));
        spec.leaf_endpoint_bias = 0.0;
        min_budget = 6;
        break;
    }
    spec.extra_budget =
        2 * rand_in(static_cast<int>(min_budget / 2),
                    static_cast<int>(std::max(min_budget, cfg.budget_max) / 2));

    auto fail = [&](const std::string& why) {
      ++sum.failures;
      if (sum.first_failure.empty()) {
        std::ostringstream r;
        r << why << " [trial=" << i << " p=" << spec.p
          << " budget=" << spec.extra_budget << " seed=" << spec.seed
          << " bias=" << spec.leaf_endpoint_bias << "]";
        sum.first_failure = r.str();
      }
    };

    try {
      Tree t = generate(spec);
      EvenPathStatus st = find_even_path(t);
      if (st.tag != EvenPathTag::EvenPathOfEvenOrder ||
          st.half_order() != spec.p) {
        fail("generated tree misses the even-path precondition");
        continue;
      }
      EvenPathDecomposition d = decompose(t);
      switch (d.case_tag) {
        case CaseTag::P1: ++sum.count_p1; break;
        case CaseTag::LeafEndpoint: ++sum.count_leaf; break;
        case CaseTag::SwapOnly: ++sum.count_swap; break;
        case CaseTag::SwapAndExtend: ++sum.count_extend; break;
      }
      auto [partial, ell] = label_step1(t, d);
      PairSchedule sched = build_pair_schedule(t, d, partial);
      EdgeLabeling phi =
          label_step2(std::move(partial), sched, d.p, ell, t.edge_count());
      AntimagicCheck chk = is_antimagic(t, phi);
      if (!chk.ok) {
        fail("labeling is not antimagic: " + chk.reason);
        continue;
      }
      ResidueAuditReport audit = residue_audit(t, d, phi, ell);
      if (!audit.ok) {
        fail("residue audit: " + audit.deviations.front());
        continue;
      }
      if (cfg.cross_check_oracle && t.edge_count() <= cfg.oracle_edge_limit) {
        ++sum.oracle_checked;
        OracleResult res = search_antimagic(t, cfg.oracle_budget);
        if (res.outcome == OracleOutcome::Timeout)
          ++sum.oracle_timeouts;
        else if (res.outcome != OracleOutcome::Found)
          fail("oracle found no labeling where one was constructed");
      }
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
  }
  return sum;
}

}  // namespace antimagic
