#include "ruledcone/stability.hpp"

#include "ruledcone/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace ruledcone {

bool StabilityReport::all_passed() const { return total_failed() == 0; }

std::size_t StabilityReport::total_failed() const {
  std::size_t n = 0;
  for (const auto& c : chambers) n += c.failed;
  return n;
}

namespace {

struct Task {
  std::size_t chamber_slot;
  std::size_t from;
  std::size_t to;
  std::size_t label;
};

struct ChamberGroup {
  ChamberId id;
  std::vector<NormalizedClass> points;
  std::vector<StratumLabel> labels;  // present throughout the chamber
};

}  // namespace

StabilityReport verify_stability(const SurfaceParams& params, const Rational& mu_max,
                                 const Rational& grid_step, const StabilityOptions& options) {
  if (grid_step <= 0) throw InputError("grid step must be positive");
  if (params.n != 1) throw InputError("stability is only verified for n = 1");

  StabilityReport report;
  report.params = params;
  report.mu_min = options.mu_min;
  report.mu_max = mu_max;
  report.step = grid_step;
  report.x = options.x.value_or(params.g);
  PlannerOptions planner_options;
  planner_options.x = options.x;

  std::map<ChamberId, ChamberGroup> groups;
  Integer i0 = floor(options.mu_min / grid_step) + 1;
  for (Integer i = i0;; ++i) {
    Rational mu = grid_step * Rational(i);
    if (mu > mu_max) break;
    if (mu <= options.mu_min) continue;
    for (Integer j = 1;; ++j) {
      Rational c = grid_step * Rational(j);
      if (c >= 1) break;
      auto u = NormalizedClass::one_point(mu, c);
      if (!is_valid(u)) {
        ++report.policy_skipped_points;
        continue;
      }
      auto id = chamber_of(u);
      auto& g = groups[id];
      g.id = id;
      g.points.push_back(u);
    }
  }

  std::size_t valid_points = 0;
  for (const auto& [id, g] : groups) valid_points += g.points.size();

  std::vector<ChamberGroup*> slots;
  std::vector<Task> tasks;
  std::size_t same_pairs = 0;
  for (auto& [id, g] : groups) {
    ChamberVerdict v;
    v.chamber = id;
    v.points = g.points.size();
    v.pairs = g.points.size() * (g.points.size() - 1);
    same_pairs += v.pairs;
    v.skipped = id.index < 2 * params.g;
    report.chambers.push_back(v);
    slots.push_back(&g);
    if (v.skipped) continue;
    // The set of positive-area negative classes is constant on a half-open
    // chamber, so any member determines the labels.
    g.labels = stratum_labels(g.points.front(), params, std::nullopt);
    for (std::size_t a = 0; a < g.points.size(); ++a) {
      for (std::size_t b = 0; b < g.points.size(); ++b) {
        if (a == b) continue;
        for (std::size_t l = 0; l < g.labels.size(); ++l) {
          tasks.push_back({slots.size() - 1, a, b, l});
        }
      }
    }
  }
  const std::size_t all_pairs = valid_points == 0 ? 0 : valid_points * (valid_points - 1);
  report.cross_chamber_pairs = all_pairs - same_pairs;

  std::vector<std::optional<std::string>> outcome(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& task = tasks[t];
      const auto& g = *slots[task.chamber_slot];
      const auto& label = g.labels[task.label];
      try {
        auto p = plan(g.points[task.from], g.points[task.to], label, params, planner_options);
        auto r = replay(p);
        if (!r.ok) outcome[t] = "replay: " + r.failure;
      } catch (const PlanError& e) {
        outcome[t] = e.what();
      } catch (const InputError& e) {
        outcome[t] = e.what();
      }
    }
  };
  unsigned n_threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  n_threads = std::clamp<unsigned>(n_threads, 1, 64);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // Deterministic merge in task order.
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const auto& task = tasks[t];
    auto& v = report.chambers[task.chamber_slot];
    const auto& g = *slots[task.chamber_slot];
    ++v.checks;
    if (!outcome[t]) {
      ++v.passed;
      continue;
    }
    ++v.failed;
    if (!v.first_failure) {
      v.first_failure = Counterexample{g.points[task.from], g.points[task.to],
                                       g.labels[task.label], *outcome[t]};
    }
  }
  return report;
}

}  // namespace ruledcone
