#include "ruledcone/strata.hpp"

#include "ruledcone/errors.hpp"

#include <algorithm>

namespace ruledcone {

namespace {

const ClassVector kE = ClassVector::of(0, 0, 1);
const ClassVector kFminusE = ClassVector::of(0, 1, -1);
const ClassVector kF = ClassVector::of(0, 1, 0);

bool is_ubiquitous(const ClassVector& a) { return a == kE || a == kFminusE; }

void require_input(const NormalizedClass& u) {
  if (u.n() != 1) throw DimensionError("strata are only enumerated for n = 1");
  auto v = check_validity(u);
  if (!v.ok()) throw InputError("invalid normalized class " + to_string(u));
}

void sort_classes(std::vector<ClassVector>& classes, const SurfaceParams& params) {
  auto key_k = [](const ClassVector& a) { return a.p == 0 ? 0 : -a.q; };
  std::sort(classes.begin(), classes.end(), [&](const ClassVector& a, const ClassVector& b) {
    auto ca = codim(a, params), cb = codim(b, params);
    if (ca != cb) return ca < cb;
    if (key_k(a) != key_k(b)) return key_k(a) < key_k(b);
    return a < b;
  });
}

bool within(std::int64_t value, std::optional<std::int64_t> bound) {
  return !bound || value <= *bound;
}

}  // namespace

std::string StratumLabel::name() const {
  if (core.empty()) return "open";
  std::string out;
  for (const auto& c : core) {
    if (!out.empty()) out += ",";
    out += to_string(c);
  }
  return out;
}

StratumLabel open_label() { return {}; }

StratumLabel single_label(const ClassVector& cls, const SurfaceParams& params) {
  return StratumLabel{{cls}, codim(cls, params)};
}

std::vector<ClassVector> negative_classes(const NormalizedClass& u,
                                          const SurfaceParams& params,
                                          std::optional<std::int64_t> cod_max) {
  require_input(u);
  std::vector<ClassVector> out;
  for (const auto& a : {kE, kFminusE}) {
    if (area(u, a) > 0 && within(codim(a, params), cod_max)) out.push_back(a);
  }
  // Areas mu - k and mu - k - c decrease in k, so the scans terminate.
  for (std::int64_t k = 1;; ++k) {
    auto a = ClassVector::of(1, -k, 0);
    if (area(u, a) <= 0) break;
    if (within(codim(a, params), cod_max)) out.push_back(a);
  }
  for (std::int64_t k = 0;; ++k) {
    auto a = ClassVector::of(1, -k, -1);
    if (area(u, a) <= 0) break;
    if (within(codim(a, params), cod_max)) out.push_back(a);
  }
  sort_classes(out, params);
  return out;
}

std::vector<ClassVector> wide_negative_classes(const NormalizedClass& u,
                                               const SurfaceParams& params,
                                               std::optional<std::int64_t> cod_max,
                                               int bound) {
  require_input(u);
  std::vector<ClassVector> out;
  for (std::int64_t p = -bound; p <= bound; ++p) {
    for (std::int64_t q = -bound; q <= bound; ++q) {
      for (std::int64_t r = -bound; r <= bound; ++r) {
        auto a = ClassVector::of(p, q, r);
        if (a.is_zero() || square(a) >= 0) continue;
        if (!adjunction_genus(a, params)) continue;
        if (area(u, a) <= 0) continue;
        if (!within(codim(a, params), cod_max)) continue;
        if (pair(a, kF) < 0) continue;
        if (a != kE && pair(a, kE) < 0) continue;
        if (a != kFminusE && pair(a, kFminusE) < 0) continue;
        out.push_back(a);
      }
    }
  }
  sort_classes(out, params);
  return out;
}

bool is_admissible(const std::vector<ClassVector>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i] != classes[j] && pair(classes[i], classes[j]) < 0) return false;
    }
  }
  return true;
}

std::int64_t cod_of_set(const std::vector<ClassVector>& classes, const SurfaceParams& params) {
  if (!is_admissible(classes)) throw InputError("class set is not admissible");
  std::int64_t total = 0;
  for (const auto& a : classes) total += codim(a, params);
  return total;
}

std::vector<StratumLabel> stratum_labels(const NormalizedClass& u,
                                         const SurfaceParams& params,
                                         std::optional<std::int64_t> cod_max,
                                         int wide_bound) {
  auto classes = wide_bound > 0 ? wide_negative_classes(u, params, cod_max, wide_bound)
                                : negative_classes(u, params, cod_max);
  std::vector<ClassVector> candidates;
  for (const auto& a : classes) {
    if (is_ubiquitous(a)) continue;
    if (pair(a, kE) < 0 || pair(a, kFminusE) < 0) continue;
    candidates.push_back(a);
  }

  std::vector<StratumLabel> labels;
  std::vector<ClassVector> current;
  auto extend = [&](auto&& self, std::size_t from, std::int64_t cod) -> void {
    labels.push_back(StratumLabel{current, cod});
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const auto& a = candidates[i];
      auto next = cod + codim(a, params);
      if (!within(next, cod_max)) continue;
      bool ok = std::all_of(current.begin(), current.end(),
                            [&](const ClassVector& b) { return pair(a, b) >= 0; });
      if (!ok) continue;
      current.push_back(a);
      self(self, i + 1, next);
      current.pop_back();
    }
  };
  extend(extend, 0, 0);

  std::stable_sort(labels.begin(), labels.end(),
                   [](const StratumLabel& a, const StratumLabel& b) { return a.codim < b.codim; });
  return labels;
}

}  // namespace ruledcone
