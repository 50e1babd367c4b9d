#include "ruledcone/discrepancy.hpp"

#include "ruledcone/inflation.hpp"
#include "ruledcone/planner.hpp"

namespace ruledcone {

namespace {

// Sample: u = (3, 1, 1/4), c_target = 1/2, x = k = 1.
const Rational kMu(3);
const Rational kC1(1, 4);
const Rational kC2(1, 2);
constexpr std::int64_t kX = 1;
constexpr std::int64_t kK = 1;

NormalizedClass sample() { return NormalizedClass::one_point(kMu, kC1); }

NormalizedClass apply(const ClassVector& z1, const Rational& t1, const ClassVector& z2,
                      const Rational& t2) {
  RawClass w = RawClass::from(sample());
  w += t1 * pd_area_vector(z1);
  w += t2 * pd_area_vector(z2);
  return normalize(w);
}

const ClassVector kFminusE = ClassVector::of(0, 1, -1);

std::string pd_text(const ClassVector& z) {
  auto v = pd_area_vector(z);
  return "[" + to_string(v.b_area) + "," + to_string(v.f_area) + "," +
         to_string(v.e_area.front()) + "]";
}

}  // namespace

std::vector<Discrepancy> detect_discrepancies() {
  std::vector<Discrepancy> out;
  const auto target = NormalizedClass::one_point(kMu, kC2);

  // Raising e in the open stratum along B+xF (t1) and F-E (t2).
  {
    auto section = ClassVector::of(1, kX, 0);
    // Displayed solution: t1 = (mu-x) t2, (1-c2) t2 = c2-c1.
    Rational t2 = (kC2 - kC1) / (1 - kC2);
    Rational t1 = (kMu - kX) * t2;
    auto reached = apply(section, t1, kFminusE, t2);
    auto exact = plan_vertical(sample(), kC2, open_label(), SurfaceParams{2, 1},
                               PlannerOptions{kX, 512});
    if (reached != target) {
      Rational e1 = (kC2 - kC1) / (kMu - kX - kC2);
      out.push_back(
          {"vertical-open-algebra",
           "raising e at fixed mu in the open stratum",
           "t1[x,1,0] + t2[1,0,1] = [mu+t1+t2*x, 1+t2, c1+t2]; t1 = (mu-x)*t2, "
           "(1-c2)*t2 = c2-c1; positive whenever mu > x",
           "t1*" + pd_text(section) + " + t2*" + pd_text(kFminusE) +
               " = [mu+x*t1+t2, 1+t1, c1+t2]; t2 = (mu-x)*t1, t1 = (c2-c1)/(mu-x-c2); "
               "positive iff mu > x + c2",
           "u = (3, 1, 1/4), x = 1, c2 = 1/2: displayed solution t1 = " + to_string(t1) +
               ", t2 = " + to_string(t2) + " normalizes to " + to_string(reached) +
               "; exact solve t1 = " + to_string(e1) + ", t2 = " + to_string((kMu - kX) * e1) +
               " reaches " + to_string(exact.end)});
    }
  }

  // Raising e in the stratum of B-kF along B-kF (t1) and F-E (t2).
  {
    auto z = ClassVector::of(1, -kK, 0);
    auto v = pd_area_vector(z);
    // Displayed condition c1 + t1 + t2 = c2 (1 + t2) with t1 = (mu+k) t2.
    Rational t2 = (kC2 - kC1) / (1 - kC2);
    Rational t1 = (kMu + kK) * t2;
    auto reached = apply(z, t1, kFminusE, t2);
    if (v.e_area.front() != 1 && reached != target) {
      Rational e1 = (kC2 - kC1) / (kMu + kK - kC2);
      out.push_back(
          {"vertical-stratum-e-condition",
           "raising e at fixed mu in the stratum of B-kF",
           "t1[-k,1,0] + t2[1,0,1] = [mu+t1-k*t2, 1+t2, c1+t2]; mu+t1+k*t2 = mu(1+t2), "
           "c1+t1+t2 = c2(1+t2); t1 = (mu+k)*t2",
           "B-kF pairs to 0 with E, so t1 does not enter the E-area: mu-k*t1+t2 = mu(1+t1), "
           "c1+t2 = c2(1+t1); t2 = (mu+k)*t1, t1 = (c2-c1)/(mu+k-c2)",
           "pd(B-F) = " + pd_text(z) + "; u = (3, 1, 1/4), k = 1, c2 = 1/2: displayed t1 = " +
               to_string(t1) + ", t2 = " + to_string(t2) + " normalizes to " +
               to_string(reached) + "; exact t1 = " + to_string(e1) + ", t2 = " +
               to_string((kMu + kK) * e1)});
    }
  }

  // Leftward inflation along B-kF-E and B-kF.
  {
    auto with_e = ClassVector::of(1, -kK, -1);
    auto without_e = ClassVector::of(1, -kK, 0);
    const Rational mu_target(5, 2);
    Rational displayed_t = (kMu - mu_target) / (mu_target - 1);
    Rational solved_t = left_parameter(sample(), without_e, mu_target);
    auto displayed_family = RawClass::from(sample()) + displayed_t * RawClass{1, 1, {1}};
    auto exact_family = inflate(sample(), InflationStep{with_e, displayed_t});
    if (solved_t != displayed_t || displayed_family != exact_family) {
      out.push_back(
          {"leftward-family",
           "decreasing mu along the label class of a positive-codimension stratum",
           "B-kF-E: [w_t] = [mu+t, 1+t, c1+t]; B-kF: [w_t] = [mu+t, 1+t, c1]; "
           "t = (mu-mu')/(mu'-1); ranges t < (mu-c1)/k and t < (mu-c1)/(k-1)",
           "pd(B-kF-E) = [-k,1,1], pd(B-kF) = [-k,1,0]: [w_t] = [mu-k*t, 1+t, c1+t] and "
           "[mu-k*t, 1+t, c1]; t = (mu-mu')/(mu'+k); ranges t < (mu-k-c1)/(2k+1) and "
           "t < (mu-k)/(2k)",
           "u = (3, 1, 1/4), k = 1, mu' = 5/2: displayed t = " + to_string(displayed_t) +
               ", solver t = " + to_string(solved_t) + "; pd(B-F-E) = " + pd_text(with_e) +
               ", pd(B-F) = " + pd_text(without_e)});
    }
  }
  return out;
}

}  // namespace ruledcone
