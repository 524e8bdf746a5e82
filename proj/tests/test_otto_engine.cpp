#include <doctest.h>

#include <array>
#include <cmath>

#include "eqhe/errors.hpp"
#include "eqhe/otto_engine.hpp"
#include "eqhe/sampling.hpp"

using namespace eqhe;
using doctest::Approx;

namespace {

CycleSpec make_spec(double j1, double d1, double th, double j2, double d2, double tl) {
  return {{{j1, d1}, th}, {{j2, d2}, tl}};
}

// Gibbs vector at scaled gap 0.5, from a 40-digit evaluation.
constexpr Levels kGibbsHalf{0.2350037122015945, 0.2350037122015945, 0.14253695659655095,
                            0.38745561900026008};

}  // namespace

TEST_CASE("stroke heat") {
  const Levels uniform{0.25, 0.25, 0.25, 0.25};
  CHECK(stroke_heat(Levels{0, 0, 1, -1}, uniform, uniform) == 0.0);
  CHECK(stroke_heat(Levels{0, 0, 2, -2}, uniform, kGibbsHalf) ==
        Approx(-0.4898373248074183).epsilon(1e-14));
  CHECK(stroke_heat(Levels{0, 0, 0, 0}, uniform, Levels{1, 0, 0, 0}) == 0.0);

  // Cross-check against U_after - U_before on the fixed spectrum.
  const Levels e{0, 0, 2, -2};
  double u_before = 0.0;
  double u_after = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    u_before += e[i] * uniform[i];
    u_after += e[i] * kGibbsHalf[i];
  }
  CHECK(stroke_heat(e, uniform, kGibbsHalf) == Approx(u_after - u_before).epsilon(1e-15));
}

TEST_CASE("stroke heat and work reject unnormalized occupations") {
  const Levels bad{0.5, 0.5, 0.5, 0.0};
  const Levels ok{0.25, 0.25, 0.25, 0.25};
  CHECK_THROWS_AS(stroke_heat(Levels{0, 0, 1, -1}, bad, ok), DomainError);
  CHECK_THROWS_AS(stroke_heat(Levels{0, 0, 1, -1}, ok, bad), DomainError);
  CHECK_THROWS_AS(stroke_work(bad, Levels{0, 0, 1, -1}, Levels{0, 0, 2, -2}), DomainError);
}

TEST_CASE("stroke work") {
  const Levels uniform{0.25, 0.25, 0.25, 0.25};
  CHECK(stroke_work(uniform, Levels{0, 0, 1, -1}, Levels{0, 0, 1, -1}) == 0.0);
  CHECK(stroke_work(uniform, Levels{0, 0, 3.7, -3.7}, Levels{0, 0, 0.2, -0.2}) == 0.0);
  CHECK(stroke_work(kGibbsHalf, Levels{0, 0, 2, -2}, Levels{0, 0, 1, -1}) ==
        Approx(0.2449186624037091).epsilon(1e-14));
}

TEST_CASE("run_cycle worked example") {
  const CycleResult r = run_cycle(make_spec(2, 0, 4, 1, 0, 1));
  CHECK(r.q_h == Approx(0.4343969897126013).epsilon(1e-14));
  CHECK(r.q_l == Approx(-0.2171984948563006).epsilon(1e-14));
  CHECK(r.w == Approx(0.2171984948563006).epsilon(1e-14));
  CHECK(r.regime == CycleCase::kEngine);
  REQUIRE(r.eta.has_value());
  CHECK(*r.eta == Approx(0.5).epsilon(1e-15));
  CHECK(r.eta_carnot == 0.75);
}

TEST_CASE("run_cycle trivial cycles") {
  SUBCASE("equal tanh arguments") {
    const CycleResult r = run_cycle(make_spec(2, 0, 2, 1, 0, 1));
    CHECK(r.q_h == 0.0);
    CHECK(r.q_l == 0.0);
    CHECK(r.w == 0.0);
    CHECK(r.regime == CycleCase::kTrivial);
    CHECK_FALSE(r.eta.has_value());
    CHECK_FALSE(r.work_ratio.has_value());
  }
  SUBCASE("identical spectra pass heat straight through") {
    const CycleResult r = run_cycle(make_spec(1.3, 0.4, 3, 1.3, 0.4, 1));
    CHECK(r.q_h > 0.0);
    CHECK(r.q_l == -r.q_h);
    CHECK(r.w == 0.0);
    CHECK(r.regime == CycleCase::kNonEngine);
    CHECK_FALSE(r.eta.has_value());
  }
}

TEST_CASE("run_cycle non-engine exposes only the diagnostic ratio") {
  const CycleResult r = run_cycle(make_spec(2, 0, 1.5, 1, 0, 1));
  CHECK(r.w < 0.0);
  CHECK(r.regime == CycleCase::kNonEngine);
  CHECK_FALSE(r.eta.has_value());
  REQUIRE(r.work_ratio.has_value());
  CHECK(*r.work_ratio == Approx(r.w / r.q_h));
}

TEST_CASE("run_cycle keeps precision when both tanh factors saturate") {
  // e1 = 8 at T_h = 0.25 and e2 = 3 at T_l = 0.1: both tanh arguments > 15.
  const CycleResult r = run_cycle(make_spec(8, 0, 0.25, 3, 0, 0.1));
  CHECK(r.q_h == Approx(-1.2945930262287836e-12).epsilon(1e-12));
  CHECK(r.q_l == Approx(4.854723848357938e-13).epsilon(1e-12));
  CHECK(r.w == Approx(-8.091206413929897e-13).epsilon(1e-12));
}

TEST_CASE("run_cycle rejects invalid specs") {
  CHECK_THROWS_WITH_AS(run_cycle(make_spec(2, 0, 1, 1, 0, 1)),
                       "bath temperatures must satisfy Th > Tl", ConfigError);
  CHECK_THROWS_AS(run_cycle(make_spec(2, 0, 0.5, 1, 0, 1)), ConfigError);
  CHECK_THROWS_AS(run_cycle(make_spec(1, 0, 2, -1, 0, 1)), ConfigError);
  CHECK_THROWS_AS(run_cycle(make_spec(0, 0, 2, 1, 0, 1)), ConfigError);
  CHECK_THROWS_AS(run_cycle(make_spec(1, 0, 2, 1, 0, 0)), ConfigError);
  CHECK_THROWS_AS(run_cycle(make_spec(1, NAN, 2, 1, 0, 1)), ConfigError);
}

TEST_CASE("ferromagnetic cycles run through the same formulas") {
  const CycleResult afm = run_cycle(make_spec(2, 0, 4, 1, 0, 1));
  const CycleResult fm = run_cycle(make_spec(-2, 0, 4, -1, 0, 1));
  // Flipping both couplings maps tanh to -tanh and e to -e: heats are unchanged.
  CHECK(fm.q_h == Approx(afm.q_h).epsilon(1e-15));
  CHECK(fm.q_l == Approx(afm.q_l).epsilon(1e-15));
  CHECK(fm.regime == CycleCase::kEngine);
}

TEST_CASE("first law and stroke composition over random specs") {
  Sampler sampler(21);
  for (int i = 0; i < 1000; ++i) {
    const CycleSpec spec = random_cycle_spec(sampler);
    const CycleResult r = run_cycle(spec);
    const StrokeLedger ledger = trace_strokes(spec);
    CHECK(r.w == r.q_h + r.q_l);
    CHECK(std::abs(r.w - ledger.work_out()) < 1e-12);
    CHECK(std::abs(r.q_h - ledger.heat_hot) < 1e-12);
    CHECK(std::abs(r.q_l - ledger.heat_cold) < 1e-12);
    // Energy bookkeeping over the closed cycle.
    CHECK(std::abs(ledger.heat_hot + ledger.work_on_expand + ledger.heat_cold +
                   ledger.work_on_compress) < 1e-12);
  }
}

TEST_CASE("positive work condition") {
  CHECK(positive_work_condition(make_spec(2, 0, 4, 1, 0, 1)) == PositiveWork::kHolds);
  CHECK(positive_work_condition(make_spec(2, 0, 2, 1, 0, 1)) == PositiveWork::kFails);
  CHECK(positive_work_condition(make_spec(1, 0, 4, 2, 0, 1)) == PositiveWork::kOutOfRegime);
  CHECK(positive_work_condition(make_spec(-2, 0, 4, -1, 0, 1)) == PositiveWork::kOutOfRegime);
  CHECK_THROWS_AS(positive_work_condition(make_spec(2, 0, 1, 1, 0, 2)), ConfigError);
}

TEST_CASE("positive work condition without DM reads Th > Tl * J1/J2") {
  for (double j1 : {1.5, 2.0, 3.0}) {
    for (double th : {1.2, 2.5, 4.0}) {
      const CycleSpec spec = make_spec(j1, 0, th, 1.0, 0, 1.0);
      CHECK((positive_work_condition(spec) == PositiveWork::kHolds) == (th > 1.0 * j1 / 1.0));
    }
  }
}

TEST_CASE("positive work condition agrees with the sign of W in its regime") {
  Sampler sampler(22);
  int checked = 0;
  while (checked < 2000) {
    const double j1 = sampler.uniform(0.1, 5);
    const double d1 = sampler.uniform(-3, 3);
    const double j2 = sampler.uniform(0.1, 5);
    const double d2 = sampler.uniform(-3, 3);
    const double tl = sampler.uniform_left_open(0.05, 3);
    const double th = sampler.uniform_left_open(tl, 5);
    const CycleSpec spec = make_spec(j1, d1, th, j2, d2, tl);
    if (!(th > tl)) continue;
    const PositiveWork cond = positive_work_condition(spec);
    if (cond == PositiveWork::kOutOfRegime) continue;
    ++checked;
    const double w = run_cycle(spec).w;
    if (std::abs(w) > 1e-12) CHECK((cond == PositiveWork::kHolds) == (w > 0.0));
  }
}

TEST_CASE("boundary e1/Th = e2/Tl gives W = 0") {
  // e1 = 3, e2 = 1.2, T_l = 0.8 -> T_h = 2
  const CycleResult r = run_cycle(make_spec(3, 0, 2.0, 1.2, 0, 0.8));
  CHECK(std::abs(r.w) <= 1e-12);
}

TEST_CASE("efficiency") {
  CHECK(efficiency(make_spec(2, 0, 4, 1, 0, 1)) == 0.5);
  CHECK(efficiency(make_spec(1, std::sqrt(3.0), 4, 1, 0, 1)) == Approx(0.5).epsilon(1e-15));
  CHECK(efficiency(make_spec(1.7, 0.3, 4, 1.7, 0.3, 1)) == 0.0);
  CHECK_THROWS_AS(efficiency(make_spec(0, 0, 4, 1, 0, 1)), DomainError);
}

TEST_CASE("efficiency does not depend on the bath temperatures") {
  Sampler sampler(23);
  for (int i = 0; i < 200; ++i) {
    CycleSpec spec = random_cycle_spec(sampler);
    const double eta = efficiency(spec);
    spec.hot.temperature = sampler.uniform(3, 10);
    spec.cold.temperature = sampler.uniform(0.01, 2);
    CHECK(efficiency(spec) == eta);
  }
}

TEST_CASE("engine efficiency equals W/Q_h and the gap ratio") {
  Sampler sampler(24);
  int engines = 0;
  for (int i = 0; i < 2000; ++i) {
    const CycleSpec spec = random_cycle_spec(sampler);
    const CycleResult r = run_cycle(spec);
    if (r.regime != CycleCase::kEngine) continue;
    ++engines;
    CHECK(*r.eta == Approx(efficiency(spec)).epsilon(1e-13));
    CHECK(*r.eta == Approx(r.w / r.q_h).epsilon(1e-9));
    CHECK(*r.eta < r.eta_carnot);
  }
  CHECK(engines > 100);
}

TEST_CASE("carnot efficiency") {
  CHECK(carnot_efficiency(2, 1) == 0.5);
  CHECK(carnot_efficiency(4, 1) == 0.75);
  CHECK(carnot_efficiency(1.5, 1.5) == 0.0);
  CHECK_THROWS_AS(carnot_efficiency(1, 2), ConfigError);
  CHECK_THROWS_AS(carnot_efficiency(1, 0), ConfigError);
}

TEST_CASE("classify_cycle buckets") {
  CHECK(classify_cycle(0.0, 0.0, 0.0) == CycleCase::kTrivial);
  CHECK(classify_cycle(1e-13, -1e-13, 0.0) == CycleCase::kTrivial);
  CHECK(classify_cycle(2.0, -1.0, 1.0) == CycleCase::kEngine);
  CHECK(classify_cycle(1.0, -2.0, -1.0) == CycleCase::kNonEngine);
  CHECK(classify_cycle(-1.0, 2.0, 1.0) == CycleCase::kColdBathDriven);
  CHECK(classify_cycle(1.0, 2.0, 3.0) == CycleCase::kBothAbsorb);
}

TEST_CASE("positive-work cycles are always hot-bath driven engines") {
  Sampler sampler(25);
  for (int i = 0; i < 5000; ++i) {
    const CycleResult r = run_cycle(random_cycle_spec(sampler));
    if (r.w > 0.0 && r.regime != CycleCase::kTrivial) {
      CHECK(r.regime == CycleCase::kEngine);
      CHECK(r.q_h > -r.q_l);
      CHECK(-r.q_l > 0.0);
    }
  }
}
