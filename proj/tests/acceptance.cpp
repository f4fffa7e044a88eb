// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "knotcx/bounds.hpp"
#include "knotcx/rho.hpp"
#include "knotcx/signature.hpp"
#include "knotcx/verify.hpp"
#include "support.hpp"

using namespace knotcx;
using verify::CheckResult;

namespace {

// T(2, 2n+1): Alexander roots at exp(2 pi i (2m+1)/(2(2n+1))), m != n. The
// signature jumps by 2 across each root and takes the midpoint on it.
long torus_jump_oracle(long n, const Rational& x) {
  const Rational y = x <= Rational(1, 2) ? x : 1 - x;
  const long q = 2 * n + 1;
  long s = 0;
  for (long m = 0; m < n; ++m) {
    const Rational theta = make_rational(2 * m + 1, 2 * q);
    if (theta < y) s += 2;
    else if (theta == y) s += 1;
  }
  return s;
}

Rational torus_avg_oracle(long n, long d) {
  long total = 0;
  for (long k = 1; k < d; ++k) total += torus_jump_oracle(n, make_rational(k, d));
  return make_rational(total, d);
}

CheckResult criterion_litherland() {
  auto r = verify::litherland(30, 60);
  // the closed form itself against the jump count
  for (long n = 1; n <= 30; ++n)
    for (long d = 2; d <= 60; ++d)
      for (long k = 1; 2 * k <= d; ++k) {
        const Rational x = make_rational(k, d);
        const long q = 2 * n + 1;
        bool root = false;
        for (long m = 0; m < n && !root; ++m) root = make_rational(2 * m + 1, 2 * q) == x;
        if (root) continue;
        if (litherland_torus_signature(n, x) != torus_jump_oracle(n, x))
          r.fail_with("closed form disagrees with the jump count at n=" + std::to_string(n) + " x=" + to_string(x));
      }
  return r;
}

CheckResult criterion_gilmer() { return verify::gilmer(30, 10); }

CheckResult criterion_averages() {
  auto r = verify::averages(30, 40);
  for (long n = 1; n <= 30; ++n) {
    const SignatureFunction sf(torus_knot_seifert(n));
    for (long d = 2; d <= 40; ++d) {
      ++r.cases;
      if (sf.average(d).value != torus_avg_oracle(n, d))
        r.fail_with("torus average n=" + std::to_string(n) + " d=" + std::to_string(d) + " disagrees with the jump count");
    }
  }
  return r;
}

CheckResult criterion_slice_genus() { return verify::slice_genus(30, 60); }

CheckResult criterion_published_values() { return verify::published_values(200, 200); }

CheckResult criterion_bound_consistency() { return verify::bounds(10000); }

CheckResult criterion_properties() {
  CheckResult r("random matrix properties");
  std::mt19937_64 rng(20260417);
  constexpr int trials = 200;
  struct Case {
    SeifertMatrix a;
    long d;
  };
  std::vector<Case> cases;
  for (int t = 0; t < trials; ++t) {
    auto rk = testing::random_knot(rng, 12);
    const long d = std::uniform_int_distribution<long>(2, 60)(rng);
    cases.push_back({std::move(rk.a), d});
  }
  const auto parts = verify::parallel_map<CheckResult>(cases.size(), [&](std::size_t i) {
    CheckResult part;
    const auto& [a, d] = cases[i];
    const SignatureFunction sf(a), sm(mirror(a));
    auto where = [&](long k) { return "matrix " + std::to_string(i) + " (size " + std::to_string(a.size()) + ") at " +
                                      std::to_string(k) + "/" + std::to_string(d); };
    for (long k = 0; k < d; ++k) {
      const UnitRoot w(k, d);
      const auto t = sf.inertia(w);
      ++part.cases;
      if (t.size() != a.size()) part.fail_with(where(k) + ": inertia does not sum to the size");
      if (sf.inertia(w.conjugate()) != t) part.fail_with(where(k) + ": conjugate root gives a different inertia");
      if (sm(w).value != -t.signature()) part.fail_with(where(k) + ": mirror does not negate");
      if (k != 0 && (t.zero > 0) != sf.alexander(w).is_zero())
        part.fail_with(where(k) + ": degeneracy and Alexander zero disagree");
      const auto f = sf.inertia(w, Mode::floating);
      if (f.certified && f != t) part.fail_with(where(k) + ": certified float inertia differs from exact");
    }
    return part;
  });
  for (const auto& p : parts) verify::merge_into(r, p);
  if (cases.size() < 200) r.fail_with("fewer than 200 matrices");
  return r;
}

CheckResult criterion_trefoil() { return verify::trefoil_end_to_end(); }

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    std::function<CheckResult()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> all = {
      {"1 litherland oracle, n<=30, d<=60", criterion_litherland, 120.0},
      {"2 gilmer closed form = level average", criterion_gilmer, 0},
      {"3 averaged signature bounds", criterion_averages, 0},
      {"4 slice genus signature bound", criterion_slice_genus, 0},
      {"5 published check values", criterion_published_values, 0},
      {"6 bound consistency, n<=10^4", criterion_bound_consistency, 0},
      {"7 property suites, 200 random matrices", criterion_properties, 0},
      {"8 trefoil end to end", criterion_trefoil, 0},
  };
  bool ok = true;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail_with(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds)
      r.fail_with("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s");
    ok = ok && r.passed;
    std::printf("%s  %s  [%zu cases, %.1f s]%s%s\n", r.passed ? "PASS" : "FAIL", c.label, r.cases, secs,
                r.passed ? "" : "  ", r.detail.c_str());
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
