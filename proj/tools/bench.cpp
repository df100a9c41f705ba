#include <chrono>
#include <cstdio>
#include <functional>

#include "linvol/language.hpp"
#include "linvol/verify.hpp"

using namespace linvol;

namespace {

LinearInvolution golden() {
  const FieldElem s5 = FieldElem::sqrtOf(5);
  const FieldElem lb = (FieldElem(3) - s5) / FieldElem(2);
  GenPerm p;
  p.top = {{0, true}, {1, true}, {1, false}};
  p.bottom = {{2, true}, {2, false}, {0, false}};
  return LinearInvolution::build(p, {s5 - FieldElem(2), lb, lb}, kCoherentFlips);
}

// Nonorientable 4-letter instance with rational data, heavy enough to time.
LinearInvolution rationalK4() {
  GenPerm p;
  p.top = {{0, true}, {1, true}, {0, false}, {2, true}};
  p.bottom = {{2, false}, {3, false}, {1, false}, {3, true}};
  std::vector<FieldElem> len = {FieldElem::rational(1556, 10007), FieldElem::rational(3067, 10007),
                                FieldElem::rational(3828, 10007),
                                FieldElem::rational(1556, 10007)};
  return LinearInvolution::build(p, std::move(len), kCoherentFlips);
}

double ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-36s %10.1f %12.1f %8.2fx   %s\n", name, serial, parallel, serial / parallel,
              agree ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", hardwareThreads());
  std::printf("%-36s %10s %12s %9s   %s\n", "kernel", "serial_ms", "parallel_ms", "speedup",
              "agree");

  {
    const LinearInvolution t = golden();
    LanguageSlice a, b;
    const double s = ms([&] { a = language(t, 16, Exec::Serial); });
    const double p = ms([&] { b = language(t, 16, Exec::Parallel); });
    row("language enumeration (len 16)", s, p, a.words == b.words);
  }
  {
    const LinearInvolution t = golden();
    SweepOptions serialOpts{8, Exec::Serial, {}};
    SweepOptions parallelOpts{8, Exec::Parallel, {}};
    std::vector<CheckResult> a, b;
    const double s = ms([&] { a = verifyMixedBasisSweep(t, serialOpts); });
    const double p = ms([&] { b = verifyMixedBasisSweep(t, parallelOpts); });
    bool agree = a.size() == b.size();
    for (size_t i = 0; agree && i < a.size(); ++i)
      agree = a[i].status == b[i].status && a[i].anchor == b[i].anchor;
    row("mixed-basis sweep (golden, len 8)", s, p, agree);
  }
  {
    const LinearInvolution t = rationalK4();
    SweepOptions serialOpts{7, Exec::Serial, {}};
    SweepOptions parallelOpts{7, Exec::Parallel, {}};
    std::vector<CheckResult> a, b;
    const double s = ms([&] { a = verifyCardinalitySweep(t, serialOpts); });
    const double p = ms([&] { b = verifyCardinalitySweep(t, parallelOpts); });
    bool agree = a.size() == b.size();
    for (size_t i = 0; agree && i < a.size(); ++i)
      agree = a[i].status == b[i].status && a[i].anchor == b[i].anchor;
    row("cardinality sweep (k=4, len 7)", s, p, agree);
  }
  return 0;
}
