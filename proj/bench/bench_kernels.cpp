// Wall-clock comparison of the serial and OpenMP product kernels and of the
// serial and parallel check runners. Not a correctness gate; the test suite
// asserts kernel agreement separately.

#include <chrono>
#include <cstdio>
#include <string>

#include "gaproj/checks.hpp"
#include "gaproj/kernels.hpp"
#include "gaproj/random.hpp"

using namespace gaproj;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench_products(int dim, int rounds) {
  Signature sig(dim, 0, 0);
  Rng rng(2024);
  Multivector x = random_multivector(sig, rng, 3);
  Multivector y = random_multivector(sig, rng, 3);

  Clock::time_point t0 = Clock::now();
  Multivector serial = kernels::product_serial(x, y, ProductKind::Geometric);
  for (int i = 1; i < rounds; ++i)
    serial = kernels::product_serial(x, y, ProductKind::Geometric);
  double serial_s = seconds_since(t0) / rounds;

  t0 = Clock::now();
  Multivector parallel =
      kernels::product_parallel(x, y, ProductKind::Geometric);
  for (int i = 1; i < rounds; ++i)
    parallel = kernels::product_parallel(x, y, ProductKind::Geometric);
  double parallel_s = seconds_since(t0) / rounds;

  std::printf("geometric product  dim %-2d  serial %8.4f ms  parallel %8.4f ms"
              "  speedup %.2fx  agree %s\n",
              dim, serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s,
              serial == parallel ? "yes" : "NO");
}

void bench_check(const char* name, const Signature& sig, std::uint64_t trials) {
  Clock::time_point t0 = Clock::now();
  CheckReport serial =
      run_check(name, sig, std::nullopt, trials, 5, RunMode::Serial);
  double serial_s = seconds_since(t0);

  t0 = Clock::now();
  CheckReport parallel =
      run_check(name, sig, std::nullopt, trials, 5, RunMode::Parallel);
  double parallel_s = seconds_since(t0);

  std::printf("check %-10s  %-5s  %4llu trials  serial %7.3f s  parallel"
              " %7.3f s  speedup %.2fx  identical %s\n",
              name, sig.str().c_str(),
              static_cast<unsigned long long>(trials), serial_s, parallel_s,
              serial_s / parallel_s,
              to_json(serial) == to_json(parallel) ? "yes" : "NO");
}

}  // namespace

int main() {
  for (int dim : {6, 8, 9, 10}) bench_products(dim, 5);
  bench_check("ftopo", Signature(3, 0, 0), 400);
  bench_check("ftopo", Signature(4, 0, 0), 200);
  bench_check("lemma", Signature(4, 0, 0), 2000);
  return 0;
}
