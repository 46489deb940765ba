// Serial vs OpenMP timing of the data-parallel kernels.  Results must match
// bitwise; this just reports wall times and speedups.

#include <chrono>
#include <cstdio>
#include <string>

#include "octg2/bch.hpp"
#include "octg2/g2.hpp"
#include "octg2/octonion.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace octg2;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(F&& f) {
  const auto t0 = Clock::now();
  f();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx   identical=%s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms, identical ? "yes" : "NO");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel paths run serially\n");
#endif

  {
    Oct w;
    const double wv[8] = {1, 1, 2.3, 1, 1, 1, 1, 1};
    for (int i = 0; i < 8; ++i) w.c[i] = wv[i];
    TorusGrid grid;
    grid.nu = 220;
    grid.nv = 220;
    const std::vector<int> slots = {2, 4, 6};
    PointCloud a, b;
    const double ts = time_ms([&] {
      a = torus_orbit_serial(cacciatori(5), cacciatori(11), w, grid, MulOrder::kAB, slots);
    });
    const double tp =
        time_ms([&] { a = torus_orbit(cacciatori(5), cacciatori(11), w, grid, MulOrder::kAB, slots); });
    b = torus_orbit_serial(cacciatori(5), cacciatori(11), w, grid, MulOrder::kAB, slots);
    report("torus grid 220x220", ts, tp, a.data == b.data);
  }

  {
    const auto samples = sample_g2(3000, cover_g2(), 7);
    const auto w = shape_probe_w();
    const std::vector<int> slots = {2, 5, 7};
    PointCloud a, b;
    const double ts = time_ms([&] { a = sample_cloud_serial(samples, w, slots); });
    const double tp = time_ms([&] { b = sample_cloud(samples, w, slots); });
    report("sample cloud 3000", ts, tp, a.data == b.data);
  }

  {
    const Mat g = g_param(sample_g2(1, cover_g2(), 7)[0]);
    const auto w = shape_probe_w();
    const std::vector<int> slots = {2, 5, 7};
    PointCloud a, b;
    const double ts = time_ms([&] { a = power_orbit_serial(g, w, 20000, slots); });
    const double tp = time_ms([&] { b = power_orbit(g, w, 20000, slots); });
    report("power orbit n=20000", ts, tp, a.data == b.data);
  }

  {
    BchSeries a, b;
    const double ts = time_ms([&] { a = bch_terms_serial(10); });
    const double tp = time_ms([&] { b = bch_terms(10); });
    bool same = a.words.size() == b.words.size();
    if (same)
      for (size_t i = 0; i < a.words.size(); ++i)
        same = same && a.words[i].letters == b.words[i].letters && a.words[i].coeff == b.words[i].coeff;
    report("bch terms order 10", ts, tp, same);
  }

  return 0;
}
