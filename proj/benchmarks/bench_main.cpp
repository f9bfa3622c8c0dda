// Standalone micro-benchmarks for the transform engine.  Prints one CSV table
// to stdout:
//
//   op,detail,n,m,milliseconds,per_point_ns
//
// Sizes stay modest so the full sweep finishes in a few seconds; use the
// `clifft bench` subcommand for the large fast-vs-reference comparison.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "clifft/gft.hpp"
#include "clifft/grid.hpp"
#include "clifft/mustard.hpp"
#include "clifft/root_parse.hpp"

namespace {

using namespace clifft;

double time_ms(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void row(const std::string& op, const std::string& detail, int n, int m, double ms, size_t points) {
  std::cout << op << ',' << detail << ',' << n << ',' << m << ',' << ms << ','
            << ms * 1e6 / double(points) << '\n';
}

GftPlan basis_plan(const GridSpec& grid) {
  std::vector<RootOfMinusOne> roots;
  for (int k = 1; k <= grid.m; ++k) roots.push_back(parse_root("e" + std::to_string(k), grid.m));
  const int split = (grid.m + 1) / 2;
  return make_plan(grid, {roots.begin(), roots.begin() + split}, {roots.begin() + split, roots.end()});
}

}  // namespace

int main() {
  std::cout << "op,detail,n,m,milliseconds,per_point_ns\n";

  for (int m : {2, 3}) {
    for (int n : {16, 32, 64}) {
      const GridSpec g = make_grid(m, GridMode::periodic, std::vector<int>(size_t(m), n));
      const GftPlan plan = basis_plan(g);
      const MultivectorField f = random_field(g, 1, true);
      const MultivectorField h = random_field(g, 2, true);
      (void)gft_forward(plan, f);  // build the FFT plans before timing

      const int reps = n <= 32 ? 8 : 2;
      row("gft_forward", "fast", n, m, time_ms([&] { (void)gft_forward(plan, f); }, reps),
          g.points());
      row("gft_forward", "reference", n, m,
          time_ms([&] { (void)gft_forward(plan, f, Path::reference); }, 1), g.points());
      row("pointwise_product", "geometric", n, m,
          time_ms([&] { (void)pointwise_product(f, h); }, reps), g.points());
      row("mustard", "spectral", n, m,
          time_ms([&] { (void)mustard_convolve_spectral(plan, f, h); }, reps), g.points());
      if (n <= 32)
        row("mustard", "direct", n, m,
            time_ms([&] { (void)mustard_convolve_direct(plan, f, h); }, 1), g.points());
    }
  }
  return 0;
}
