// Benchmark: the production row-reduction kernel (integer-scaled updates,
// OpenMP-parallel rows) against the serial rational reference kept for
// cross-checking.  Shapes mirror the matrices the resolution oracle builds:
// dense square multiplication maps and wide/tall sparse boundary maps.
//
//   rref-bench [--reps K] [--seed S] [--scale X]
//
// Every timed pair is also compared entry-for-entry; a mismatch aborts the
// run, so the benchmark doubles as an agreement check on large inputs.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apolar/matrix.hpp"
#include "apolar/random_inputs.hpp"
#include "apolar/rref.hpp"

using namespace apolar;
using clk = std::chrono::steady_clock;

namespace {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                     int fill_percent) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng.int_in(1, 100) <= fill_percent)
        m.at(i, j) = Rational(rng.int_in(-9, 9));
  return m;
}

double time_ms(const std::vector<Matrix>& inputs,
               EchelonResult (*f)(const Matrix&),
               std::vector<EchelonResult>& out) {
  out.clear();
  auto t0 = clk::now();
  for (const Matrix& m : inputs) out.push_back(f(m));
  auto t1 = clk::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Scenario {
  const char* name;
  std::size_t rows, cols;
  int fill_percent;
};

}  // namespace

int main(int argc, char** argv) {
  int reps = 3;
  std::uint64_t seed = 1;
  double scale = 1.0;

  CLI::App app{"row-reduction benchmark: parallel kernel vs serial reference"};
  app.add_option("--reps", reps, "matrices per scenario")->default_val(3);
  app.add_option("--seed", seed, "RNG seed")->default_val(1);
  app.add_option("--scale", scale, "multiply all matrix dimensions")
      ->default_val(1.0);
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("kernel: OpenMP enabled, max threads = %d\n",
              omp_get_max_threads());
#else
  std::printf("kernel: compiled without OpenMP (serial)\n");
#endif
  std::printf("reps per scenario: %d, seed: %llu, scale: %.2f\n\n", reps,
              static_cast<unsigned long long>(seed), scale);

  const Scenario scenarios[] = {
      {"dense square  ", 40, 40, 100},
      {"dense wide    ", 32, 64, 100},
      {"sparse wide   ", 80, 120, 20},
      {"sparse tall   ", 120, 80, 20},
  };

  std::printf("%-14s %10s %10s %14s %14s %8s\n", "scenario", "rows", "cols",
              "kernel (ms)", "reference (ms)", "ratio");

  bool all_agree = true;
  for (const Scenario& sc : scenarios) {
    auto rows = static_cast<std::size_t>(static_cast<double>(sc.rows) * scale);
    auto cols = static_cast<std::size_t>(static_cast<double>(sc.cols) * scale);
    Rng rng(seed);
    std::vector<Matrix> inputs;
    for (int r = 0; r < reps; ++r)
      inputs.push_back(random_matrix(rng, rows, cols, sc.fill_percent));

    std::vector<EchelonResult> fast, ref;
    double t_fast = time_ms(inputs, rref, fast);
    double t_ref = time_ms(inputs, rref_reference, ref);

    bool agree = true;
    for (int r = 0; r < reps; ++r)
      agree = agree && fast[r].r == ref[r].r && fast[r].pivots == ref[r].pivots;
    all_agree = all_agree && agree;

    std::printf("%-14s %10zu %10zu %14.2f %14.2f %7.2fx%s\n", sc.name, rows,
                cols, t_fast, t_ref, t_ref / t_fast,
                agree ? "" : "  MISMATCH");
  }

  if (!all_agree) {
    std::fprintf(stderr, "\nerror: kernel and reference disagree\n");
    return 1;
  }
  std::printf("\nall outputs agree exactly\n");
  return 0;
}
