// Times the serial reference checks against the OpenMP kernels on the worked
// example instances. Usage: braceforge-bench [--p N] [--reps N]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "braceforge/gallery.hpp"
#include "braceforge/reference.hpp"

using namespace braceforge;

namespace {

template <class F>
double time_ms(unsigned reps, F&& f) {
  double best = 1e300;
  for (unsigned r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.2f %10.2f %8.2fx\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main(int argc, char** argv) {
  unsigned p = 5;
  unsigned reps = 3;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--p") && i + 1 < argc) p = std::stoul(argv[++i]);
    if (!std::strcmp(argv[i], "--reps") && i + 1 < argc) reps = std::stoul(argv[++i]);
  }

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serially\n");
#endif

  const AlphaFamilyInstance alpha = build_alpha_family(p, 1 % p);
  const P5Instance p5 = build_p5_example(3);
  std::printf("alpha family at p=%u (|H| = %zu), p^5 example at p=3 (|G| = %zu)\n\n", p,
              alpha.heisenberg->order(), p5.product->order());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

  {
    GammaFunction gamma = alpha.gamma;
    row("gamma functional equation |H|^2",
        time_ms(reps, [&] { (void)ref::gamma_equation(gamma); }),
        time_ms(reps, [&] { (void)verify_gamma(gamma); }));
  }
  {
    RotaBaxterOperator b = rb_formula_alpha(p, (p + 1) / 2 % p == 0 ? 1 : 0);
    // inversion map exercises the identity everywhere
    for (Elem g = 0; g < alpha.heisenberg->order(); ++g) b.images[g] = alpha.heisenberg->inv(g);
    row("Rota-Baxter identity |H|^2",
        time_ms(reps, [&] { (void)ref::rota_baxter(*alpha.heisenberg, b.images); }),
        time_ms(reps, [&] { (void)verify_rb(b); }));
  }
  row("associativity sweep |H|^3",
      time_ms(reps, [&] { (void)ref::associativity(*alpha.heisenberg); }),
      time_ms(reps, [&] { alpha.heisenberg->validate(); }));
  row("skew-brace identity |G|^3 (p^5)",
      time_ms(reps, [&] { (void)ref::skew_brace(*p5.product, *p5.circle); }),
      time_ms(reps, [&] { (void)verify_skew_brace(*p5.product, *p5.circle); }));
  row("cocycle identity |G|^3 (p^5)",
      time_ms(reps, [&] { (void)ref::cocycle(p5.kappa); }),
      time_ms(reps, [&] { (void)check_cocycle(p5.kappa); }));
  {
    const NonInnerInstance ni = build_noninner_c4_d4();
    row("inner-image search (order 32)",
        time_ms(reps, [&] { (void)ref::inner_image(ni.brace.gamma); }),
        time_ms(reps, [&] { (void)inner_image_check(ni.brace.gamma); }));
  }
  row("center scan (p^5 group)",
      time_ms(reps, [&] { (void)ref::center_members(*p5.product); }),
      time_ms(reps, [&] { (void)center(p5.product); }));
  return 0;
}
