// Compares the serial reference batch runner against the OpenMP one on the
// shipped fixtures and checks that both produce identical results.
#include <chrono>
#include <functional>
#include <iostream>

#include "tamedgk/fixtures.hpp"
#include "tamedgk/parse.hpp"
#include "tamedgk/verify.hpp"

#ifdef TGK_HAVE_OPENMP
#include <omp.h>
#endif

using namespace tgk;

namespace {

double run_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int count = argc > 1 ? std::atoi(argv[1]) : 48;
  std::cout << "identity batch, " << count << " random packages per fixture\n";
#ifdef TGK_HAVE_OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp not available; both columns run serially\n";
#endif

  for (const FixtureFile& f : builtin_examples()) {
    StructurePackage pkg = parse_structure_file(f.text);
    const Form& omega = pkg.forms.at("Omega");
    const RatMatrix& j = pkg.endomorphisms.at("J");

    std::vector<verify::BatchItem> serial, parallel;
    double t_serial = run_ms([&] {
      serial = verify::run_identity_batch(pkg.algebra, omega, j, 0x5eed, count, verify::Execution::serial);
    });
    double t_parallel = run_ms([&] {
      parallel = verify::run_identity_batch(pkg.algebra, omega, j, 0x5eed, count, verify::Execution::openmp);
    });

    bool identical = serial == parallel;
    bool all_pass = true;
    for (const auto& item : serial) all_pass = all_pass && item.pass;

    std::cout << "  " << f.name << ": serial " << t_serial << " ms, openmp " << t_parallel << " ms, speedup "
              << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x, results "
              << (identical ? "identical" : "DIFFER") << ", checks " << (all_pass ? "pass" : "FAIL") << "\n";
    if (!identical || !all_pass) return 1;
  }
  return 0;
}
