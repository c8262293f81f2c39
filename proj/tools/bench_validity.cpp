// Times the exhaustive validity sweep, serial reference vs the parallel
// kernel, on formulas that are valid on their frame (so both must walk the
// whole valuation space and neither gets an early exit).

#include <chrono>
#include <cstdio>

#include "achron/corpus.hpp"
#include "achron/semantics.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn&& fn) {
  auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void bench(const char* name, const achron::Frame& f, const achron::Formula& phi) {
  bool serial_valid = false, parallel_valid = false;
  double serial_ms = time_ms([&] {
    serial_valid = achron::valid_on_frame_serial(f, phi, achron::kDefaultBudget).valid;
  });
  double parallel_ms = time_ms([&] {
    parallel_valid = achron::valid_on_frame(f, phi, achron::kDefaultBudget).valid;
  });
  std::size_t bits = achron::atoms_of(phi).size() * f.world_count();
  std::printf("%-24s %10llu %12.1f %12.1f %9.2fx  %s\n", name,
              static_cast<unsigned long long>(std::uint64_t(1) << bits), serial_ms,
              parallel_ms, serial_ms / parallel_ms,
              serial_valid == parallel_valid ? (serial_valid ? "valid" : "invalid")
                                             : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("%-24s %10s %12s %12s %9s\n", "workload", "valuations", "serial ms",
              "parallel ms", "speedup");

  achron::FamilySpec g23;
  g23.family = achron::Family::GjN;
  g23.j = 2;
  g23.N = 3;
  achron::Frame g = achron::gen_frame(g23);

  achron::FamilySpec rake3;
  rake3.family = achron::Family::LawnRake;
  rake3.N = 3;
  achron::Frame rake = achron::gen_frame(rake3);

  bench("psi0-n1 on G2-3", g, achron::psi(0, 1));
  bench("u4 on lawn-rake-3", rake, achron::u_axiom(4));
  bench("psi0-n2 on G2-3", g, achron::psi(0, 2));
  return 0;
}
