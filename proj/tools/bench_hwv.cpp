#include <chrono>
#include <cstdlib>
#include <iostream>

#include "ckp/hwv.hpp"

using namespace ckp;

namespace {

double time_ms(long max_d2, bool parallel) {
  auto t0 = std::chrono::steady_clock::now();
  auto reports = hwv_all(max_d2, parallel);
  auto t1 = std::chrono::steady_clock::now();
  long total = 0;
  for (const auto& r : reports) total += r.dimension;
  std::cerr << "  (total dimension " << total << ")\n";
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long max_d2 = argc > 1 ? std::atol(argv[1]) : 18;
  std::cout << "highest weight solve up to doubled degree " << max_d2 << "\n";
  double serial = time_ms(max_d2, false);
  std::cout << "serial:   " << serial << " ms\n";
  double parallel = time_ms(max_d2, true);
  std::cout << "parallel: " << parallel << " ms\n";
  std::cout << "speedup:  " << serial / parallel << "x\n";

  auto a = hwv_all(max_d2, false);
  auto b = hwv_all(max_d2, true);
  bool same = a.size() == b.size();
  for (size_t i = 0; same && i < a.size(); ++i)
    same = a[i].dimension == b[i].dimension && a[i].charges == b[i].charges && a[i].basis == b[i].basis;
  std::cout << (same ? "results identical\n" : "RESULTS DIFFER\n");
  return same ? 0 : 1;
}
