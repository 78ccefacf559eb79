// Prints the balanced-sign lower bound next to the n + 1 reference for a few
// dimensions at a fixed radius.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>

#include "spherechi/fw_bound.hpp"

int main() {
  using namespace spherechi;
  const double r = 0.65;
  std::cout << "r = " << r << ", gamma(r) = " << gamma_of_r(r) << "\n\n";
  std::cout << std::setw(6) << "n" << std::setw(6) << "p" << std::setw(14) << "ln bound"
            << std::setw(14) << "ln(n+1)" << "  exceeds\n";
  for (std::int64_t n : {50, 100, 200, 400, 800, 1600}) {
    const FWInstance inst = derive_instance(n, r);
    if (inst.valid != FWStatus::Ok) {
      std::cout << std::setw(6) << n << "  " << to_string(inst.valid) << '\n';
      continue;
    }
    const FWBoundReport rep = lower_bound(inst);
    std::cout << std::setw(6) << n << std::setw(6) << inst.p << std::setw(14) << std::fixed
              << std::setprecision(4) << rep.bound.lower_bound.log_value << std::setw(14)
              << std::log(static_cast<double>(n + 1)) << "  "
              << (rep.bound.exceeds_lovasz ? "yes" : "no") << '\n';
  }
}
