// Minimal c_2(J_1(L)) over ample L on the Hirzebruch surfaces F_0..F_5, using the
// library directly.

#include <iostream>

#include "toricdisc/toricdisc.hpp"

int main() {
  using namespace toricdisc;
  for (long long r = 0; r <= 5; ++r) {
    const Fan fan = projective_bundle_over_P(2, 1, {r}).fan;
    IntersectionOracle oracle(fan);
    const PicBasis basis = picard_basis(fan);
    const auto cone = nef_generators(oracle, basis);
    const auto best = min_topchern_over_A(oracle, basis, cone);
    std::cout << "F_" << r << ": " << best.minimum << " at";
    for (const auto& v : best.argmin) std::cout << " " << format_vector(v.coords);
    std::cout << "\n";
  }
}
