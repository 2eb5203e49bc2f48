// Builds a profile by hand and compares its Cartan sum with the germ.

#include <iostream>

#include "padicvol/padicvol.hpp"

int main() {
  using namespace padicvol;
  const std::optional<int> inf;

  OrbitalProfile phi(2, 1);
  phi.set({inf, inf}, {inf, inf}, 1);
  phi.set({inf, inf}, {-1, inf}, Rational(1, 2));
  phi.set({-1, inf}, {inf, inf}, -3);

  const GermExpansion g = orbital_germ(phi);
  for (const auto& [cls, c] : orbital_coeffs(phi).coeffs)
    std::cout << "class (" << cls[0] << "," << cls[1] << "," << cls[2] << ") " << c.to_string() << '\n';
  for (int x = g.validity_from(); x < g.validity_from() + 4; ++x)
    std::cout << "x=" << x << "  direct=" << orbital_direct(phi, x).to_string()
              << "  germ=" << g.eval(x).to_string() << '\n';
  std::cout << "linear term holds: " << std::boolalpha << check_linear_term(phi) << '\n';
}
