// Prints vol_{n,alpha}(x) for a small box together with its germ expansion.

#include <iostream>

#include "padicvol/padicvol.hpp"

int main(int argc, char** argv) {
  using namespace padicvol;
  const int n = argc > 1 ? std::stoi(argv[1]) : 2;
  const int alpha = argc > 2 ? std::stoi(argv[2]) : 1;

  VolumeTable table;
  for (int x = 0; x <= 5; ++x) std::cout << "x=" << x << "  " << table(n, alpha, x).to_string() << '\n';

  const GermExpansion g = germ_of_vol(n, alpha);
  std::cout << "germ, valid from x=" << g.validity_from() << '\n';
  for (const auto& [k, c] : g.terms())
    std::cout << "  q^(" << k.first << "x) x^" << k.second << " : " << c.to_string() << '\n';
  std::cout << "value at q=3, x=5: " << g.eval(5).evaluate(3).get_str() << '\n';
}
