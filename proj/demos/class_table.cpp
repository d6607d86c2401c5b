// Classes and Poincare polynomials of Quot schemes for small n and r.
#include "quotmotive/quotmotive.hpp"

#include <cstdlib>
#include <iostream>

using namespace quotmotive;

int main(int argc, char** argv) {
  const unsigned max_n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 3;
  const unsigned genus = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 1;

  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned n = 0; n <= max_n; ++n) {
      std::cout << "n=" << n << " r=" << r << "\n  class    " << motive::quot_class(n, r).to_string()
                << "\n  poincare " << motive::poincare_polynomial(n, r, genus).to_string()
                << "\n  euler    " << motive::euler_characteristic(n, r, genus) << '\n';
    }
  }
}
