// Point counts of Quot schemes on a curve given as a JSON spec, checked
// against brute force where the curve has an explicit equation.
#include "quotmotive/quotmotive.hpp"

#include <iostream>

using namespace quotmotive;

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: curve_counts <curve.json> <q>\n";
    return 2;
  }
  try {
    const unsigned long long q = std::stoull(argv[2]);
    const CurveSpec curve = oracle::with_zeta_numerator(load_curve_spec(argv[1]), q);

    std::cout << "zeta numerator:";
    for (const auto& c : *curve.zeta_numerator) {
      std::cout << ' ' << c;
    }
    std::cout << "\n\nm\t#Sym^m";
    if (curve.equation) {
      std::cout << "\tbrute force";
    }
    std::cout << '\n';
    for (unsigned m = 0; m <= 4; ++m) {
      std::cout << m << '\t' << motive::sym_point_count(curve, q, m);
      if (curve.equation) {
        std::cout << '\t' << oracle::sym_point_count_bruteforce(*curve.equation, q, m);
      }
      std::cout << '\n';
    }

    std::cout << "\nn\tr=1\tr=2\tr=3\n";
    for (unsigned n = 0; n <= 4; ++n) {
      std::cout << n;
      for (unsigned r = 1; r <= 3; ++r) {
        std::cout << '\t' << motive::quot_point_count(n, r, curve, q);
      }
      std::cout << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
