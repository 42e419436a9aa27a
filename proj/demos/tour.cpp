// A short tour: statistics on a word, the tree behind it, and the exact
// distribution its family follows.

#include <iostream>

#include "qstirling/qstirling.hpp"

using namespace qstirling;

int main() {
  MultisetWord w = parse_word("4,1,1,4,6,6,3,7,7,5,8,8,5,2,2,3");
  StatTriple s = statistics(w);
  std::cout << "word        " << format_word(w) << '\n'
            << "statistics  asc " << s.asc << ", des " << s.des << ", plat " << s.plat << '\n';

  CompartmentedTree t = phi_inv(w);
  PlaneTree plane = to_plane(t);
  std::cout << "tree        " << format_plane(plane) << '\n'
            << "transport   casc " << casc_tree(t) << ", cdes " << cdes_tree(t) << ", leaves "
            << leaves(plane) << '\n';

  std::cout << "cayley      " << format_cayley(to_cayley(forget_order(plane))) << '\n';

  std::cout << '\n';
  for (long n = 1; n <= 5; ++n)
    std::cout << "Q" << n << "(t) = " << format_poly(quasi_stirling_poly(n)) << '\n';

  MomentReport m = moment_report(quasi_stirling_poly(8));
  std::cout << "\ndescents at n = 8: mean " << m.mean << ", variance " << m.variance << '\n';
  return 0;
}
