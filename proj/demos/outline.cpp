// Outline of a noncrossing partition, and the Gram entries on both sides.

#include <iostream>

#include "pcat/pcat.hpp"

int main() {
  using namespace pcat;
  const auto p = parse_partition("3|4 : [1,2,3,5,6][4][7]");
  const auto f = fatten(p);
  std::cout << "partition " << serialize(p) << "\n"
            << "outline   " << serialize(f.pairing) << "\n"
            << "scalar    " << f.scalar << "\n";

  const int n = 2;
  const auto at_n2 = inner_product(realize(p, n * n), realize(p, n * n));
  const auto raw = inner_product(realize(f.pairing, n), realize(f.pairing, n));
  const auto s = (f.scalar * f.scalar).evaluate(n);
  std::cout << "<T_p,T_p> at N=" << n * n << ": " << to_string(at_n2) << "\n"
            << "scaled outline norm at n=" << n << ": " << to_string(s.rational * raw) << "\n";
}
