#include <iostream>

#include "decimation/decimation.hpp"

int main() {
  using namespace decimation;

  const auto g = Group::parse("Z3xZ4");
  const auto report = count_decimation_classes(g, 5);
  std::cout << report.group << ", density " << report.delta << ": " << report.necklaces << " necklaces, "
            << report.decimation_classes << " decimation classes\n";
  for (const auto& row : report.per_subgroup)
    std::cout << "  |H| = " << row.order() << "  N = " << row.n << "  classes = " << row.num_d << '\n';

  // The multiplier group of a single vector.
  const auto z7 = Group::parse("Z7");
  const auto I = GroupMultiset::parse(z7, "1,1,0,1,0,0,0");
  const auto h = multiplier_group(I);
  std::cout << "multipliers of {0,1,3} in Z7:";
  for (auto t : h.elements()) std::cout << ' ' << t;
  std::cout << '\n';
}
