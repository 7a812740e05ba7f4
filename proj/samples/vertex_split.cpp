// Writes the 3-cycle matrix as a convex combination of extreme points of U^3
// and solves each vertex with the inductive constructor.

#include <iostream>

#include "gdecomp/gdecomp.hpp"

int main() {
  using namespace gdecomp;
  const Rational h(1, 2);
  const SymMatrix n3 = SymMatrix::from_rows({{0, h, h}, {h, 0, h}, {h, h, 0}});

  const ConvexCombination c = krein_milman_decompose(n3, Ambient::UM);
  Matrix x(3, 3);
  for (const auto& t : c.terms) {
    std::cout << "weight " << to_string(t.weight) << '\n' << serialize_matrix(t.vertex, Format::Plain);
    const DecompResult part = g_decompose_extreme_inductive(t.vertex);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) x(i, j) += t.weight * (*part.X)(i, j);
    }
  }
  std::cout << "combined X\n" << serialize_matrix(x, Format::Plain);
  return verify_decomposition(n3, x, DecompMode::Stochastic) ? 0 : 1;
}
