// Volume of the regular ideal tetrahedron in each geometry, closed form against cubature.

#include <cstdio>
#include <numbers>

#include "cltet/volumes.hpp"

int main() {
  using namespace cltet;
  const double a = std::numbers::pi / 3;
  for (Lambda l : {Lambda::minus, Lambda::zero, Lambda::plus}) {
    const auto r = volume_report(Kind::ideal, l, a, a, true, 1e-9);
    std::printf("Lambda = %2d  closed form %.12f  cubature %.12f  rel %.1e\n", to_int(l), r.closed_form, *r.oracle,
                *r.rel_discrepancy);
  }
}
