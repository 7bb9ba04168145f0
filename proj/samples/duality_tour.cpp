// Builds a lightlike tetrahedron in a random pose, dualizes it and compares edge data.

#include <cstdio>

#include "cltet/descriptor.hpp"

int main() {
  using namespace cltet;
  const Lambda l = Lambda::minus;
  const Isometry pose(Mat2{GC(1.1, 0.2, l), GC(0.3, 0.0, l), GC(-0.2, 0.1, l), GC(0.9, -0.1, l)});
  const Tetrahedron t = lightlike_from_angles(l, 0.6, 1.0, pose);
  const Tetrahedron d = dualize_tet(t);
  std::printf("lightlike (%.3f, %.3f) -> ideal (%.3f, %.3f)\n", t.alpha, t.beta, d.alpha, d.beta);
  for (const auto& e : edge_data(t)) std::printf("  edge %s length %.6f\n", e.label.c_str(), e.value);
  for (const auto& e : edge_data(d)) std::printf("  dual edge %s angle %.6f\n", e.label.c_str(), e.value);
  std::printf("%s", dump(describe(d)).c_str());
}
