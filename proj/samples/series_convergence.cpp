// Partial sums of the lightlike volume series approaching the closed form.

#include <cmath>
#include <cstdio>

#include "cltet/volumes.hpp"

int main() {
  using namespace cltet;
  const double a = 0.5, b = 0.7;
  for (Lambda l : {Lambda::minus, Lambda::plus}) {
    const double exact = lightlike_volume(l, a, b);
    std::printf("Lambda = %d, closed form %.15f\n", to_int(l), exact);
    for (int K : {1, 2, 4, 8, 16})
      std::printf("  K = %2d  error %.3e\n", K, std::abs(lightlike_volume_series(to_int(l), a, b, K) - exact));
  }
}
