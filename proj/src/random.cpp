#include "oplax/random.hpp"

#include <vector>

namespace oplax {

Operation random_operation(std::size_t dim, std::size_t degree, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(checked_power(dim, degree + 1));
  for (double& x : c) x = u(rng);
  return Operation(dim, degree, std::move(c));
}

Vector random_vector(std::size_t dim, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(dim);
  for (double& x : v) x = u(rng);
  return Vector(std::move(v));
}

}  // namespace oplax
