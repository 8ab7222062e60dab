// Walks through the main objects for n = 3: the FY basis of B_3, its codes,
// the augmented side, and the graded Frobenius characteristics.

#include <iostream>

#include "chowlab/chowlab.hpp"

using namespace chowlab;

int main() {
  const int n = 3;
  const Matroid b = make_boolean(n);

  std::cout << "FY(B_3) and its codes\n";
  for (const auto& [d, v] : fy_basis_matroid(b).by_degree) {
    for (const FYMonomial& u : v) std::cout << "  " << d << "  " << to_string(u) << "  ->  " << to_text(phi(n, u)) << "\n";
  }

  std::cout << "augmented FY(B_3) and its extended codes\n";
  for (const auto& [d, v] : aug_fy_basis(b).by_degree) {
    for (const FYMonomial& u : v) {
      std::cout << "  " << d << "  " << to_string(u) << "  ->  " << to_text(phi_tilde(n, u)) << "\n";
    }
  }

  const auto oracle = hilbert_quotient_series(aug_chow_presentation(b), n);
  std::cout << "augmented Chow ring Hilbert function (oracle):";
  for (auto h : oracle) std::cout << ' ' << h;
  std::cout << "\n";

  std::cout << "Q_3      = " << Q(n).to_string() << "\n";
  std::cout << "Q~_3     = " << Q_tilde(n).to_string() << "\n";
  std::cout << "f-vector of the augmented Bergman complex of B_2:";
  for (auto f : f_vector(aug_bergman_complex(make_boolean(2)))) std::cout << ' ' << f;
  std::cout << "\n";
  return verify_recurrence(n) && verify_gf_identity(n) ? 0 : 1;
}
