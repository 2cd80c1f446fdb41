#include "leibniz/cohomology.hpp"

#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

void require_leibniz(const Algebra& a, const char* what) {
  if (!is_leibniz(a)) throw NotLeibniz(std::string(what) + " requires a Leibniz algebra");
}

Subspace image_of_d1(const Algebra& a) { return Subspace::row_space(coboundary_matrix(a, 1).transpose()); }

}  // namespace

Subspace derivation_space(const Algebra& a) { return kernel_basis(coboundary_matrix(a, 1)); }

Subspace zl2(const Algebra& a) {
  require_leibniz(a, "ZL2");
  return kernel_basis(coboundary_matrix(a, 2));
}

Subspace bl2(const Algebra& a) {
  require_leibniz(a, "BL2");
  return image_of_d1(a);
}

std::size_t hl2_dim(const Algebra& a) {
  require_leibniz(a, "HL2");
  return quotient_dim(kernel_basis(coboundary_matrix(a, 2)), image_of_d1(a));
}

Subspace skew_cocycles2(const Algebra& a) {
  if (!is_lie(a)) throw NotLie("skew cocycles require a Lie algebra");
  const std::size_t n = a.dim();
  Matrix m = coboundary_matrix(a, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<SparseVector::Entry> e{{(i * n + j) * n + k, Rational(1)}, {(j * n + i) * n + k, Rational(1)}};
        m.append_row(SparseVector(std::move(e)));
      }
    }
  }
  return kernel_basis(m);
}

CohomologySummary cohomology_summary(const Algebra& a) {
  require_leibniz(a, "cohomology");
  const Matrix d1 = coboundary_matrix(a, 1);
  const Subspace der = kernel_basis(d1);
  const Subspace b = Subspace::row_space(d1.transpose());
  const Subspace z = kernel_basis(coboundary_matrix(a, 2));
  return {der.dim(), z.dim(), b.dim(), quotient_dim(z, b)};
}

bool is_cocycle(const Algebra& a, const Cochain& phi) { return coboundary(a, phi).is_zero(); }

}  // namespace leibniz
