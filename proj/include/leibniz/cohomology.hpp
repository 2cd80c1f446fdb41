#pragma once

#include <cstddef>

#include "leibniz/cochain.hpp"

namespace leibniz {

/// ker d^1 in C^1 (n^2 coordinates): linear maps D with D[x,y] = [Dx,y] + [x,Dy].
Subspace derivation_space(const Algebra& a);

/// ker d^2 in C^2 (n^3 coordinates). Throws NotLeibniz.
Subspace zl2(const Algebra& a);

/// im d^1 in C^2. Throws NotLeibniz.
Subspace bl2(const Algebra& a);

/// dim ZL^2 - dim BL^2. Throws NotLeibniz.
std::size_t hl2_dim(const Algebra& a);

/// ZL^2 restricted to skew-symmetric cochains. Throws NotLie.
Subspace skew_cocycles2(const Algebra& a);

struct CohomologySummary {
  std::size_t der = 0;
  std::size_t zl2 = 0;
  std::size_t bl2 = 0;
  std::size_t hl2 = 0;
};

/// All four dimensions from one pass over d^1 and d^2. Throws NotLeibniz.
CohomologySummary cohomology_summary(const Algebra& a);

bool is_cocycle(const Algebra& a, const Cochain& phi);

}  // namespace leibniz
