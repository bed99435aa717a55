#pragma once

// The two 4x4 demonstration systems, both with solution (1, 1, 1, 1), and the
// iterate/error tables (printed to three decimals) that the `repro` command
// and the acceptance suite check against.
//
// System 1 has a real spectrum {−1/2, 1/4, 1/6, 1/12}; system 2 has
// {−1/2, 1/10, 1/5 ± i/3}. Both iteration matrices have ρ = 1/2.

#include <array>
#include <string>
#include <vector>

#include "gencheb/linalg.hpp"

namespace gencheb::reference {

struct System {
  std::string name;
  DenseMatrix a;
  DenseVector b;
  DenseVector solution;
};

System system1();
System system2();

/// One table row: m, the four iterate components and the error norm.
struct TableRow {
  int m;
  std::array<double, 4> iterate;
  double error_norm;
};

struct Table {
  std::string label;
  std::vector<TableRow> rows;
};

Table system1_jacobi();
Table system1_chebyshev();
Table system2_jacobi();
Table system2_gencheby();

/// Entries are printed to three decimals; this is the agreed comparison slack.
inline constexpr double kTableTolerance = 5e-3;

}  // namespace gencheb::reference
