#include "gencheb/reference_systems.hpp"

namespace gencheb::reference {

System system1() {
  return {"system 1",
          DenseMatrix::from_rows({{576, 0, 0, 1},
                                  {144, 144, 0, 5},
                                  {0, 144, 144, 25},
                                  {0, 0, 1, 1}}),
          DenseVector{577, 293, 313, 2},
          DenseVector::ones(4)};
}

System system2() {
  return {"system 2",
          DenseMatrix::from_rows({{2250, 0, 0, 17},
                                  {2250, 2250, 0, 181},
                                  {0, 900, 900, 53},
                                  {0, 0, 1, 1}}),
          DenseVector{2267, 4681, 1853, 2},
          DenseVector::ones(4)};
}

Table system1_jacobi() {
  return {"system 1 / jacobi",
          {{0, {0, 0, 0, 0}, 2.000},
           {1, {1.001, 2.034, 2.173, 2.000}, 1.856},
           {2, {0.998, 0.963, -0.208, -0.173}, 1.684},
           {3, {1.002, 1.042, 1.240, 2.208}, 1.232},
           {4, {0.997, 0.956, 0.747, 0.759}, 0.351},
           {5, {1.000, 1.010, 1.085, 1.252}, 0.266},
           {6, {0.999, 0.990, 0.945, 0.914}, 0.101},
           {7, {1.000, 1.003, 1.024, 1.054}, 0.059},
           {8, {0.999, 0.997, 0.987, 0.975}, 0.027}}};
}

Table system1_chebyshev() {
  return {"system 1 / chebyshev",
          {{0, {0, 0, 0, 0}, 2.000},
           {1, {1.001, 2.034, 2.173, 2.000}, 1.856},
           {2, {1.140, 1.101, -0.238, -0.198}, 1.731},
           {3, {1.002, 0.813, 1.024, 2.256}, 1.270},
           {4, {0.987, 0.943, 1.055, 1.059}, 0.099},
           {5, {0.999, 1.024, 1.047, 0.850}, 0.158},
           {6, {1.001, 1.009, 0.997, 0.944}, 0.056},
           {7, {1.000, 0.999, 0.996, 1.013}, 0.013},
           {8, {0.999, 0.998, 0.998, 1.007}, 0.008}}};
}

Table system2_jacobi() {
  return {"system 2 / jacobi",
          {{0, {0, 0, 0, 0}, 2.000},
           {1, {1.007, 2.080, 2.058, 2.000}, 1.813},
           {2, {0.992, 0.912, -0.139, -0.058}, 1.557},
           {3, {1.008, 1.092, 1.150, 2.139}, 1.152},
           {4, {0.991, 0.900, 0.840, 0.849}, 0.241},
           {5, {1.001, 1.020, 1.108, 1.159}, 0.194},
           {6, {0.998, 0.986, 0.969, 0.891}, 0.113},
           {7, {1.000, 1.009, 1.020, 1.030}, 0.037},
           {8, {0.999, 0.996, 0.988, 0.979}, 0.023}}};
}

Table system2_gencheby() {
  return {"system 2 / gencheby",
          {{0, {0, 0, 0, 0}, 2.000},
           {1, {1.007, 2.080, 2.0588, 2.000}, 1.813},
           {2, {0.992, 0.912, -0.139, -0.058}, 1.557},
           {3, {1.013, 1.074, 1.118, 1.758}, 0.771},
           {4, {0.997, 0.960, 0.933, 0.924}, 0.108},
           {5, {1.000, 1.004, 1.019, 1.031}, 0.037},
           {6, {0.999, 0.998, 0.997, 0.992}, 0.008},
           {7, {1.000, 1.000, 1.000, 1.001}, 0.001},
           {8, {0.999, 0.999, 0.999, 0.999}, 0.000}}};
}

}  // namespace gencheb::reference
