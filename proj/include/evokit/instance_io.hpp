#pragma once

#include <iosfwd>

#include "evokit/problems.hpp"

namespace evokit {

// Dense text formats (whitespace separated):
//   ILP: "m n", m rows of A, then b (m values), c (n values), d (n integer
//        bounds), then optionally the penalty constant C.
//   SPL: "m n", opening costs (m values), then m rows of n service costs.
//   TSP: "n", then the n x n distance matrix.
IlpInstance read_ilp(std::istream& in);
SplInstance read_spl(std::istream& in);
TspInstance read_tsp(std::istream& in);

}  // namespace evokit
