#pragma once

// Dense symmetric eigensolvers shared by the oracles. Matrices are
// column-major n x n.

#include <vector>

namespace dising::detail {

/// All eigenvalues, ascending.
std::vector<double> symmetric_eigenvalues(const std::vector<double>& a, int n);

struct EigenPairs {
  std::vector<double> values;   ///< ascending
  std::vector<double> vectors;  ///< column-major n x values.size()
};

/// The lowest `count` eigenpairs.
EigenPairs lowest_eigenpairs(const std::vector<double>& a, int n, int count);

/// Ground eigenpair by inverse iteration just below a known lowest
/// eigenvalue (Cholesky of H - sigma), cheaper than a full vector solve.
EigenPairs ground_eigenpair(const std::vector<double>& a, int n, double lowest);

/// Singular values of the upper bidiagonal matrix, ascending.
std::vector<double> bidiagonal_singular_values(const std::vector<double>& diag, const std::vector<double>& super);

}  // namespace dising::detail
