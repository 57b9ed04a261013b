#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "locc/weyl.hpp"

namespace locc {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr double kDefaultTol = 1e-9;

/// Explicit unitary X^{s_1}Z^{t_1} (x) ... (x) X^{s_m}Z^{t_m} for a label.
Matrix build_unitary(const WeylStructure& st, const WeylLabel& label);

Matrix shift_matrix(unsigned d, long long power = 1);   // X^power
Matrix clock_matrix(unsigned d, long long power = 1);   // Z^power

/// |psi_U> = (U (x) I)|Phi> with |Phi> = sum_n |nn>/sqrt(d).
Vector mes_vector(const Matrix& U);

Matrix tensor(const Matrix& A, const Matrix& B);
Vector tensor_vec(const Vector& a, const Vector& b);

/// Trace out the subsystem at position `which` of a multipartite operator
/// with the given factor dimensions.
Matrix partial_trace(const Matrix& A, const std::vector<unsigned>& dims, std::size_t which);

/// Reorder tensor factors: entry perm[k] names which input factor ends up
/// at output position k.
Matrix permute_systems(const Matrix& A, const std::vector<unsigned>& dims,
                       const std::vector<std::size_t>& perm);

bool is_hermitian(const Matrix& A, double tol = 1e-10);
bool is_unitary(const Matrix& U, double tol = 1e-10);

struct EigenResult {
  Eigen::VectorXd values;   // ascending
  Matrix vectors;           // columns, orthonormal
};

/// Hermitian eigendecomposition; rejects inputs with ||A - A^dag||_max >= tol.
EigenResult hermitian_eigen(const Matrix& A, double herm_tol = 1e-10);

double largest_eigenvalue(const Matrix& hermitian);
double smallest_eigenvalue(const Matrix& hermitian);

/// PSD square root via eigendecomposition (negative roundoff clamped at 0).
Matrix psd_sqrt(const Matrix& A);

/// Real vectorization of Hermitian d x d matrices over the orthonormal basis
/// {E_kk, (E_kl+E_lk)/sqrt2, i(E_kl-E_lk)/sqrt2}.
Eigen::VectorXd herm_to_vec(const Matrix& H);
Matrix vec_to_herm(const Eigen::VectorXd& v, unsigned d);

/// Orthonormal basis of the space of Hermitian d x d matrices M with
/// Tr(F_j M) = 0 for every (Hermitian) functional matrix F_j. Numerical rank
/// uses the threshold 1e-8 * sigma_max.
std::vector<Matrix> nullspace_real(const std::vector<Matrix>& functionals, unsigned d,
                                   double rank_tol = 1e-8);

}  // namespace locc
