#include "locc/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace locc {

Matrix shift_matrix(unsigned d, long long power) {
  long long p = power % static_cast<long long>(d);
  if (p < 0) p += d;
  Matrix X = Matrix::Zero(d, d);
  for (unsigned n = 0; n < d; ++n) X((n + p) % d, n) = 1.0;
  return X;
}

Matrix clock_matrix(unsigned d, long long power) {
  Matrix Z = Matrix::Zero(d, d);
  const double theta = 2.0 * M_PI / d;
  for (unsigned n = 0; n < d; ++n) {
    const double ang = theta * static_cast<double>((static_cast<long long>(n) * power) %
                                                   static_cast<long long>(d));
    Z(n, n) = std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return Z;
}

Matrix build_unitary(const WeylStructure& st, const WeylLabel& label) {
  if (label.exps.size() != st.factors.size())
    throw std::invalid_argument("build_unitary: label does not match structure");
  Matrix U = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < st.factors.size(); ++i) {
    const unsigned d = st.factors[i];
    U = tensor(U, shift_matrix(d, label.exps[i].first) * clock_matrix(d, label.exps[i].second));
  }
  return U;
}

Vector mes_vector(const Matrix& U) {
  if (U.rows() != U.cols()) throw std::invalid_argument("mes_vector: U must be square");
  const Eigen::Index d = U.rows();
  Vector psi(d * d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  // (U (x) I) |Phi> has amplitude U(i,n)/sqrt(d) at |i>|n>.
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index n = 0; n < d; ++n) psi(i * d + n) = U(i, n) * norm;
  return psi;
}

Matrix tensor(const Matrix& A, const Matrix& B) {
  Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return out;
}

Vector tensor_vec(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

namespace {
Eigen::Index dims_product(const std::vector<unsigned>& dims) {
  Eigen::Index n = 1;
  for (unsigned d : dims) n *= d;
  return n;
}
}  // namespace

Matrix partial_trace(const Matrix& A, const std::vector<unsigned>& dims, std::size_t which) {
  const Eigen::Index n = dims_product(dims);
  if (A.rows() != n || A.cols() != n)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  if (which >= dims.size()) throw std::invalid_argument("partial_trace: bad subsystem");
  Eigen::Index left = 1, right = 1;
  for (std::size_t i = 0; i < which; ++i) left *= dims[i];
  for (std::size_t i = which + 1; i < dims.size(); ++i) right *= dims[i];
  const Eigen::Index mid = dims[which];
  Matrix out = Matrix::Zero(left * right, left * right);
  for (Eigen::Index l1 = 0; l1 < left; ++l1)
    for (Eigen::Index r1 = 0; r1 < right; ++r1)
      for (Eigen::Index l2 = 0; l2 < left; ++l2)
        for (Eigen::Index r2 = 0; r2 < right; ++r2) {
          std::complex<double> acc = 0.0;
          for (Eigen::Index m = 0; m < mid; ++m)
            acc += A((l1 * mid + m) * right + r1, (l2 * mid + m) * right + r2);
          out(l1 * right + r1, l2 * right + r2) = acc;
        }
  return out;
}

Matrix permute_systems(const Matrix& A, const std::vector<unsigned>& dims,
                       const std::vector<std::size_t>& perm) {
  const Eigen::Index n = dims_product(dims);
  if (A.rows() != n || A.cols() != n)
    throw std::invalid_argument("permute_systems: dimension mismatch");
  if (perm.size() != dims.size())
    throw std::invalid_argument("permute_systems: bad permutation");
  const std::size_t k = dims.size();
  // Strides of each factor in the input index.
  std::vector<Eigen::Index> in_stride(k, 1);
  for (std::size_t i = k; i-- > 1;) in_stride[i - 1] = in_stride[i] * dims[i];
  std::vector<unsigned> out_dims(k);
  for (std::size_t i = 0; i < k; ++i) out_dims[i] = dims[perm[i]];
  std::vector<Eigen::Index> out_stride(k, 1);
  for (std::size_t i = k; i-- > 1;) out_stride[i - 1] = out_stride[i] * out_dims[i];

  // map[in_index] = out_index
  std::vector<Eigen::Index> map(n);
  std::vector<unsigned> idx(k, 0);
  for (Eigen::Index in = 0; in < n; ++in) {
    Eigen::Index rem = in, out = 0;
    for (std::size_t i = 0; i < k; ++i) {
      idx[i] = static_cast<unsigned>(rem / in_stride[i]);
      rem %= in_stride[i];
    }
    for (std::size_t i = 0; i < k; ++i) out += idx[perm[i]] * out_stride[i];
    map[in] = out;
  }
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(map[i], map[j]) = A(i, j);
  return out;
}

bool is_hermitian(const Matrix& A, double tol) {
  return A.rows() == A.cols() && (A - A.adjoint()).cwiseAbs().maxCoeff() < tol;
}

bool is_unitary(const Matrix& U, double tol) {
  if (U.rows() != U.cols()) return false;
  return (U * U.adjoint() - Matrix::Identity(U.rows(), U.cols())).cwiseAbs().maxCoeff() < tol;
}

EigenResult hermitian_eigen(const Matrix& A, double herm_tol) {
  if (!is_hermitian(A, herm_tol))
    throw std::invalid_argument("hermitian_eigen: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(A);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigen: eigensolver failed");
  return EigenResult{solver.eigenvalues(), solver.eigenvectors()};
}

double largest_eigenvalue(const Matrix& hermitian) {
  const auto r = hermitian_eigen(hermitian);
  return r.values(r.values.size() - 1);
}

double smallest_eigenvalue(const Matrix& hermitian) {
  return hermitian_eigen(hermitian).values(0);
}

Matrix psd_sqrt(const Matrix& A) {
  const auto r = hermitian_eigen(A);
  Eigen::VectorXd roots(r.values.size());
  for (Eigen::Index i = 0; i < r.values.size(); ++i)
    roots(i) = r.values(i) > 0 ? std::sqrt(r.values(i)) : 0.0;
  return r.vectors * roots.asDiagonal() * r.vectors.adjoint();
}

Eigen::VectorXd herm_to_vec(const Matrix& H) {
  const Eigen::Index d = H.rows();
  Eigen::VectorXd v(d * d);
  const double s = std::sqrt(2.0);
  Eigen::Index pos = 0;
  for (Eigen::Index k = 0; k < d; ++k) v(pos++) = H(k, k).real();
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index l = k + 1; l < d; ++l) {
      v(pos++) = s * H(k, l).real();
      v(pos++) = -s * H(k, l).imag();
    }
  return v;
}

Matrix vec_to_herm(const Eigen::VectorXd& v, unsigned d) {
  if (v.size() != static_cast<Eigen::Index>(d) * d)
    throw std::invalid_argument("vec_to_herm: wrong length");
  Matrix H = Matrix::Zero(d, d);
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Index pos = 0;
  for (unsigned k = 0; k < d; ++k) H(k, k) = v(pos++);
  for (unsigned k = 0; k < d; ++k)
    for (unsigned l = k + 1; l < d; ++l) {
      const double re = v(pos++) * s;
      const double im = -v(pos++) * s;
      H(k, l) = std::complex<double>(re, im);
      H(l, k) = std::complex<double>(re, -im);
    }
  return H;
}

std::vector<Matrix> nullspace_real(const std::vector<Matrix>& functionals, unsigned d,
                                   double rank_tol) {
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  if (functionals.empty()) {
    std::vector<Matrix> basis;
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      e(i) = 1.0;
      basis.push_back(vec_to_herm(e, d));
    }
    return basis;
  }
  Eigen::MatrixXd C(static_cast<Eigen::Index>(functionals.size()), n);
  for (std::size_t j = 0; j < functionals.size(); ++j) {
    if (!is_hermitian(functionals[j], 1e-8))
      throw std::invalid_argument("nullspace_real: functional matrix not Hermitian");
    // Tr(F M) is the Euclidean inner product of the real vectorizations.
    C.row(static_cast<Eigen::Index>(j)) = herm_to_vec(functionals[j]).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(C, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thresh = sv.size() ? rank_tol * sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  std::vector<Matrix> basis;
  const auto& V = svd.matrixV();
  for (Eigen::Index i = rank; i < n; ++i) basis.push_back(vec_to_herm(V.col(i), d));
  return basis;
}

}  // namespace locc
