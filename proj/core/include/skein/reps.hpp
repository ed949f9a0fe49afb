#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace skein {

using cplx = std::complex<double>;

/// Central character data at A = exp(i pi / N), N odd, plus the choices the
/// construction depends on: x with x^N + x^-N = t3 and a square root of v1 v2.
struct ShadowData {
  int N = 3;
  cplx t1, t2, t3, d0, d1;
  cplx v1{1.0}, v2{1.0};
  cplx x;
  cplx sqrt_v{1.0};
};

/// A = exp(i pi / N), a primitive N-th root of -1 for odd N.
cplx root_A(int N);

/// Chebyshev T_n evaluated at a complex scalar (T_0 = 2).
cplx chebyshev_value(int n, cplx z);

struct LadderData {
  std::vector<cplx> lambda;  // eigenvalues of gamma, index k - 1
  std::vector<cplx> P;
  std::vector<cplx> E;
  cplx E_product;
  cplx u;
};

LadderData ladder(const ShadowData& s);

struct Condition {
  std::string name;
  double value;  // relative defect (equalities) or relative magnitude (nonvanishing)
  bool pass;
};

struct AdmissibilityReport {
  std::vector<Condition> conditions;
  cplx E;
  bool admissible = true;
};

/// Every hypothesis of the existence theorem plus the choice of x.
AdmissibilityReport check_admissibility(const ShadowData& s, double tol = 1e-10);

/// Deterministic random admissible data for odd N >= 3. Throws
/// std::runtime_error if the resample budget runs out.
ShadowData sample_shadow(int N, std::uint64_t seed);

/// Same shadow, built from x^-1 instead of x.
ShadowData with_inverse_x(ShadowData s);

struct RepMatrices {
  Eigen::MatrixXcd alpha, beta, gamma;
  int dim() const { return static_cast<int>(gamma.rows()); }
};

/// Matrices in the gamma eigenbasis v_1..v_N. Throws std::invalid_argument if
/// two lambda_k coincide or u vanishes.
RepMatrices build_rep(const ShadowData& s);

RepMatrices direct_sum(const RepMatrices& a, const RepMatrices& b);

struct VerifyReport {
  std::vector<std::pair<std::string, double>> relation_residuals;  // operator norms
  double t1_residual = 0, t2_residual = 0, t3_residual = 0;
  int commutant_dim = 0;
  bool irreducible = false;
  // Shadow data read back from the matrices (d0, d1 up to order).
  cplx t1, t2, t3, d0, d1;
};

VerifyReport verify_rep(const RepMatrices& m, const ShadowData& s);

/// Largest residual of the ladder identity D_{k+1} U_k v_k = E_k v_k.
double ladder_residual(const RepMatrices& m, const ShadowData& s);

/// Compares traces of all words of length <= max_len (default 2N) in alpha,
/// beta, gamma with relative tolerance `tol`.
bool equivalent(const RepMatrices& a, const RepMatrices& b, double tol = 1e-7, int max_len = -1);

}  // namespace skein
