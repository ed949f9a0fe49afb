#include "skein/reps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "skein/freealg.hpp"

namespace skein {
namespace {

double rel_defect(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)}); }

double op_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

Eigen::MatrixXcd chebyshev_matrix(int n, const Eigen::MatrixXcd& x) {
  const auto I = Eigen::MatrixXcd::Identity(x.rows(), x.cols());
  return chebyshev(
      static_cast<unsigned>(n), Eigen::MatrixXcd(x),
      [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) -> Eigen::MatrixXcd { return a * b; },
      [&](long c) -> Eigen::MatrixXcd { return static_cast<double>(c) * I; });
}

const RewriteSystem& three_gen() {
  static const RewriteSystem sys = make_presentation(PresentationId::RY022_3GEN);
  return sys;
}

Eigen::MatrixXcd evaluate_elem(const SkeinElem& x, const RepMatrices& m, const Specialization& spec) {
  const auto& names = three_gen().alphabet().names;
  std::vector<const Eigen::MatrixXcd*> gens;
  for (const auto& n : names) gens.push_back(n == "a" ? &m.alpha : n == "b" ? &m.beta : &m.gamma);
  const int N = m.dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(N, N);
  for (const auto& [w, c] : x.terms()) {
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(N, N);
    for (char id : w) prod = prod * *gens[static_cast<std::size_t>(id)];
    out += evaluate(c, spec) * prod;
  }
  return out;
}

Specialization numeric_spec(const ShadowData& s, cplx d0, cplx d1) {
  Specialization spec;
  spec.half_A = std::polar(1.0, std::numbers::pi / (2.0 * s.N));
  spec.v1_num = s.v1;
  spec.v2_num = s.v2;
  spec.d0_num = d0;
  spec.d1_num = d1;
  return spec;
}

}  // namespace

cplx root_A(int N) { return std::polar(1.0, std::numbers::pi / N); }

cplx chebyshev_value(int n, cplx z) {
  return chebyshev(
      static_cast<unsigned>(n), z, [](cplx a, cplx b) { return a * b; }, [](long c) { return cplx(static_cast<double>(c)); });
}

LadderData ladder(const ShadowData& s) {
  const cplx A = root_A(s.N);
  const cplx x = s.x, xi = 1.0 / s.x;
  const cplx v = s.v1 * s.v2;
  LadderData L;
  L.E_product = 1.0;
  for (int k = 1; k <= s.N; ++k) {
    const cplx a2k = std::pow(A, 2 * k);
    const cplx lam = x * a2k + xi / a2k;
    const cplx P = 2.0 + s.d0 * s.d1 + (s.d0 + s.d1) * (lam - xi / a2k * (A + 1.0 / A));
    const cplx E = -(P + x * x * std::pow(A, 4 * k + 2) + xi * xi * std::pow(A, -4 * k - 2)) / v;
    L.lambda.push_back(lam);
    L.P.push_back(P);
    L.E.push_back(E);
    L.E_product *= E;
  }
  L.u = -(s.t1 + std::pow(x, s.N) * s.t2) / std::pow(s.sqrt_v, s.N);
  return L;
}

AdmissibilityReport check_admissibility(const ShadowData& s, double tol) {
  AdmissibilityReport r;
  auto nonzero = [&](std::string name, cplx value, double scale) {
    const double mag = std::abs(value) / std::max(1.0, scale);
    r.conditions.push_back({std::move(name), mag, mag > tol});
  };
  auto equal = [&](std::string name, cplx lhs, cplx rhs) {
    const double d = rel_defect(lhs, rhs);
    r.conditions.push_back({std::move(name), d, d < tol});
  };
  const cplx sum_sq = s.t1 * s.t1 + s.t2 * s.t2 + s.t1 * s.t2 * s.t3;
  nonzero("t3 != 2", s.t3 - 2.0, std::abs(s.t3));
  nonzero("t3 != -2", s.t3 + 2.0, std::abs(s.t3));
  nonzero("t1^2 + t2^2 + t1 t2 t3 != 0", sum_sq, std::abs(s.t1 * s.t1) + std::abs(s.t2 * s.t2));
  equal("T_N(2 - d0^2) = 2 - t1^2 - t2^2 - t3^2 - t1 t2 t3", chebyshev_value(s.N, 2.0 - s.d0 * s.d0),
        2.0 - sum_sq - s.t3 * s.t3);
  equal("d0 + d1 = 0", s.d0 + s.d1, 0.0);
  equal("x^N + x^-N = t3", std::pow(s.x, s.N) + std::pow(s.x, -s.N), s.t3);
  equal("sqrt_v^2 = v1 v2", s.sqrt_v * s.sqrt_v, s.v1 * s.v2);
  r.E = ladder(s).E_product;
  nonzero("E != 0", r.E, 1.0);
  r.admissible = std::all_of(r.conditions.begin(), r.conditions.end(), [](const Condition& c) { return c.pass; });
  return r;
}

ShadowData sample_shadow(int N, std::uint64_t seed) {
  if (N < 3 || N % 2 == 0) throw std::invalid_argument("N must be odd and at least 3");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-1.5, 1.5), angle(0.0, 2.0 * std::numbers::pi), radius(1.15, 1.6),
      scale(0.8, 1.25);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ShadowData s;
    s.N = N;
    s.d0 = {box(rng), box(rng)};
    s.d1 = -s.d0;
    s.v1 = std::polar(scale(rng), angle(rng));
    s.v2 = std::polar(scale(rng), angle(rng));
    s.sqrt_v = std::sqrt(s.v1 * s.v2);
    // |x| away from 1 keeps x^N away from the t3 = +-2 degeneracies.
    s.x = std::polar(radius(rng), angle(rng));
    s.t3 = std::pow(s.x, N) + std::pow(s.x, -N);
    s.t1 = {box(rng), box(rng)};
    // t2^2 + t1 t3 t2 + (t1^2 + t3^2 - 2 + T_N(2 - d0^2)) = 0
    const cplx b = s.t1 * s.t3;
    const cplx c = s.t1 * s.t1 + s.t3 * s.t3 - 2.0 + chebyshev_value(N, 2.0 - s.d0 * s.d0);
    s.t2 = (-b + std::sqrt(b * b - 4.0 * c)) / 2.0;
    const cplx sum_sq = s.t1 * s.t1 + s.t2 * s.t2 + s.t1 * s.t2 * s.t3;
    if (std::abs(sum_sq) < 1e-8) continue;
    const auto L = ladder(s);
    if (std::any_of(L.E.begin(), L.E.end(), [](cplx e) { return std::abs(e) < 1e-8; })) continue;
    if (std::abs(L.u) < 1e-8) continue;
    return s;
  }
  throw std::runtime_error("sample_shadow: resample budget exhausted");
}

ShadowData with_inverse_x(ShadowData s) {
  s.x = 1.0 / s.x;
  return s;
}

RepMatrices build_rep(const ShadowData& s) {
  const int N = s.N;
  const cplx A = root_A(N);
  const auto L = ladder(s);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if (std::abs(L.lambda[i] - L.lambda[j]) < 1e-12) throw std::invalid_argument("eigenvalues of gamma coincide");
  if (std::abs(L.u) < 1e-14) throw std::invalid_argument("u vanishes");
  RepMatrices m;
  m.alpha = Eigen::MatrixXcd::Zero(N, N);
  m.beta = Eigen::MatrixXcd::Zero(N, N);
  m.gamma = Eigen::MatrixXcd::Zero(N, N);
  for (int k = 1; k <= N; ++k) {
    const int col = k - 1;
    const cplx a2k = std::pow(A, 2 * k);
    const cplx delta = s.x * a2k - 1.0 / (s.x * a2k);
    const cplx hu = -1.0 / (s.x * a2k * A) / delta;
    const cplx hd = s.x * a2k / A / delta;
    // U_k v_k = up * v_{up_row}, D_k v_k = down * v_{down_row}
    const int up_row = k % N;
    const cplx up = k == N ? L.u : cplx(1.0);
    const int down_row = (k + N - 2) % N;
    const cplx down = k == 1 ? L.E[N - 1] / L.u : L.E[k - 2];
    m.gamma(col, col) = L.lambda[col];
    m.beta(up_row, col) += hu * up;
    m.beta(down_row, col) += hd * down;
    m.alpha(up_row, col) += -up / delta;
    m.alpha(down_row, col) += down / delta;
  }
  return m;
}

RepMatrices direct_sum(const RepMatrices& a, const RepMatrices& b) {
  auto block = [](const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(x.rows() + y.rows(), x.cols() + y.cols());
    r.topLeftCorner(x.rows(), x.cols()) = x;
    r.bottomRightCorner(y.rows(), y.cols()) = y;
    return r;
  };
  return {block(a.alpha, b.alpha), block(a.beta, b.beta), block(a.gamma, b.gamma)};
}

VerifyReport verify_rep(const RepMatrices& m, const ShadowData& s) {
  const int n = m.dim();
  if (m.alpha.rows() != n || m.beta.rows() != n || m.alpha.cols() != n || m.beta.cols() != n || m.gamma.cols() != n)
    throw std::invalid_argument("representation matrices must be square of equal size");
  VerifyReport r;
  const auto I = Eigen::MatrixXcd::Identity(n, n);
  const auto spec = numeric_spec(s, s.d0, s.d1);
  for (const auto& [label, rel] : three_gen().relations())
    r.relation_residuals.emplace_back(label, op_norm(evaluate_elem(rel, m, spec)));

  const Eigen::MatrixXcd c1 = chebyshev_matrix(s.N, s.sqrt_v * m.beta);
  const Eigen::MatrixXcd c2 = chebyshev_matrix(s.N, s.sqrt_v * m.alpha);
  const Eigen::MatrixXcd c3 = chebyshev_matrix(s.N, m.gamma);
  r.t1 = c1.trace() / static_cast<double>(n);
  r.t2 = c2.trace() / static_cast<double>(n);
  r.t3 = c3.trace() / static_cast<double>(n);
  r.t1_residual = op_norm(c1 - s.t1 * I);
  r.t2_residual = op_norm(c2 - s.t2 * I);
  r.t3_residual = op_norm(c3 - s.t3 * I);

  // The relations are affine in e = d0 + d1 and f = d0 d1: fit both by least
  // squares over every relation entry, then split into the two roots.
  std::vector<Eigen::MatrixXcd> base, de, df;
  for (const auto& [label, rel] : three_gen().relations()) {
    const auto m00 = evaluate_elem(rel, m, numeric_spec(s, 0.0, 0.0));
    base.push_back(m00);
    de.push_back(evaluate_elem(rel, m, numeric_spec(s, 1.0, 0.0)) - m00);
    df.push_back(evaluate_elem(rel, m, numeric_spec(s, 1.0, -1.0)) - m00);
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(base.size()) * n * n;
  Eigen::MatrixXcd lhs(rows, 2);
  Eigen::VectorXcd rhs(rows);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b, ++row) {
        // value(d0, d1) = base + e * de + f * (df - de)   (df was sampled at e = 0, f = -1)
        lhs(row, 0) = de[i](a, b);
        lhs(row, 1) = -df[i](a, b);
        rhs(row) = -base[i](a, b);
      }
  const Eigen::VectorXcd ef = lhs.colPivHouseholderQr().solve(rhs);
  const cplx disc = std::sqrt(ef(0) * ef(0) - 4.0 * ef(1));
  r.d0 = (ef(0) + disc) / 2.0;
  r.d1 = (ef(0) - disc) / 2.0;

  // Commutant: M with [g, M] = 0 for all generators, as a null space.
  Eigen::MatrixXcd K(3 * n * n, n * n);
  const Eigen::MatrixXcd* gens[] = {&m.alpha, &m.beta, &m.gamma};
  for (int g = 0; g < 3; ++g) {
    const Eigen::MatrixXcd& X = *gens[g];
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(n * n, n * n);
    // vec(X M - M X) = (I kron X - X^T kron I) vec(M), column-major vec
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
          block(j * n + i, j * n + l) += X(i, l);
          block(j * n + i, l * n + i) -= X(l, j);
        }
    K.block(static_cast<Eigen::Index>(g) * n * n, 0, n * n, n * n) = block;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(K);
  const auto& sv = svd.singularValues();
  const double cutoff = 1e-9 * std::max(1.0, sv(0));
  r.commutant_dim = static_cast<int>(std::count_if(sv.data(), sv.data() + sv.size(), [&](double x) { return x < cutoff; }));
  r.irreducible = r.commutant_dim == 1;
  return r;
}

double ladder_residual(const RepMatrices& m, const ShadowData& s) {
  const cplx A = root_A(s.N);
  const auto L = ladder(s);
  double worst = 0;
  for (int k = 1; k <= s.N; ++k) {
    const cplx a2k = std::pow(A, 2 * k);
    const Eigen::MatrixXcd U = A * m.beta - s.x * a2k * m.alpha;
    const Eigen::MatrixXcd D = A * m.beta - 1.0 / (s.x * a2k * A * A) * m.alpha;
    const Eigen::VectorXcd e = Eigen::VectorXcd::Unit(m.dim(), k - 1);
    const Eigen::VectorXcd got = D * (U * e);
    worst = std::max(worst, (got - L.E[k - 1] * e).norm() / std::max(1.0, std::abs(L.E[k - 1])));
  }
  return worst;
}

namespace {

// Products of all words of length `len` in the generators, flattened so that
// row i of the result is the i-th word's matrix in column-major order.
Eigen::MatrixXcd words_of_length(const RepMatrices& m, int len) {
  const int n = m.dim();
  const Eigen::MatrixXcd* g[] = {&m.alpha, &m.beta, &m.gamma};
  std::vector<Eigen::MatrixXcd> level{Eigen::MatrixXcd::Identity(n, n)};
  for (int l = 0; l < len; ++l) {
    std::vector<Eigen::MatrixXcd> next;
    next.reserve(level.size() * 3);
    for (const auto& w : level)
      for (const auto* x : g) next.push_back(w * *x);
    level = std::move(next);
  }
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(level.size()), n * n);
  for (std::size_t i = 0; i < level.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = level[i].reshaped().transpose();
  return out;
}

}  // namespace

bool equivalent(const RepMatrices& a, const RepMatrices& b, double tol, int max_len) {
  if (a.dim() != b.dim()) return false;
  const int n = a.dim();
  if (max_len < 0) max_len = 2 * n;
  // A word of length L splits as U V with |U| = min(L, h) and |V| = L - |U|,
  // and tr(U V) = sum_ij U_ij V_ji. So every trace is an entry of
  // P Q^T with P the length-h words and Q the transposed shorter words;
  // words shorter than h are checked directly.
  const int h = (max_len + 1) / 2;
  auto transposed_rows = [n](Eigen::MatrixXcd m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      m.row(i) = m.row(i).reshaped(n, n).transpose().reshaped().transpose().eval();
    return m;
  };
  for (int l = 0; l < h; ++l) {
    const Eigen::MatrixXcd wa = words_of_length(a, l), wb = words_of_length(b, l);
    for (Eigen::Index i = 0; i < wa.rows(); ++i)
      if (rel_defect(wa.row(i).reshaped(n, n).trace(), wb.row(i).reshaped(n, n).trace()) > tol) return false;
  }
  const Eigen::MatrixXcd pa = words_of_length(a, h), pb = words_of_length(b, h);
  for (int l = 0; l <= max_len - h; ++l) {
    const Eigen::MatrixXcd qa = transposed_rows(words_of_length(a, l));
    const Eigen::MatrixXcd qb = transposed_rows(words_of_length(b, l));
    constexpr Eigen::Index block = 256;
    for (Eigen::Index r = 0; r < pa.rows(); r += block) {
      const Eigen::Index rows = std::min(block, pa.rows() - r);
      const Eigen::MatrixXcd ta = pa.middleRows(r, rows) * qa.transpose();
      const Eigen::MatrixXcd tb = pb.middleRows(r, rows) * qb.transpose();
      for (Eigen::Index i = 0; i < ta.size(); ++i)
        if (rel_defect(ta(i), tb(i)) > tol) return false;
    }
  }
  return true;
}

}  // namespace skein
