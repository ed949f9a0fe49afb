#include "skein/pts.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace skein {
namespace {

CoeffElem boundary_sum() { return CoeffElem::d0() + CoeffElem::d1(); }
CoeffElem boundary_loop() { return CoeffElem::d0() * CoeffElem::d1() + (CoeffElem::A(1) + CoeffElem::A(-1)).pow(2); }

// Representative of p mod 4 in {-1, 0, 1, 2}.
int mod4_rep(int p) {
  const int r = ((p % 4) + 4) % 4;
  return r == 3 ? -1 : r;
}

// Tbar_m(c) as a threaded expansion: 1 for m = 0, (m c)_T otherwise.
CurveExpansion tbar(int m, IntPair c) {
  CurveExpansion out;
  if (m == 0) out.add_scalar(1);
  else out.add({m * c.n, m * c.k}, 1);
  return out;
}

CoeffElem qint(int n, int step = 1) { return CoeffElem(quantum_int_in(n, step)); }

}  // namespace

DiscArg DiscArg::canonical() const {
  const IntPair l = left().is_zero() ? left() : left().canonical();
  const IntPair r = right().is_zero() ? right() : right().canonical();
  return of(l, r);
}

std::string DiscArg::to_string() const {
  std::ostringstream os;
  os << "[[" << n1 << "," << n2 << "],[" << k1 << "," << k2 << "]]";
  return os.str();
}

// ----------------------------------------------------------- coefficient families

HalfLaurent coeff_a(int p, int k) {
  if (k < 1 || k > p || (p - k) % 2 != 0) return {};
  if (2 * k <= p) return HalfLaurent::monomial(2 * k) * quantum_int(k);
  return HalfLaurent::monomial(2 * (p - k + 1)) * quantum_int(p - k + 1);
}

std::vector<QuantumTerm> coeff_b_terms(int p, int k) {
  std::vector<QuantumTerm> out;
  if (k < 0 || k > p - 3 || (p - k) % 2 == 0) return out;
  const int m = p - k;
  const int r = mod4_rep(m);
  if (r == -1) out.push_back({-k, (m + 1) / 4, 1, 1});
  for (int h = 1; h <= (m + r - 2) / 4; ++h) {
    out.push_back({-k, h, m - 4 * h + 2, 1});
    out.push_back({-k, h, m - 4 * h, 1});
  }
  return out;
}

HalfLaurent coeff_b(int p, int k) {
  HalfLaurent out;
  for (const auto& t : coeff_b_terms(p, k))
    out += HalfLaurent::monomial(2 * t.shift) * HalfLaurent(t.multiplier) * quantum_int_in(t.n, t.step);
  return out;
}

HalfLaurent coeff_c(int p, int k) {
  if (k < 0 || k > p - 1 || (p - 1 - k) % 2 != 0) return {};
  return HalfLaurent::monomial(-2 * k) * quantum_int_in((p - k + 1) / 2, 2);
}

// -------------------------------------------------------------- closed forms

CurveExpansion discrepancy_p001(int p) {
  if (p < 1) throw std::invalid_argument("the (p+1,0) x (0,1) formula needs p >= 1");
  CurveExpansion sum;
  for (int j = 0; 2 * j <= p; ++j) sum += qint(2 * j + 1) * tbar(p - 2 * j, {1, 0});
  return boundary_sum() * sum;
}

CurveExpansion discrepancy_1p02(int p) {
  if (p < 0) throw std::invalid_argument("the (1,0) x (p,2) formula needs p >= 0");
  const int r = mod4_rep(p);
  CurveExpansion out;
  if (r != 2) out.add({(p + r) / 2, 1}, boundary_sum() * CoeffElem::A(r));
  if (r == 1 || r == -1) out.add_scalar(boundary_loop());
  return out;
}

CurveExpansion discrepancy_p011(int p) {
  if (p < 0) throw std::invalid_argument("the (p+1,1) x (0,1) formula needs p >= 0");
  const CoeffElem e = boundary_sum();
  CurveExpansion out;
  for (int k = 1; k <= p; ++k) out.add({k, 1}, e * CoeffElem(coeff_a(p, k)));
  for (int k = 0; k <= p; ++k) {
    out += (e * e * CoeffElem(coeff_b(p, k))) * tbar(k, {1, 0});
    out += (boundary_loop() * CoeffElem(coeff_c(p, k))) * tbar(k, {1, 0});
  }
  return out;
}

CurveExpansion product_1p02_geometric(int p) {
  if (p < 1) throw std::invalid_argument("the (1,0) x (p,2) case list needs p >= 1");
  const int r = mod4_rep(p);
  const CoeffElem e = boundary_sum();
  const CoeffElem a2 = CoeffElem::A(2), am2 = CoeffElem::A(-2);
  CurveExpansion out(Variant::Geometric);
  out.add({p + 1, 2}, a2);
  out.add({p - 1, 2}, am2);
  switch (r) {
    case -1:
      out.add({(p - 1) / 2, 1}, CoeffElem::A(-1) * e);
      out.add_scalar(CoeffElem::d0() * CoeffElem::d1() + a2 - am2 + CoeffElem(2));
      break;
    case 0:
      out.add({p / 2, 1}, e);
      break;
    case 1:
      out.add({(p + 1) / 2, 1}, CoeffElem::A(1) * e);
      out.add_scalar(CoeffElem::d0() * CoeffElem::d1() - a2 + am2 + CoeffElem(2));
      break;
    default:
      break;
  }
  return out;
}

std::optional<LambdaMatrix> transport_matrix(IntPair first, IntPair second) {
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      const IntPair f{s1 * first.n, s1 * first.k};
      const IntPair g{s2 * second.n, s2 * second.k};
      if (f.n < 0 || g.n < 0 || g.k < 0) continue;
      if (!is_arc(f) || !is_arc(g) || det(f, g) != 1) continue;
      const LambdaMatrix m{g.n + g.k, (f.n + f.k - g.n - g.k) / 2, 2 * g.n, f.n - g.n};
      if (m.in_lambda() && lambda_linear(m, {1, 0}) == f && lambda_linear(m, {0, 1}) == g) return m;
    }
  return std::nullopt;
}

namespace {

CurveExpansion tp_fg_part(IntPair first, IntPair second, int p) {
  CurveExpansion out;
  out.add({p * first.n + second.n, p * first.k + second.k}, CoeffElem::A(p));
  out.add({p * first.n - second.n, p * first.k - second.k}, CoeffElem::A(-p));
  return out;
}

void require_transport(IntPair first, IntPair second, int p) {
  if (p < 1) throw std::invalid_argument("T_p product needs p >= 1");
  if (!transport_matrix(first, second)) throw std::invalid_argument("pair does not satisfy the transport hypotheses");
}

}  // namespace

CurveExpansion tp_product(IntPair first, IntPair second, int p) {
  require_transport(first, second, p);
  CurveExpansion sum;
  for (int k = 0; 2 * k <= p - 1; ++k) sum += qint(2 * k + 1) * tbar(p - 1 - 2 * k, first);
  return tp_fg_part(first, second, p) + boundary_sum() * sum;
}

CurveExpansion tp_product_as_printed(IntPair first, IntPair second, int p) {
  require_transport(first, second, p);
  CurveExpansion sum;
  for (int k = 0; 2 * k <= p; ++k) sum.add({(p - 2 * k) * first.n, (p - 2 * k) * first.k}, qint(2 * k + 1));
  return tp_fg_part(first, second, p) + boundary_sum() * sum;
}

// ------------------------------------------------------------- Discrepancies

CurveExpansion Discrepancies::fg_terms(DiscArg arg) const {
  const int d = arg.determinant();
  CurveExpansion out;
  out.add(arg.left() + arg.right(), CoeffElem::A(d));
  out.add(arg.left() - arg.right(), CoeffElem::A(-d));
  return out;
}

CurveExpansion Discrepancies::oracle(DiscArg arg) const {
  arg = arg.canonical();
  if (arg.left().is_zero() || arg.right().is_zero()) return CurveExpansion{};
  {
    std::lock_guard lock(mu_);
    if (auto it = oracle_memo_.find(arg); it != oracle_memo_.end()) return it->second;
  }
  CurveExpansion d = curves_.product(arg.left(), arg.right()) - fg_terms(arg);
  std::lock_guard lock(mu_);
  oracle_memo_.emplace(arg, d);
  return d;
}

namespace {

struct Match {
  std::string family;
  int p = 0;
  IntPair first{};   // transport only
  IntPair second{};  // transport only
};

std::optional<Match> match_family(DiscArg arg) {
  const IntPair L = arg.left(), R = arg.right();
  if (L.is_zero() || R.is_zero()) return Match{"zero-column"};
  const int d = std::abs(arg.determinant());
  if (d <= 1) return Match{"det-0-1"};
  for (int sl : {1, -1})
    for (int sr : {1, -1}) {
      const IntPair l{sl * L.n, sl * L.k}, r{sr * R.n, sr * R.k};
      if (r == IntPair{0, 1} && l.k == 0 && l.n >= 2) return Match{"p001", l.n - 1};
      if (l == IntPair{1, 0} && r.k == 2 && r.n >= 0) return Match{"1p02", r.n};
      if (r == IntPair{0, 1} && l.k == 1 && l.n >= 1) return Match{"p011", l.n - 1};
    }
  const int depth = L.depth();
  if (depth >= 2) {
    const IntPair prim = L.primitive_part();
    if (transport_matrix(prim, R)) return Match{"transport", depth, prim, R};
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> Discrepancies::covering_family(DiscArg arg) const {
  if (auto m = match_family(arg)) return m->family;
  return std::nullopt;
}

CurveExpansion Discrepancies::closed(DiscArg arg) const {
  const auto m = match_family(arg);
  if (!m) throw std::invalid_argument("no closed form covers " + arg.to_string());
  if (m->family == "zero-column") return CurveExpansion{};
  if (m->family == "det-0-1") {
    CurveExpansion out;
    if (std::abs(arg.determinant()) == 1 && is_arc(arg.left()) && is_arc(arg.right())) out.add_scalar(boundary_sum());
    return out;
  }
  if (m->family == "p001") return discrepancy_p001(m->p);
  if (m->family == "1p02") return discrepancy_1p02(m->p);
  if (m->family == "p011") return discrepancy_p011(m->p);
  // Transport D[[p,0],[0,1]] along the Lambda element taking (1,0), (0,1)
  // to the given pair; it fixes d0 + d1 and acts linearly on classes.
  const LambdaMatrix M = *transport_matrix(m->first, m->second);
  const CurveExpansion base = m->p == 1 ? CurveExpansion{} : discrepancy_p001(m->p - 1);
  return base.map_curves([&](IntPair c) { return lambda_linear(M, c); });
}

CurveExpansion Discrepancies::leaf(DiscArg arg, int* oracle_leaves) const {
  if (match_family(arg)) return closed(arg);
  if (oracle_leaves) ++*oracle_leaves;
  return oracle(arg);
}

CurveExpansion Discrepancies::recursion(int p, int q, int* oracle_leaves) const {
  const auto D = [](int n1, int n2, int k1, int k2) { return DiscArg{n1, n2, k1, k2}; };
  if (p < 0) return leaf(D(p + 1, 0, q, 1), oracle_leaves);
  {
    std::lock_guard lock(mu_);
    if (auto it = recursion_memo_.find({p, q}); it != recursion_memo_.end()) return it->second;
  }
  // D[p+1 0; q 1] = A^-q (1,0) * D[p 0; q 1] - A^-2q D[p-1 0; q 1]
  //   + A^(-p-q) D[1 p; 0 q-1] - A^-q D[1 p; 0 q] * (0,1) + A^(p-q) D[1 p; 0 q+1]
  CurveExpansion x10, x01;
  x10.add({1, 0}, 1);
  x01.add({0, 1}, 1);
  CurveExpansion out = CoeffElem::A(-q) * curves_.multiply(x10, recursion(p - 1, q, oracle_leaves));
  out -= CoeffElem::A(-2 * q) * recursion(p - 2, q, oracle_leaves);
  out += CoeffElem::A(-p - q) * leaf(D(1, p, 0, q - 1), oracle_leaves);
  out -= CoeffElem::A(-q) * curves_.multiply(leaf(D(1, p, 0, q), oracle_leaves), x01);
  out += CoeffElem::A(p - q) * leaf(D(1, p, 0, q + 1), oracle_leaves);
  std::lock_guard lock(mu_);
  recursion_memo_.emplace(std::make_pair(p, q), out);
  return out;
}

ProductReport Discrepancies::product_to_sum(IntPair c1, IntPair c2) const {
  ProductReport rep;
  rep.expansion = curves_.product(c1, c2);
  const DiscArg arg = DiscArg::of(c1, c2);
  if (auto fam = covering_family(arg)) {
    rep.family = *fam;
    rep.closed = fg_terms(arg) + closed(arg);
    rep.agree = *rep.closed == rep.expansion;
  }
  return rep;
}

// ------------------------------------------------------------------ positivity

std::optional<GroupedCoeff> to_grouped(const CoeffElem& c) {
  std::map<std::pair<int, int>, HalfLaurent> f;
  for (auto& [ij, h] : c.by_boundary_monomial()) f[ij] += h;
  for (const auto& [ij, h] : f) {
    auto it = f.find({ij.second, ij.first});
    if (it == f.end() || !(it->second == h)) return std::nullopt;
  }
  auto binom = [](int n, int k) {
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  // Elementary symmetric form: f = sum E[(a, b)] e1^a e2^b.
  std::map<std::pair<int, int>, HalfLaurent> E;
  while (!f.empty()) {
    const auto [ij, h] = *f.rbegin();
    const auto [i, j] = ij;
    if (i < j) return std::nullopt;
    E[{i - j, j}] += h;
    const int m = i - j;
    for (int t = 0; t <= m; ++t) {
      auto& slot = f[{j + t, j + m - t}];
      slot -= h * HalfLaurent::monomial(0, binom(m, t));
      if (slot.is_zero()) f.erase({j + t, j + m - t});
    }
  }
  // e2 = loop - (A + A^-1)^2.
  const HalfLaurent s = HalfLaurent::monomial(4) + HalfLaurent(2) + HalfLaurent::monomial(-4);
  GroupedCoeff out;
  for (const auto& [ab, h] : E) {
    const auto [a, b] = ab;
    // (loop - s)^b = sum_m C(b, m) loop^m (-s)^(b-m)
    for (int mm = b; mm >= 0; --mm) {
      HalfLaurent term = h * HalfLaurent::monomial(0, binom(b, mm));
      for (int t = 0; t < b - mm; ++t) term = term * (-s);
      out[{a, mm}] += term;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

bool raw_nonnegative(const CoeffElem& c) {
  for (const auto& [e, k] : c.terms())
    if (k < 0) return false;
  return true;
}

bool grouped_nonnegative(const GroupedCoeff& g) {
  return std::all_of(g.begin(), g.end(), [](const auto& kv) { return kv.second.nonnegative(); });
}

std::string grouped_to_string(const GroupedCoeff& g) {
  if (g.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ab, h] : g) {
    os << (first ? "" : " + ") << "(" << h.to_string() << ")";
    if (ab.first) os << "*e" << (ab.first > 1 ? "^" + std::to_string(ab.first) : "");
    if (ab.second) os << "*f" << (ab.second > 1 ? "^" + std::to_string(ab.second) : "");
    first = false;
  }
  return os.str();
}

std::vector<IntPair> canonical_curves(int max_index) {
  std::vector<IntPair> out;
  for (int n = 0; n <= max_index; ++n)
    for (int k = -max_index; k <= max_index; ++k) {
      const IntPair c{n, k};
      if (!c.is_zero() && c.canonical() == c) out.push_back(c);
    }
  return out;
}

PositivityRecord positivity_record(const Curves& curves, IntPair left, IntPair right) {
  PositivityRecord rec{left, right, curves.product(left, right), CurveExpansion{}, true, true, {}, {}};
  rec.geometric = to_geometric_basis(rec.threaded);
  auto label = [](const std::optional<IntPair>& c) { return c ? c->to_string() : std::string("1"); };
  auto check_raw = [&](const std::optional<IntPair>& c, const CoeffElem& k) {
    if (raw_nonnegative(k)) return;
    rec.raw_positive = false;
    rec.raw_counterexamples.push_back(label(c) + ": " + k.to_string());
  };
  auto check_grouped = [&](const std::optional<IntPair>& c, const CoeffElem& k) {
    const auto g = to_grouped(k);
    if (g && grouped_nonnegative(*g)) return;
    rec.grouped_positive = false;
    rec.grouped_counterexamples.push_back(label(c) + ": " + (g ? grouped_to_string(*g) : "asymmetric " + k.to_string()));
  };
  for (const auto& [c, k] : rec.geometric.terms()) check_raw(c, k);
  check_raw(std::nullopt, rec.geometric.scalar());
  for (const auto& [c, k] : rec.threaded.terms()) check_grouped(c, k);
  check_grouped(std::nullopt, rec.threaded.scalar());
  return rec;
}

std::vector<PositivityRecord> positivity_report(const Curves& curves, int max_index, unsigned threads,
                                                const Progress& progress) {
  const auto cs = canonical_curves(max_index);
  std::vector<std::pair<IntPair, IntPair>> cells;
  for (const auto& l : cs)
    for (const auto& r : cs) cells.emplace_back(l, r);
  std::vector<std::optional<PositivityRecord>> out(cells.size());
  std::atomic<std::size_t> next{0}, done{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      try {
        out[i] = positivity_record(curves, cells[i].first, cells[i].second);
        const std::size_t d = ++done;
        if (progress) {
          std::lock_guard lock(failure_mu);
          progress(d, cells.size());
        }
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::vector<PositivityRecord> recs;
  recs.reserve(out.size());
  for (auto& r : out) recs.push_back(std::move(*r));
  return recs;
}

}  // namespace skein
