// Acceptance run: one PASS/FAIL line per criterion. Tolerances and time
// limits are fixed here; the exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "skein/pi.hpp"
#include "skein/pts.hpp"
#include "skein/reps.hpp"
#include "skein/torus.hpp"

#ifndef SKEIN_CLI_PATH
#error "SKEIN_CLI_PATH must point at the command-line binary"
#endif

using namespace skein;

namespace {

constexpr double kResidualTol = 1e-8;      // relations and central characters
constexpr double kEProductTol = 1e-8;      // relative
constexpr double kBrokenRelationMin = 1e-3;
constexpr double kEquivalenceTol = 1e-7;   // relative trace agreement

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failed: " << notes_;
    return {failures_ == 0, os.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string notes_;
};

// ------------------------------------------------------------- criterion 1

Outcome confluence_suite() {
  Tally t;
  std::size_t ambiguities = 0, mutants = 0;
  for (auto id : all_presentations()) {
    const auto sys = make_presentation(id);
    const auto report = check_local_confluence(sys);
    ambiguities += report.ambiguities.size();
    t.check(report.confluent(), presentation_name(id) + " has unresolved ambiguities");
    const std::size_t n = sys.rules().size() + (sys.family() ? 1 : 0);
    for (std::size_t i = 0; i < n; ++i) {
      // Rescale the leading term of one right-hand side by A^2.
      SkeinElem rhs = i < sys.rules().size() ? sys.rules()[i].rhs : sys.family()->base_rhs;
      const Word lead = sys.leading_word(rhs);
      rhs.add_term(lead, rhs.coeff(lead) * (CoeffElem::A(2) - 1));
      const auto mutated = check_local_confluence(sys.with_rule_rhs(i, rhs));
      ++mutants;
      t.check(mutated.unresolved() > 0, presentation_name(id) + " mutant " + std::to_string(i) + " undetected");
    }
  }
  return t.outcome(std::to_string(ambiguities) + " ambiguities, " + std::to_string(mutants) + " mutants");
}

// ------------------------------------------------------------- criterion 2

Outcome oracle_consistency() {
  Tally t;
  const auto sys = make_presentation(PresentationId::RY022_4GEN);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> len(0, 5), letter(0, static_cast<int>(sys.alphabet().size()) - 1);
  auto word = [&] {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(static_cast<char>(letter(rng)));
    return SkeinElem::word(w);
  };
  const int pairs = 500;
  for (int i = 0; i < pairs; ++i) {
    const auto a = word(), b = word();
    t.check(pi_commutative(sys.mul(a, b), sys) == pi_commutative(a, sys) * pi_commutative(b, sys),
            "pair " + std::to_string(i));
  }
  const auto images = pi_basis_images(3);
  const auto rank = rational_rank(images);
  t.check(rank == images.size(), "basis images have rank " + std::to_string(rank));
  return t.outcome(std::to_string(pairs) + " pairs, rank " + std::to_string(rank) + "/" +
                   std::to_string(images.size()));
}

// ------------------------------------------------------------- criterion 3

Outcome homomorphism_suite() {
  Tally t;
  const Torus torus;
  for (auto id : {PresentationId::RY022_3GEN, PresentationId::RY022_4GEN}) {
    const auto src = make_presentation(id);
    t.check(verify_homomorphism(src, torus.system(), torus.phi_images(src)).ok(), "phi from " + presentation_name(id));
  }
  const auto ry = make_presentation(PresentationId::RY013);
  const auto s = make_presentation(PresentationId::S110);
  auto scalars = Specialization::unit_punctures();
  scalars.a_scale = 2;
  t.check(verify_homomorphism(ry, s, identify_generators(ry, s, scalars)).ok(), "sphere to torus");
  const Curves cv;
  int classes = 0, non_primitive = 0;
  for (int n = 0; n <= 8; ++n)
    for (int k = -8; k <= 8; ++k) {
      const IntPair c{n, k};
      if (c.is_zero() || c.canonical() != c) continue;
      TorusExpansion expected;
      expected.add(c, 1);
      ++classes;
      non_primitive += !c.primitive();
      t.check(torus.expand(torus.phi(cv.realize(c), cv.system())) == expected, "phi of " + c.to_string());
    }
  return t.outcome(std::to_string(classes) + " classes (" + std::to_string(non_primitive) + " non-primitive)");
}

// ------------------------------------------------------------- criterion 4

Outcome three_way_agreement() {
  Tally t;
  const Curves cv;
  const Discrepancies D(cv);
  int leaves = 0;
  for (int p = 1; p <= 8; ++p) {
    const auto closed = discrepancy_p001(p);
    const std::string tag = "(p+1,0)x(0,1) p=" + std::to_string(p);
    t.check(D.oracle({p + 1, 0, 0, 1}) == closed, tag + " oracle");
    t.check(D.recursion(p, 0, &leaves) == closed, tag + " recursion");
  }
  for (int p = 1; p <= 9; ++p) {
    const std::string tag = "(1,0)x(p,2) p=" + std::to_string(p);
    const auto closed = discrepancy_1p02(p);
    t.check(D.oracle({1, p, 0, 2}) == closed, tag + " oracle");
    // The case list is written over geometric classes and includes the
    // product-to-sum terms; it is independent of the discrepancy formula.
    t.check(to_geometric_basis(cv.product({1, 0}, {p, 2})) == product_1p02_geometric(p), tag + " case list");
    CurveExpansion fg;
    fg.add({p + 1, 2}, CoeffElem::A(2));
    fg.add({1 - p, -2}, CoeffElem::A(-2));
    t.check(to_geometric_basis(fg + closed) == product_1p02_geometric(p), tag + " closed vs case list");
  }
  for (int p = 0; p <= 8; ++p) {
    const auto closed = discrepancy_p011(p);
    const std::string tag = "(p+1,1)x(0,1) p=" + std::to_string(p);
    t.check(D.oracle({p + 1, 0, 1, 1}) == closed, tag + " oracle");
    t.check(D.recursion(p, 1, &leaves) == closed, tag + " recursion");
  }
  t.check(leaves == 0, "recursion needed " + std::to_string(leaves) + " oracle leaves");
  for (int z = 0; z <= 2; ++z)
    for (int p = 1; p <= 5; ++p) {
      const IntPair first{1, 2 * z}, second{0, 1};
      const std::string tag = "T_p((1,2z))x(0,1) z=" + std::to_string(z) + " p=" + std::to_string(p);
      const auto report = D.product_to_sum({p, 2 * p * z}, second);
      t.check(report.expansion == tp_product(first, second, p), tag + " oracle");
      t.check(report.closed && report.agree, tag + " closed-form family");
    }
  return t.outcome("p001 p<=8, 1p02 p<=9, p011 p<=8, T_p p<=5 z<=2");
}

// ------------------------------------------------------------- criterion 5

Outcome positivity_evidence() {
  Tally t;
  const Curves cv;
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  const auto records = positivity_report(cv, 4, threads);
  std::size_t raw_negative = 0, grouped_negative = 0;
  for (const auto& r : records) {
    raw_negative += !r.raw_positive;
    grouped_negative += !r.grouped_positive;
    t.check(r.grouped_positive, r.left.to_string() + "x" + r.right.to_string() + " grouped " +
                                    (r.grouped_counterexamples.empty() ? "" : r.grouped_counterexamples.front()));
  }
  t.check(records.size() == 1600, "expected 1600 cells");
  const auto constant = to_geometric_basis(cv.product({1, 0}, {3, 2})).scalar();
  const CoeffElem expected = CoeffElem::d0() * CoeffElem::d1() + CoeffElem::A(2) - CoeffElem::A(-2) + 2;
  t.check(constant == expected, "raw constant " + constant.to_string());
  return t.outcome(std::to_string(records.size()) + " cells, grouped negative " + std::to_string(grouped_negative) +
                   ", raw negative " + std::to_string(raw_negative));
}

// ------------------------------------------------------------- criterion 6

Outcome representation_suite() {
  Tally t;
  double worst_relation = 0, worst_central = 0, worst_e = 0, weakest_broken = 1e300;
  for (int N : {3, 5, 7})
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const std::string tag = "N=" + std::to_string(N) + " seed=" + std::to_string(seed);
      const auto s = sample_shadow(N, seed);
      t.check(check_admissibility(s).admissible, tag + " admissibility");
      const auto m = build_rep(s);
      const auto r = verify_rep(m, s);
      for (const auto& [label, v] : r.relation_residuals) {
        worst_relation = std::max(worst_relation, v);
        t.check(v < kResidualTol, tag + " " + label);
      }
      for (double v : {r.t1_residual, r.t2_residual, r.t3_residual}) {
        worst_central = std::max(worst_central, v);
        t.check(v < kResidualTol, tag + " central character");
      }
      t.check(r.commutant_dim == 1, tag + " commutant " + std::to_string(r.commutant_dim));
      const cplx expected = std::pow(s.v1 * s.v2, -N) * (s.t1 * s.t1 + s.t2 * s.t2 + s.t1 * s.t2 * s.t3);
      const double e_err = std::abs(ladder(s).E_product - expected) / std::max(1.0, std::abs(expected));
      worst_e = std::max(worst_e, e_err);
      t.check(e_err < kEProductTol, tag + " E product");
      auto broken = s;
      broken.d1 = -s.d0 + 0.1;
      double broken_max = 0;
      for (const auto& [label, v] : verify_rep(build_rep(broken), broken).relation_residuals)
        broken_max = std::max(broken_max, v);
      weakest_broken = std::min(weakest_broken, broken_max);
      t.check(broken_max > kBrokenRelationMin, tag + " d0+d1=0.1 not detected");
      t.check(equivalent(m, build_rep(with_inverse_x(s)), kEquivalenceTol), tag + " x vs 1/x");
    }
  std::ostringstream os;
  os.precision(2);
  os << "60 reps, max relation " << worst_relation << ", max central " << worst_central << ", max E defect "
     << worst_e << ", min broken residual " << weakest_broken;
  return t.outcome(os.str());
}

// ------------------------------------------------------------- criterion 7

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string("\"") + SKEIN_CLI_PATH + "\" " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

Outcome determinism() {
  Tally t;
  const std::vector<std::string> commands{
      "reduce --presentation ry022-3gen --expr \"b*a*g\" --format json",
      "confluence --presentation all --format json",
      "phi-check --max-index 4 --format json",
      "pts --left \"(1,0)\" --right \"(3,2)\" --format json",
      "discrepancy --left \"(3,0)\" --right \"(1,1)\" --method all --format json",
      "positivity --max-index 3 --threads 4 --format csv",
      "positivity --max-index 2 --threads 3 --coords raw --format json",
      "reps sample --n 5 --seed 7 --format json",
      "reps build --n 3 --seed 11 --format json",
      "reps verify --n 7 --seed 3 --format json",
      "export --presentation all --format json",
  };
  std::size_t bytes = 0;
  for (const auto& c : commands) {
    int s1 = 0, s2 = 0;
    const auto a = run_cli(c, s1), b = run_cli(c, s2);
    bytes += a.size();
    t.check(s1 == 0 && s2 == 0, "'" + c + "' exited nonzero");
    t.check(!a.empty() && a == b, "'" + c + "' differs between runs");
  }
  return t.outcome(std::to_string(commands.size()) + " commands, " + std::to_string(bytes) + " bytes each run");
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "confluence and mutation detection", 10, confluence_suite},
      {2, "commutative oracle consistency", 30, oracle_consistency},
      {3, "homomorphisms and curve images", 60, homomorphism_suite},
      {4, "product-to-sum three-way agreement", 300, three_way_agreement},
      {5, "positivity scan", 600, positivity_evidence},
      {6, "representations at roots of unity", 60, representation_suite},
      {7, "byte-identical reruns", 0, determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::ostringstream time;
    time.setf(std::ios::fixed);
    time.precision(1);
    time << secs << " s";
    if (c.limit_seconds > 0) time << " / limit " << c.limit_seconds << " s";
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): " << o.detail
              << " [" << time.str() << (in_time ? "" : ", over time") << "]" << std::endl;
  }
  return all ? 0 : 1;
}
