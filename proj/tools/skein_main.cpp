// Command-line front end. Exit codes: 0 success, 1 failed verification,
// 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "io/parse.hpp"
#include "io/serialize.hpp"
#include "skein/pi.hpp"
#include "skein/pts.hpp"
#include "skein/reps.hpp"
#include "skein/torus.hpp"

using namespace skein;
using io::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string presentation = "ry022-3gen";
  std::string expr;
  std::string left, right;
  std::string method = "all";
  std::string coords = "grouped";
  std::string format = "text";
  std::string out;
  std::string in;
  int max_index = 4;
  int n = 3;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool progress = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const Options& o, const json& j, const std::string& text) {
  Output out(o.out);
  if (o.format == "json") out.os() << j.dump(2) << "\n";
  else out.os() << text;
}

unsigned thread_count(const Options& o) {
  return o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
}

PresentationId presentation_id(const std::string& name) {
  try {
    return parse_presentation(name);
  } catch (const RewriteError&) {
    throw UsageError("unknown presentation '" + name + "'");
  }
}

RewriteSystem presentation(const Options& o) { return make_presentation(presentation_id(o.presentation)); }

IntPair curve_flag(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("--") + flag + " is required");
  const IntPair c = io::parse_curve(text);
  if (c.is_zero()) throw UsageError("(0,0) is not a curve");
  return c;
}

// ----------------------------------------------------------------- commands

int cmd_reduce(const Options& o) {
  const auto sys = presentation(o);
  if (o.expr.empty()) throw UsageError("--expr is required");
  const SkeinElem r = sys.reduce(io::parse_expression(o.expr, sys));
  emit(o, io::to_json(r, sys), sys.render(r) + "\n");
  return 0;
}

int cmd_confluence(const Options& o) {
  std::vector<PresentationId> ids;
  if (o.presentation == "all") ids = all_presentations();
  else ids.push_back(presentation_id(o.presentation));
  json reports = json::array();
  std::ostringstream text;
  bool ok = true;
  for (auto id : ids) {
    const auto sys = make_presentation(id);
    const auto rep = check_local_confluence(sys);
    ok = ok && rep.confluent();
    reports.push_back(io::to_json(rep, sys));
    text << sys.name() << ": " << rep.ambiguities.size() << " ambiguities, " << rep.unresolved() << " unresolved\n";
    for (const auto& a : rep.ambiguities)
      if (!a.resolvable)
        text << "  " << sys.alphabet().render(a.word) << " [" << a.first_rule << " / " << a.second_rule
             << "]: " << sys.render(a.difference) << "\n";
  }
  emit(o, ids.size() == 1 ? reports[0] : reports, text.str());
  return ok ? 0 : 1;
}

// Every homomorphism leaving the chosen presentation, plus confluence.
int cmd_verify_presentation(const Options& o) {
  const auto id = presentation_id(o.presentation);
  const auto sys = make_presentation(id);
  json j;
  std::ostringstream text;
  bool ok = true;
  const auto conf = check_local_confluence(sys);
  ok = conf.confluent();
  j["confluence"] = io::to_json(conf, sys);
  text << "confluence: " << conf.unresolved() << " of " << conf.ambiguities.size() << " unresolved\n";
  auto check = [&](const std::string& label, const RewriteSystem& target, const HomImages& img) {
    const auto rep = verify_homomorphism(sys, target, img);
    ok = ok && rep.ok();
    j["homomorphisms"][label] = io::to_json(rep, target);
    text << label << ": " << (rep.ok() ? "ok" : "FAILED") << "\n";
  };
  if (id == PresentationId::RY022_4GEN) {
    const auto three = make_presentation(PresentationId::RY022_3GEN);
    check("eliminate g2", three, four_to_three_images(sys, three));
  }
  if (id == PresentationId::RY022_4GEN || id == PresentationId::RY022_3GEN) {
    Torus torus;
    check("phi to torus", torus.system(), torus.phi_images(sys));
  }
  if (id == PresentationId::RY013) {
    const auto s110 = make_presentation(PresentationId::S110);
    Specialization sc = Specialization::unit_punctures();
    sc.a_scale = 2;
    check("to s110", s110, identify_generators(sys, s110, sc));
  }
  emit(o, j, text.str());
  return ok ? 0 : 1;
}

int cmd_phi_check(const Options& o) {
  Curves curves;
  Torus torus;
  json rows = json::array();
  std::ostringstream text;
  bool ok = verify_homomorphism(curves.system(), torus.system(), torus.phi_images(curves.system())).ok();
  text << "phi relations: " << (ok ? "ok" : "FAILED") << "\n";
  std::size_t count = 0;
  for (const auto c : canonical_curves(o.max_index)) {
    const auto got = torus.expand(torus.phi(curves.realize(c), curves.system()));
    TorusExpansion want;
    want.add(c, HalfLaurent(1));
    const bool match = got == want;
    ok = ok && match;
    ++count;
    rows.push_back({{"curve", {c.n, c.k}}, {"match", match}, {"image", io::to_json(got)}});
    if (!match) text << "  " << c.to_string() << " -> " << got.to_string() << "\n";
  }
  text << count << " curves checked: " << (ok ? "all match" : "MISMATCH") << "\n";
  emit(o, json{{"ok", ok}, {"curves", rows}}, text.str());
  return ok ? 0 : 1;
}

int cmd_pts(const Options& o) {
  Curves curves;
  Discrepancies disc(curves);
  if (!o.expr.empty()) {
    const auto& sys = curves.system();
    const SkeinElem x = io::parse_expression(o.expr, sys, [&](IntPair c) { return curves.realize(c); });
    const auto e = curves.expand(x);
    emit(o, io::to_json(e), e.to_string() + "\n");
    return 0;
  }
  const IntPair l = curve_flag(o.left, "left"), r = curve_flag(o.right, "right");
  const auto rep = disc.product_to_sum(l, r);
  json j = {{"left", {l.n, l.k}}, {"right", {r.n, r.k}}, {"expansion", io::to_json(rep.expansion)}};
  std::ostringstream text;
  text << l.to_string() << "_T * " << r.to_string() << "_T = " << rep.expansion.to_string() << "\n";
  if (rep.closed) {
    j["closed_form"] = {{"family", rep.family}, {"agree", rep.agree}};
    text << "closed form (" << rep.family << "): " << (rep.agree ? "agrees" : "DISAGREES") << "\n";
  }
  emit(o, j, text.str());
  return 0;
}

int cmd_discrepancy(const Options& o) {
  Curves curves;
  Discrepancies disc(curves);
  const IntPair l = curve_flag(o.left, "left"), r = curve_flag(o.right, "right");
  const DiscArg arg = DiscArg::of(l, r);
  json j = {{"argument", {{arg.n1, arg.n2}, {arg.k1, arg.k2}}}};
  std::ostringstream text;
  text << "D" << arg.to_string() << "\n";
  std::optional<CurveExpansion> first;
  bool agree = true;
  auto record = [&](const std::string& name, const CurveExpansion& v) {
    j[name] = io::to_json(v);
    text << "  " << name << ": " << v.to_string() << "\n";
    if (first) agree = agree && *first == v;
    else first = v;
  };
  const bool all = o.method == "all";
  if (all || o.method == "oracle") record("oracle", disc.oracle(arg));
  if (all || o.method == "closed") {
    if (auto fam = disc.covering_family(arg)) {
      j["family"] = *fam;
      record("closed", disc.closed(arg));
    } else if (!all) {
      throw UsageError("no closed form covers " + arg.to_string());
    }
  }
  if (all || o.method == "recursion") {
    // Only arguments of the shape [[p+1, 0], [q, 1]] have a recursion.
    const DiscArg c = arg.canonical();
    if (c.n2 == 0 && c.k2 == 1 && c.n1 >= 1) {
      int leaves = 0;
      record("recursion", disc.recursion(c.n1 - 1, c.k1, &leaves));
      j["oracle_leaves"] = leaves;
    } else if (!all) {
      throw UsageError("recursion needs an argument [[p+1,0],[q,1]]");
    }
  }
  j["agree"] = agree;
  text << (agree ? "all methods agree" : "METHODS DISAGREE") << "\n";
  emit(o, j, text.str());
  return agree ? 0 : 1;
}

int cmd_positivity(const Options& o) {
  if (o.coords != "raw" && o.coords != "grouped") throw UsageError("--coords must be raw or grouped");
  if (o.max_index < 1) throw UsageError("--max-index must be positive");
  Curves curves;
  Progress progress;
  if (o.progress)
    progress = [](std::size_t done, std::size_t total) {
      if (done % 50 == 0 || done == total) std::cerr << "\r" << done << "/" << total << (done == total ? "\n" : "") << std::flush;
    };
  const auto recs = positivity_report(curves, o.max_index, thread_count(o), progress);
  const auto cs = canonical_curves(o.max_index);
  const bool raw = o.coords == "raw";
  Output out(o.out);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : recs) arr.push_back(io::to_json(r));
    out.os() << json{{"max_index", o.max_index}, {"coords", o.coords}, {"records", arr}}.dump(2) << "\n";
    return 0;
  }
  // CSV verdict matrix: rows are left factors, columns right factors.
  auto label = [](IntPair c) { return "\"" + c.to_string() + "\""; };
  out.os() << "left\\right";
  for (const auto c : cs) out.os() << "," << label(c);
  out.os() << "\n";
  std::size_t i = 0;
  for (const auto l : cs) {
    out.os() << label(l);
    for (std::size_t k = 0; k < cs.size(); ++k, ++i) {
      const bool pos = raw ? recs[i].raw_positive : recs[i].grouped_positive;
      out.os() << "," << (pos ? "positive" : "negative");
    }
    out.os() << "\n";
  }
  return 0;
}

ShadowData shadow_input(const Options& o) {
  if (o.in.empty()) return sample_shadow(o.n, o.seed);
  std::ifstream f(o.in);
  if (!f) throw UsageError("cannot read " + o.in);
  const json j = json::parse(f);
  return io::shadow_from_json(j.contains("shadow") ? j.at("shadow") : j);
}

int cmd_reps_sample(const Options& o) {
  const auto s = sample_shadow(o.n, o.seed);
  const auto adm = check_admissibility(s);
  const json j = {{"shadow", io::to_json(s)}, {"admissibility", io::to_json(adm)}};
  std::ostringstream text;
  text << "N=" << s.N << " seed=" << o.seed << "\n";
  for (const auto& c : adm.conditions) text << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << io::exact_decimal(c.value) << ")\n";
  emit(o, j, text.str());
  return 0;
}

int cmd_reps_build(const Options& o) {
  const auto s = shadow_input(o);
  const auto m = build_rep(s);
  std::ostringstream text;
  text << "rho(gamma) diagonal:";
  for (int k = 0; k < m.dim(); ++k) text << " " << io::exact_decimal(m.gamma(k, k).real()) << (m.gamma(k, k).imag() < 0 ? "" : "+") << io::exact_decimal(m.gamma(k, k).imag()) << "i";
  text << "\n";
  emit(o, {{"shadow", io::to_json(s)}, {"matrices", io::to_json(m)}}, text.str());
  return 0;
}

int cmd_reps_verify(const Options& o) {
  const auto s = shadow_input(o);
  RepMatrices m;
  if (!o.in.empty()) {
    std::ifstream f(o.in);
    const json j = json::parse(f);
    m = j.contains("matrices") ? io::rep_from_json(j.at("matrices")) : build_rep(s);
  } else {
    m = build_rep(s);
  }
  const auto adm = check_admissibility(s);
  const auto r = verify_rep(m, s);
  constexpr double kTol = 1e-8;
  double worst = std::max({r.t1_residual, r.t2_residual, r.t3_residual});
  for (const auto& [label, v] : r.relation_residuals) worst = std::max(worst, v);
  const bool ok = adm.admissible && worst < kTol && r.irreducible;
  json j = {{"admissibility", io::to_json(adm)}, {"verify", io::to_json(r)}, {"ok", ok}};
  std::ostringstream text;
  text << "admissible: " << (adm.admissible ? "yes" : "no") << "\n";
  for (const auto& [label, v] : r.relation_residuals) text << "  " << label << " residual " << io::exact_decimal(v) << "\n";
  text << "  central residuals " << io::exact_decimal(r.t1_residual) << " " << io::exact_decimal(r.t2_residual) << " "
       << io::exact_decimal(r.t3_residual) << "\n";
  text << "  commutant dimension " << r.commutant_dim << (r.irreducible ? " (irreducible)" : " (reducible)") << "\n";
  text << (ok ? "verified" : "VERIFICATION FAILED") << "\n";
  emit(o, j, text.str());
  return ok ? 0 : 1;
}

int cmd_export(const Options& o) {
  std::vector<PresentationId> ids;
  if (o.presentation == "all") ids = all_presentations();
  else ids.push_back(presentation_id(o.presentation));
  json arr = json::array();
  std::ostringstream text;
  for (auto id : ids) {
    const auto sys = make_presentation(id);
    json rules = json::array();
    for (const auto& [label, rel] : sys.relations()) {
      rules.push_back({{"label", label}, {"relation", io::to_json(rel, sys)}});
      text << sys.name() << " " << label << ": " << sys.render(rel) << " = 0\n";
    }
    arr.push_back({{"presentation", sys.name()}, {"generators", sys.alphabet().names}, {"relations", rules}});
  }
  emit(o, ids.size() == 1 ? arr[0] : arr, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skein algebra computations: rewriting, curve bases, discrepancies, representations"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text or json (csv for positivity)")->check(CLI::IsMember({"text", "json", "csv"}));
    c->add_option("--out", o.out, "write output to this file");
  };
  auto with_presentation = [&](CLI::App* c) {
    c->add_option("--presentation", o.presentation, "ry022-4gen, ry022-3gen, torus-bp, ry013, s110 (or all)");
  };

  std::function<int(const Options&)> handler;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* c = app.add_subcommand(name, help);
    common(c);
    c->callback([&handler, fn] { handler = fn; });
    return c;
  };

  auto* reduce = sub("reduce", "normal form of an expression", cmd_reduce);
  with_presentation(reduce);
  reduce->add_option("--expr", o.expr, "expression, e.g. \"b*a*g\"");

  auto* conf = sub("confluence", "overlap ambiguities of a presentation", cmd_confluence);
  with_presentation(conf);

  auto* verify = sub("verify-presentation", "confluence plus the homomorphisms out of a presentation", cmd_verify_presentation);
  with_presentation(verify);

  auto* phi = sub("phi-check", "phi(realize(n,k)) against torus curves", cmd_phi_check);
  phi->add_option("--max-index", o.max_index, "bound on |n|, |k|")->check(CLI::Range(1, 12));

  auto* pts = sub("pts", "product of two curves in the bracelets basis", cmd_pts);
  pts->add_option("--left", o.left, "first curve, e.g. \"(1,0)\"");
  pts->add_option("--right", o.right, "second curve");
  pts->add_option("--expr", o.expr, "expression in generators and C(n,k)");

  auto* disc = sub("discrepancy", "discrepancy by oracle, closed form and recursion", cmd_discrepancy);
  disc->add_option("--left", o.left, "first column (n1,k1)");
  disc->add_option("--right", o.right, "second column (n2,k2)");
  disc->add_option("--method", o.method)->check(CLI::IsMember({"all", "oracle", "closed", "recursion"}));

  auto* pos = sub("positivity", "structure-constant sign scan", cmd_positivity);
  pos->add_option("--max-index", o.max_index, "bound on |n|, |k|")->check(CLI::Range(1, 8));
  pos->add_option("--coords", o.coords, "raw or grouped");
  pos->add_option("--threads", o.threads, "worker threads (default: all cores)");
  pos->add_flag("--progress", o.progress, "report progress on stderr");

  auto* reps = app.add_subcommand("reps", "representations at roots of unity");
  reps->require_subcommand(1);
  auto rep_sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* c = reps->add_subcommand(name, help);
    common(c);
    c->add_option("--n", o.n, "odd N >= 3")->check(CLI::Range(3, 99));
    c->add_option("--seed", o.seed, "sampler seed");
    c->callback([&handler, fn] { handler = fn; });
    return c;
  };
  rep_sub("sample", "sample admissible shadow data", cmd_reps_sample);
  rep_sub("build", "build matrices", cmd_reps_build)->add_option("--in", o.in, "shadow JSON instead of sampling");
  rep_sub("verify", "verify relations, central characters and irreducibility", cmd_reps_verify)
      ->add_option("--in", o.in, "JSON with shadow and optional matrices");

  auto* exp = sub("export", "relations of a presentation", cmd_export);
  with_presentation(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return handler ? handler(o) : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
