#include "skein/freealg.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace skein {

// ---------------------------------------------------------------- SkeinElem

SkeinElem::SkeinElem(const CoeffElem& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Word{}, scalar);
}

SkeinElem SkeinElem::word(Word w, CoeffElem c) {
  SkeinElem x;
  if (!c.is_zero()) x.terms_.emplace(std::move(w), std::move(c));
  return x;
}

CoeffElem SkeinElem::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CoeffElem{} : it->second;
}

void SkeinElem::add_term(const Word& w, const CoeffElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SkeinElem SkeinElem::operator-() const {
  SkeinElem r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

SkeinElem& SkeinElem::operator+=(const SkeinElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

SkeinElem& SkeinElem::operator-=(const SkeinElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

SkeinElem operator*(const CoeffElem& c, const SkeinElem& x) {
  SkeinElem r;
  if (c.is_zero()) return r;
  for (const auto& [w, d] : x.terms_) {
    CoeffElem p = c * d;
    if (!p.is_zero()) r.terms_.emplace_hint(r.terms_.end(), w, std::move(p));
  }
  return r;
}

SkeinElem SkeinElem::concat(const SkeinElem& x, const SkeinElem& y) {
  SkeinElem r;
  for (const auto& [u, c] : x.terms_)
    for (const auto& [v, d] : y.terms_) r.add_term(u + v, c * d);
  return r;
}

SkeinElem SkeinElem::map_coefficients(const Specialization& s) const {
  SkeinElem r;
  for (const auto& [w, c] : terms_) r.add_term(w, specialize(c, s));
  return r;
}

// ------------------------------------------------------------------ naming

std::string presentation_name(PresentationId id) {
  switch (id) {
    case PresentationId::RY022_4GEN: return "ry022-4gen";
    case PresentationId::RY022_3GEN: return "ry022-3gen";
    case PresentationId::TORUS_BP: return "torus-bp";
    case PresentationId::RY013: return "ry013";
    case PresentationId::S110: return "s110";
  }
  return "?";
}

PresentationId parse_presentation(std::string_view name) {
  for (auto id : all_presentations())
    if (presentation_name(id) == name) return id;
  throw RewriteError("unknown presentation '" + std::string(name) + "'");
}

std::vector<PresentationId> all_presentations() {
  return {PresentationId::RY022_4GEN, PresentationId::RY022_3GEN, PresentationId::TORUS_BP,
          PresentationId::RY013, PresentationId::S110};
}

std::optional<char> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<char>(i);
  return std::nullopt;
}

std::string Alphabet::render(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i) os << "*";
    os << names[static_cast<unsigned char>(w[i])];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

// ----------------------------------------------------------- RewriteSystem

struct RewriteSystem::State {
  std::shared_mutex cache_mu;
  std::unordered_map<Word, SkeinElem> cache[2];
  std::recursive_mutex family_mu;
  std::vector<SkeinElem> family;  // entry j-1 holds the rule for j
};

RewriteSystem::RewriteSystem(std::string name, Alphabet alphabet, std::vector<Rule> rules,
                             std::optional<ChainFamily> family)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      family_(std::move(family)),
      state_(std::make_shared<State>()) {
  const std::size_t n = alphabet_.size();
  if (alphabet_.counted.size() != n) alphabet_.counted.resize(n, false);
  pair_index_.assign(n * n, -1);
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& l = rules_[i].lhs;
    if (l.size() < 2) throw RewriteError("rule LHS must have length >= 2: " + rules_[i].label);
    for (char c : l)
      if (static_cast<unsigned char>(c) >= n) throw RewriteError("rule uses a letter outside the alphabet");
    if (l.size() == 2) {
      auto& slot = pair_index_[static_cast<unsigned char>(l[0]) * n + static_cast<unsigned char>(l[1])];
      if (slot >= 0) throw RewriteError("duplicate pair rule " + rules_[i].label);
      slot = static_cast<int>(i);
    } else {
      long_rules_.push_back(i);
    }
  }
  check_compatibility();
}

int RewriteSystem::compare(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  auto reduced_degree = [](const Word& w) -> std::size_t {
    char mx = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i && w[i] < mx) return w.size();
      mx = std::max(mx, w[i]);
    }
    return 0;
  };
  const auto ra = reduced_degree(a);
  const auto rb = reduced_degree(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  auto counted = [this](const Word& w) {
    return std::count_if(w.begin(), w.end(),
                         [this](char c) { return alphabet_.counted[static_cast<unsigned char>(c)]; });
  };
  const auto ca = counted(a);
  const auto cb = counted(b);
  if (ca != cb) return ca < cb ? -1 : 1;
  return a < b ? -1 : (a == b ? 0 : 1);
}

Word RewriteSystem::leading_word(const SkeinElem& x) const {
  if (x.is_zero()) throw RewriteError("leading word of zero");
  const Word* best = nullptr;
  for (const auto& [w, c] : x.terms())
    if (!best || compare(*best, w) < 0) best = &w;
  return *best;
}

void RewriteSystem::check_compatibility() const {
  auto check = [this](const std::string& label, const Word& lhs, const SkeinElem& rhs) {
    for (const auto& [w, c] : rhs.terms())
      if (compare(w, lhs) >= 0)
        throw RewriteError("rule " + label + " is not compatible with the term order: " +
                           alphabet_.render(w) + " is not below " + alphabet_.render(lhs));
  };
  for (const auto& r : rules_) check(r.label, r.lhs, r.rhs);
  if (family_) {
    Word lhs{family_->head, family_->mid, family_->tail};
    check(family_->label, lhs, family_->base_rhs);
    const auto n = alphabet_.size();
    if (pair_index_[static_cast<unsigned char>(family_->mid) * n + static_cast<unsigned char>(family_->head)] < 0)
      throw RewriteError("chain family needs a pair rule for (mid head)");
  }
}

std::optional<Redex> RewriteSystem::find_redex(const Word& w, Strategy s) const {
  const std::size_t n = alphabet_.size();
  auto match_at = [&](std::size_t pos) -> std::optional<Redex> {
    if (pos + 1 < w.size()) {
      const int idx = pair_index_[static_cast<unsigned char>(w[pos]) * n + static_cast<unsigned char>(w[pos + 1])];
      if (idx >= 0) return Redex{pos, 2, rules_[static_cast<std::size_t>(idx)].rhs};
    }
    for (std::size_t li : long_rules_) {
      const Word& l = rules_[li].lhs;
      if (w.compare(pos, l.size(), l) == 0) return Redex{pos, l.size(), rules_[li].rhs};
    }
    if (family_ && w[pos] == family_->head) {
      std::size_t j = 0;
      while (pos + 1 + j < w.size() && w[pos + 1 + j] == family_->mid) ++j;
      if (j >= 1 && pos + 1 + j < w.size() && w[pos + 1 + j] == family_->tail)
        return Redex{pos, j + 2, family_rhs(j)};
    }
    return std::nullopt;
  };
  if (s == Strategy::LeftmostFirst) {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      if (auto r = match_at(pos)) return r;
  } else {
    for (std::size_t pos = w.size(); pos-- > 0;)
      if (auto r = match_at(pos)) return r;
  }
  return std::nullopt;
}

bool RewriteSystem::is_normal(const Word& w) const { return !find_redex(w).has_value(); }

SkeinElem RewriteSystem::family_rhs(std::size_t j) const {
  if (!family_) throw RewriteError("system has no chain family");
  if (j == 0) throw RewriteError("chain family index starts at 1");
  std::lock_guard lock(state_->family_mu);
  auto& table = state_->family;
  while (table.size() < j) {
    const std::size_t k = table.size() + 1;
    if (k == 1) {
      table.push_back(reduce(family_->base_rhs));
      continue;
    }
    // mid * (head mid^(k-1) tail) = (mid head) mid^(k-1) tail, and the pair
    // rule gives (mid head) = c * (head mid) + rest.
    const auto n = alphabet_.size();
    const Rule& pr = rules_[static_cast<std::size_t>(
        pair_index_[static_cast<unsigned char>(family_->mid) * n + static_cast<unsigned char>(family_->head)])];
    const Word head_mid{family_->head, family_->mid};
    const CoeffElem c = pr.rhs.coeff(head_mid);
    if (!c.is_unit()) throw RewriteError("chain family lifting coefficient is not a unit");
    SkeinElem rest = pr.rhs - SkeinElem::word(head_mid, c);
    const Word tail_part = std::string(k - 1, family_->mid) + family_->tail;
    SkeinElem lifted = mul(SkeinElem::word(Word(1, family_->mid)), table.back());
    lifted -= reduce(SkeinElem::concat(rest, SkeinElem::word(tail_part)));
    table.push_back(c.unit_inverse() * lifted);
  }
  return table[j - 1];
}

SkeinElem RewriteSystem::nf_word(const Word& w, Strategy s, std::size_t& steps) const {
  const int slot = s == Strategy::LeftmostFirst ? 0 : 1;
  {
    std::shared_lock lock(state_->cache_mu);
    auto it = state_->cache[slot].find(w);
    if (it != state_->cache[slot].end()) return it->second;
  }
  SkeinElem result;
  auto redex = find_redex(w, s);
  if (!redex) {
    result = SkeinElem::word(w);
  } else {
    if (++steps > kStepBudget) throw RewriteError("reduction step budget exceeded in " + name_);
    const Word prefix = w.substr(0, redex->pos);
    const Word suffix = w.substr(redex->pos + redex->len);
    for (const auto& [t, c] : redex->rhs.terms()) result += c * nf_word(prefix + t + suffix, s, steps);
  }
  std::unique_lock lock(state_->cache_mu);
  state_->cache[slot].emplace(w, result);
  return result;
}

SkeinElem RewriteSystem::reduce_word(const Word& w, Strategy s) const {
  std::size_t steps = 0;
  return nf_word(w, s, steps);
}

SkeinElem RewriteSystem::reduce(const SkeinElem& x, Strategy s) const {
  std::size_t steps = 0;
  SkeinElem r;
  for (const auto& [w, c] : x.terms()) r += c * nf_word(w, s, steps);
  return r;
}

SkeinElem RewriteSystem::mul(const SkeinElem& x, const SkeinElem& y) const {
  std::size_t steps = 0;
  SkeinElem r;
  for (const auto& [u, c] : x.terms())
    for (const auto& [v, d] : y.terms()) r += (c * d) * nf_word(u + v, Strategy::LeftmostFirst, steps);
  return r;
}

SkeinElem RewriteSystem::power(const SkeinElem& x, unsigned n) const {
  SkeinElem r(1);
  for (unsigned i = 0; i < n; ++i) r = mul(r, x);
  return r;
}

SkeinElem RewriteSystem::chebyshev(unsigned k, const SkeinElem& x, bool normalized) const {
  return skein::chebyshev(
      k, x, [this](const SkeinElem& a, const SkeinElem& b) { return mul(a, b); },
      [](long c) { return SkeinElem(c); }, normalized);
}

SkeinElem RewriteSystem::generator(std::string_view name) const {
  auto id = alphabet_.find(name);
  if (!id) throw RewriteError("no generator '" + std::string(name) + "' in " + name_);
  return SkeinElem::word(Word(1, *id));
}

std::vector<std::pair<std::string, SkeinElem>> RewriteSystem::relations() const {
  std::vector<std::pair<std::string, SkeinElem>> out;
  for (const auto& r : rules_) out.emplace_back(r.label, SkeinElem::word(r.lhs) - r.rhs);
  if (family_)
    out.emplace_back(family_->label,
                     SkeinElem::word(Word{family_->head, family_->mid, family_->tail}) - family_->base_rhs);
  return out;
}

RewriteSystem RewriteSystem::specialized(const Specialization& s, std::string suffix) const {
  std::vector<Rule> rules = rules_;
  for (auto& r : rules) r.rhs = r.rhs.map_coefficients(s);
  std::optional<ChainFamily> fam = family_;
  if (fam) fam->base_rhs = fam->base_rhs.map_coefficients(s);
  return RewriteSystem(name_ + suffix, alphabet_, std::move(rules), std::move(fam));
}

RewriteSystem RewriteSystem::with_rule_rhs(std::size_t index, SkeinElem rhs) const {
  std::vector<Rule> rules = rules_;
  std::optional<ChainFamily> fam = family_;
  if (index < rules.size()) {
    rules[index].rhs = std::move(rhs);
  } else if (fam && index == rules.size()) {
    fam->base_rhs = std::move(rhs);
  } else {
    throw RewriteError("rule index out of range");
  }
  return RewriteSystem(name_ + "-mutated", alphabet_, std::move(rules), std::move(fam));
}

std::string RewriteSystem::render(const SkeinElem& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    const std::string cs = c.to_string();
    if (w.empty()) {
      os << "(" << cs << ")";
    } else if (cs == "1") {
      os << alphabet_.render(w);
    } else {
      os << "(" << cs << ")*" << alphabet_.render(w);
    }
  }
  return os.str();
}

// -------------------------------------------------------------- confluence

bool ConfluenceReport::confluent() const { return unresolved() == 0; }

std::size_t ConfluenceReport::unresolved() const {
  return static_cast<std::size_t>(std::count_if(ambiguities.begin(), ambiguities.end(),
                                                [](const Ambiguity& a) { return !a.resolvable; }));
}

ConfluenceReport check_local_confluence(const RewriteSystem& sys, std::size_t family_depth) {
  std::vector<Rule> all = sys.rules();
  if (const auto& fam = sys.family()) {
    for (std::size_t j = 1; j <= family_depth; ++j) {
      Word lhs = Word(1, fam->head) + std::string(j, fam->mid) + fam->tail;
      all.push_back({fam->label + "[" + std::to_string(j) + "]", lhs, sys.family_rhs(j)});
    }
  }
  ConfluenceReport report{sys.name(), {}};
  auto resolve = [&](const Word& word, const Rule& r1, const SkeinElem& b1, const Rule& r2, const SkeinElem& b2) {
    Ambiguity a;
    a.word = word;
    a.first_rule = r1.label;
    a.second_rule = r2.label;
    a.difference = sys.reduce(b1) - sys.reduce(b2);
    a.resolvable = a.difference.is_zero();
    report.ambiguities.push_back(std::move(a));
  };
  for (const auto& r1 : all) {
    for (const auto& r2 : all) {
      const Word& l1 = r1.lhs;
      const Word& l2 = r2.lhs;
      // Overlaps: a proper suffix of l1 equals a proper prefix of l2.
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
        if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
        const Word word = l1 + l2.substr(k);
        SkeinElem b1 = SkeinElem::concat(r1.rhs, SkeinElem::word(l2.substr(k)));
        SkeinElem b2 = SkeinElem::concat(SkeinElem::word(l1.substr(0, l1.size() - k)), r2.rhs);
        resolve(word, r1, b1, r2, b2);
      }
      // Inclusions: l2 strictly inside l1.
      if (&r1 != &r2 && l2.size() < l1.size()) {
        for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
          if (l1.compare(p, l2.size(), l2) != 0) continue;
          SkeinElem b2 = SkeinElem::concat(SkeinElem::concat(SkeinElem::word(l1.substr(0, p)), r2.rhs),
                                           SkeinElem::word(l1.substr(p + l2.size())));
          resolve(l1, r1, r1.rhs, r2, b2);
        }
      }
    }
  }
  return report;
}

// ------------------------------------------------------------ homomorphisms

bool HomReport::ok() const {
  return std::all_of(residues.begin(), residues.end(), [](const HomResidue& r) { return r.zero(); });
}

SkeinElem apply_hom(const SkeinElem& x, const HomImages& img, const RewriteSystem& target) {
  SkeinElem out;
  for (const auto& [w, c] : x.terms()) {
    SkeinElem term(specialize(c, img.scalars));
    if (term.is_zero()) continue;
    for (char sym : w) {
      const auto idx = static_cast<unsigned char>(sym);
      if (idx >= img.generators.size()) throw RewriteError("alphabet mismatch: missing generator image");
      term = target.mul(term, img.generators[idx]);
    }
    out += term;
  }
  return target.reduce(out);
}

HomReport verify_homomorphism(const RewriteSystem& source, const RewriteSystem& target, const HomImages& img) {
  if (img.generators.size() != source.alphabet().size())
    throw RewriteError("alphabet mismatch: " + std::to_string(img.generators.size()) + " images for " +
                       std::to_string(source.alphabet().size()) + " generators");
  HomReport report;
  for (const auto& [label, rel] : source.relations()) report.residues.push_back({label, apply_hom(rel, img, target)});
  return report;
}

HomImages identify_generators(const RewriteSystem& source, const RewriteSystem& target, Specialization scalars) {
  HomImages img;
  img.scalars = std::move(scalars);
  for (const auto& name : source.alphabet().names) {
    auto id = target.alphabet().find(name);
    if (!id && name == "g1") id = target.alphabet().find("g");
    if (!id && name == "g") id = target.alphabet().find("g1");
    if (!id) throw RewriteError("alphabet mismatch: no target generator for '" + name + "'");
    img.generators.push_back(SkeinElem::word(Word(1, *id)));
  }
  return img;
}

HomImages four_to_three_images(const RewriteSystem& four, const RewriteSystem& three) {
  HomImages img;
  const auto a = three.generator("a");
  const auto b = three.generator("b");
  const auto g = three.generator("g");
  const CoeffElem v = CoeffElem::v1() * CoeffElem::v2();
  const SkeinElem g2 =
      CoeffElem::A(-1) * (v * three.mul(a, b) - CoeffElem::A(-1) * g - SkeinElem(CoeffElem::d0() + CoeffElem::d1()));
  for (const auto& name : four.alphabet().names) {
    if (name == "a") img.generators.push_back(a);
    else if (name == "b") img.generators.push_back(b);
    else if (name == "g1") img.generators.push_back(g);
    else if (name == "g2") img.generators.push_back(three.reduce(g2));
    else throw RewriteError("alphabet mismatch: unexpected generator '" + name + "'");
  }
  return img;
}

}  // namespace skein
