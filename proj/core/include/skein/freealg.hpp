#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skein/coeff.hpp"

namespace skein {

class RewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word is a string of symbol ids (one char per letter, value = id in the
/// owning alphabet). Symbol ids are assigned in the alphabet's letter order.
using Word = std::string;

/// Degree-lexicographic comparison on symbol ids.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finite linear combination of words with CoeffElem coefficients.
class SkeinElem {
 public:
  using Map = std::map<Word, CoeffElem, WordLess>;

  SkeinElem() = default;
  SkeinElem(const CoeffElem& scalar);  // NOLINT: scalars embed via the empty word
  SkeinElem(long scalar) : SkeinElem(CoeffElem(scalar)) {}  // NOLINT
  static SkeinElem word(Word w, CoeffElem c = 1);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CoeffElem coeff(const Word& w) const;

  void add_term(const Word& w, const CoeffElem& c);
  SkeinElem operator-() const;
  SkeinElem& operator+=(const SkeinElem& o);
  SkeinElem& operator-=(const SkeinElem& o);
  friend SkeinElem operator+(SkeinElem a, const SkeinElem& b) { return a += b; }
  friend SkeinElem operator-(SkeinElem a, const SkeinElem& b) { return a -= b; }
  /// Scalar multiplication (the scalar ring is central).
  friend SkeinElem operator*(const CoeffElem& c, const SkeinElem& x);
  friend bool operator==(const SkeinElem&, const SkeinElem&) = default;

  /// Word concatenation without reduction.
  static SkeinElem concat(const SkeinElem& x, const SkeinElem& y);
  SkeinElem map_coefficients(const Specialization& s) const;

 private:
  Map terms_;
};

enum class PresentationId { RY022_4GEN, RY022_3GEN, TORUS_BP, RY013, S110 };

std::string presentation_name(PresentationId id);
PresentationId parse_presentation(std::string_view name);
std::vector<PresentationId> all_presentations();

struct Alphabet {
  std::vector<std::string> names;   // index = symbol id = letter order
  std::vector<bool> counted;        // letters counted by the third order key

  std::size_t size() const { return names.size(); }
  std::optional<char> find(std::string_view name) const;
  std::string render(const Word& w) const;
};

struct Rule {
  std::string label;
  Word lhs;
  SkeinElem rhs;
};

/// Words head mid^j tail (j >= 1) rewrite by an infinite family of rules.
/// Only j = 1 is given; larger j are derived from the overlap
/// (mid head) mid^(j-1) tail using the pair rule for (mid head).
struct ChainFamily {
  char head;
  char mid;
  char tail;
  std::string label;
  SkeinElem base_rhs;
};

enum class Strategy { LeftmostFirst, RightmostFirst };

struct Redex {
  std::size_t pos;
  std::size_t len;
  SkeinElem rhs;
};

/// Oriented relations plus the term order (length, reduced degree,
/// counted-letter count, lexicographic). Immutable after construction apart
/// from internal memo tables, which are guarded.
class RewriteSystem {
 public:
  static constexpr std::size_t kStepBudget = 1'000'000;

  RewriteSystem(std::string name, Alphabet alphabet, std::vector<Rule> rules,
                std::optional<ChainFamily> family = std::nullopt);

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::optional<ChainFamily>& family() const { return family_; }

  /// Three-way term-order comparison: negative if a < b.
  int compare(const Word& a, const Word& b) const;
  Word leading_word(const SkeinElem& x) const;

  bool is_normal(const Word& w) const;
  std::optional<Redex> find_redex(const Word& w, Strategy s = Strategy::LeftmostFirst) const;
  /// RHS of the chain-family rule for head mid^j tail (normal form).
  SkeinElem family_rhs(std::size_t j) const;

  SkeinElem reduce(const SkeinElem& x, Strategy s = Strategy::LeftmostFirst) const;
  SkeinElem reduce_word(const Word& w, Strategy s = Strategy::LeftmostFirst) const;
  SkeinElem mul(const SkeinElem& x, const SkeinElem& y) const;
  SkeinElem power(const SkeinElem& x, unsigned n) const;
  SkeinElem chebyshev(unsigned k, const SkeinElem& x, bool normalized = false) const;
  SkeinElem generator(std::string_view name) const;

  /// All defining relations as elements that vanish in the algebra.
  std::vector<std::pair<std::string, SkeinElem>> relations() const;

  /// Copy with every rule's coefficients specialized.
  RewriteSystem specialized(const Specialization& s, std::string suffix) const;
  /// Copy with one rule's RHS replaced (used by mutation tests).
  RewriteSystem with_rule_rhs(std::size_t index, SkeinElem rhs) const;

  std::string render(const SkeinElem& x) const;

 private:
  struct State;
  std::string name_;
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::optional<ChainFamily> family_;
  std::vector<int> pair_index_;     // size n*n, -1 when no pair rule
  std::vector<std::size_t> long_rules_;
  std::shared_ptr<State> state_;

  void check_compatibility() const;
  SkeinElem nf_word(const Word& w, Strategy s, std::size_t& steps) const;
};

RewriteSystem make_presentation(PresentationId id);

/// Single overlap or inclusion ambiguity and its resolution status.
struct Ambiguity {
  Word word;
  std::string first_rule;
  std::string second_rule;
  bool resolvable = false;
  SkeinElem difference;  // branch1 - branch2 after full reduction
};

struct ConfluenceReport {
  std::string system;
  std::vector<Ambiguity> ambiguities;
  bool confluent() const;
  std::size_t unresolved() const;
};

/// Enumerates every overlap/inclusion ambiguity among the explicit rules and
/// the chain-family instances with j <= family_depth, and reduces both
/// branches.
ConfluenceReport check_local_confluence(const RewriteSystem& sys, std::size_t family_depth = 3);

/// Target images of the source generators plus the scalar substitution.
struct HomImages {
  std::vector<SkeinElem> generators;  // indexed by source symbol id
  Specialization scalars;
};

struct HomResidue {
  std::string relation;
  SkeinElem residue;
  bool zero() const { return residue.is_zero(); }
};

struct HomReport {
  std::vector<HomResidue> residues;
  bool ok() const;
};

SkeinElem apply_hom(const SkeinElem& x, const HomImages& img, const RewriteSystem& target);
HomReport verify_homomorphism(const RewriteSystem& source, const RewriteSystem& target, const HomImages& img);

/// Identity-on-generators images (by name) with the given scalar map.
HomImages identify_generators(const RewriteSystem& source, const RewriteSystem& target,
                              Specialization scalars = {});

/// Eliminates g2 from a 4-generator element via
/// g2 = A^-1 (v1 v2 a b - A^-1 g1 - d0 - d1), landing in the 3-generator system.
HomImages four_to_three_images(const RewriteSystem& four, const RewriteSystem& three);

}  // namespace skein
