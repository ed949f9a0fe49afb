#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>

#include "skein/freealg.hpp"
#include "skein/lattice.hpp"

namespace skein {

/// Expansion of normal forms in a curve basis by leading-word elimination.
/// Each threaded class (n, k)_T is realized once; the realizations must have
/// pairwise distinct leading words with unit leading coefficients, which makes
/// the change of basis triangular.
///
/// In the three-letter systems the letters (by id) play (1,0), (0,1), (1,1)
/// and the class with a given leading word is predicted directly; the
/// prediction is checked against the realization. Otherwise the table grows
/// by max(|n|, |k|).
class BasisTable {
 public:
  using Realizer = std::function<SkeinElem(IntPair)>;

  BasisTable(const RewriteSystem& sys, Realizer threaded) : sys_(sys), threaded_(std::move(threaded)) {}

  struct Result {
    std::map<IntPair, CoeffElem> curves;
    CoeffElem scalar;
  };

  /// Throws RewriteError when a leading word has no curve within max_bound.
  Result expand(SkeinElem x, int max_bound = 40) const {
    Result out;
    while (!x.is_zero()) {
      const Word w = sys_.leading_word(x);
      const CoeffElem c = x.coeff(w);
      if (w.empty()) {
        out.scalar += c;
        x -= SkeinElem(c);
        continue;
      }
      const Entry& e = lookup(w, max_bound);
      const CoeffElem k = c * e.lead_inverse;
      auto [it, inserted] = out.curves.try_emplace(e.curve, k);
      if (!inserted) {
        it->second += k;
        if (it->second.is_zero()) out.curves.erase(it);
      }
      x -= k * e.realization;
    }
    return out;
  }

  int bound() const {
    std::lock_guard lock(mu_);
    return bound_;
  }

 private:
  struct Entry {
    IntPair curve;
    SkeinElem realization;
    CoeffElem lead_inverse;
  };

  const RewriteSystem& sys_;
  Realizer threaded_;
  mutable std::mutex mu_;
  mutable std::map<Word, Entry> by_lead_;
  mutable std::set<IntPair> known_;
  mutable int bound_ = 0;

  std::optional<IntPair> predict(const Word& w) const {
    if (sys_.alphabet().size() != 3) return std::nullopt;
    int e[3] = {0, 0, 0};
    for (char c : w) ++e[static_cast<unsigned char>(c)];
    IntPair c;
    if (e[2] == 0) c = {e[0], -e[1]};
    else if (e[0] == 0) c = {e[2], e[1] + e[2]};
    else if (e[1] == 0) c = {e[0] + e[2], e[2]};
    else return std::nullopt;
    if (c.is_zero()) return std::nullopt;
    return c.canonical();
  }

  // Realizes c and files it under its leading word.
  const Entry& insert(IntPair c) const {
    SkeinElem r = threaded_(c);
    const Word lw = sys_.leading_word(r);
    const CoeffElem lc = r.coeff(lw);
    if (!lc.is_unit()) throw RewriteError("curve " + c.to_string() + " has a non-unit leading coefficient");
    auto [pos, inserted] = by_lead_.try_emplace(lw, Entry{c, std::move(r), lc.unit_inverse()});
    if (!inserted)
      throw RewriteError("curves " + pos->second.curve.to_string() + " and " + c.to_string() +
                         " share the leading word " + sys_.alphabet().render(lw));
    known_.insert(c);
    return pos->second;
  }

  const Entry& lookup(const Word& w, int max_bound) const {
    std::lock_guard lock(mu_);
    if (auto it = by_lead_.find(w); it != by_lead_.end()) return it->second;
    if (auto c = predict(w); c && !known_.count(*c) && std::max(c->n, std::abs(c->k)) <= max_bound) {
      const Entry& e = insert(*c);
      if (sys_.leading_word(e.realization) == w) return e;
    }
    for (;;) {
      auto it = by_lead_.find(w);
      if (it != by_lead_.end()) return it->second;
      if (bound_ >= max_bound)
        throw RewriteError("word " + sys_.alphabet().render(w) + " is not a leading word of any curve up to bound " +
                           std::to_string(max_bound));
      grow(++bound_);
    }
  }

  // Adds every canonical class with max(|n|, |k|) == b.
  void grow(int b) const {
    for (int n = 0; n <= b; ++n)
      for (int k = -b; k <= b; ++k) {
        const IntPair c{n, k};
        if (c.is_zero() || c.canonical() != c || std::max(n, std::abs(k)) != b || known_.count(c)) continue;
        insert(c);
      }
  }
};

}  // namespace skein
