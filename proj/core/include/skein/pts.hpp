#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "skein/curves.hpp"

namespace skein {

/// Argument [[n1, n2], [k1, k2]] of a discrepancy: the columns are the two
/// curve classes (n1, k1) and (n2, k2).
struct DiscArg {
  int n1 = 0, n2 = 0, k1 = 0, k2 = 0;

  static DiscArg of(IntPair left, IntPair right) { return {left.n, right.n, left.k, right.k}; }
  IntPair left() const { return {n1, k1}; }
  IntPair right() const { return {n2, k2}; }
  int determinant() const { return n1 * k2 - n2 * k1; }
  /// D is unchanged when either class is negated; this picks canonical signs.
  DiscArg canonical() const;
  friend auto operator<=>(const DiscArg&, const DiscArg&) = default;
  std::string to_string() const;
};

// Coefficient families of the (p+1, 1) x (0, 1) formula.
HalfLaurent coeff_a(int p, int k);
HalfLaurent coeff_b(int p, int k);
HalfLaurent coeff_c(int p, int k);

/// A term m * A^shift * [n]_(A^step) of a coefficient family, kept symbolic so
/// the shape (nonnegative multiples of quantum integers) can be inspected.
struct QuantumTerm {
  int shift;
  long multiplier;
  int n;
  int step;
};
std::vector<QuantumTerm> coeff_b_terms(int p, int k);

/// D[[p+1, 0], [0, 1]] for p >= 1.
CurveExpansion discrepancy_p001(int p);
/// D[[1, p], [0, 2]] for p >= 0.
CurveExpansion discrepancy_1p02(int p);
/// D[[p+1, 0], [1, 1]] for p >= 0.
CurveExpansion discrepancy_p011(int p);

/// (1, 0) * (p, 2) written over geometric classes, one case per residue of p
/// mod 4. Independent of the discrepancy formula it is checked against.
CurveExpansion product_1p02_geometric(int p);

/// T_p((N1, K1)) * (N2, K2) under the Lambda-transport hypotheses, with the
/// boundary sum sum_{k} [2k+1] Tbar_{p-1-2k}.
CurveExpansion tp_product(IntPair first, IntPair second, int p);
/// The same product with the boundary sum sum_{k <= p/2} [2k+1] T_{p-2k}
/// exactly as it is usually quoted; kept to document the mismatch.
CurveExpansion tp_product_as_printed(IntPair first, IntPair second, int p);

/// Lambda element sending (1, 0) to `first` and (0, 1) to `second`, if the
/// pair satisfies the transport hypotheses (both arcs, determinant 1,
/// N1, N2, K2 >= 0).
std::optional<LambdaMatrix> transport_matrix(IntPair first, IntPair second);

struct ProductReport {
  CurveExpansion expansion;
  std::optional<CurveExpansion> closed;
  std::string family;
  bool agree = true;
};

/// Discrepancies by definition, by closed forms and by the five-term
/// recursion, all memoized (thread-safe).
class Discrepancies {
 public:
  explicit Discrepancies(const Curves& curves) : curves_(curves) {}

  const Curves& curves() const { return curves_; }

  CurveExpansion oracle(DiscArg arg) const;
  /// Name of the closed-form family covering arg, or nullopt.
  std::optional<std::string> covering_family(DiscArg arg) const;
  /// Throws std::invalid_argument for an uncovered argument.
  CurveExpansion closed(DiscArg arg) const;

  /// D[[p+1, 0], [q, 1]] by the five-term recursion. Leaves come from closed
  /// forms when covered, otherwise from the oracle; `oracle_leaves` counts
  /// the latter.
  CurveExpansion recursion(int p, int q, int* oracle_leaves = nullptr) const;

  ProductReport product_to_sum(IntPair c1, IntPair c2) const;

 private:
  const Curves& curves_;
  mutable std::mutex mu_;
  mutable std::map<DiscArg, CurveExpansion> oracle_memo_;
  mutable std::map<std::pair<int, int>, CurveExpansion> recursion_memo_;

  CurveExpansion leaf(DiscArg arg, int* oracle_leaves) const;
  CurveExpansion fg_terms(DiscArg arg) const;
};

// ------------------------------------------------------------ positivity

/// Coefficient in the grouped coordinates: polynomial in
/// e = d0 + d1 (first index) and f = d0 d1 + (A + A^-1)^2 (second index).
using GroupedCoeff = std::map<std::pair<int, int>, HalfLaurent>;

/// nullopt when the coefficient is not symmetric in d0 <-> d1.
std::optional<GroupedCoeff> to_grouped(const CoeffElem& c);
bool raw_nonnegative(const CoeffElem& c);
bool grouped_nonnegative(const GroupedCoeff& g);
std::string grouped_to_string(const GroupedCoeff& g);

struct PositivityRecord {
  IntPair left;
  IntPair right;
  CurveExpansion threaded;   // grouped verdict is read in this basis
  CurveExpansion geometric;  // raw verdict is read in this basis
  bool raw_positive = true;
  bool grouped_positive = true;
  std::vector<std::string> raw_counterexamples;
  std::vector<std::string> grouped_counterexamples;
};

/// Canonical classes with |n|, |k| <= max_index, ordered by (n, k).
std::vector<IntPair> canonical_curves(int max_index);

PositivityRecord positivity_record(const Curves& curves, IntPair left, IntPair right);

/// Every ordered pair of canonical classes; cells run on `threads` workers and
/// are returned in row-major order regardless of completion order.
using Progress = std::function<void(std::size_t done, std::size_t total)>;
std::vector<PositivityRecord> positivity_report(const Curves& curves, int max_index, unsigned threads = 1,
                                                const Progress& progress = {});

}  // namespace skein
