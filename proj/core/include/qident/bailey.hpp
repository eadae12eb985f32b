#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qident/alpha.hpp"
#include "qident/products.hpp"
#include "qident/qseries.hpp"

namespace qident::bailey {

using exact::QSeries;

/// Exact values F(L) of a finite identity F(L) = sum_j alpha_j [2L+a choose L-j]_{q^b}.
using ClosedForm = std::function<QPoly(long L)>;

/// One node of a Bailey chain. Copies share the node, and the memo of F(L)
/// is safe to fill from several threads.
class BaileyState {
 public:
  /// Root of a chain. Validates the alpha.
  static BaileyState from_seed(int a, AlphaSpec alpha, ClosedForm closed_form);

  int a() const noexcept;
  const AlphaSpec& alpha() const noexcept;
  /// Number of Bailey steps applied since the seed.
  int steps() const noexcept;
  long base_power() const noexcept { return alpha().base_power; }

  /// F(L), computed on demand and memoized. Throws ParamsOutOfRange for L < 0.
  const QPoly& F(long L) const;
  /// The alpha side sum_j alpha_j [2L+a choose L-j]_{q^b}.
  QPoly alpha_side(long L) const;

  /// Parent state, or nullptr for a seed.
  std::shared_ptr<const BaileyState> parent() const;

 private:
  struct Node;
  explicit BaileyState(std::shared_ptr<Node> node) : node_(std::move(node)) {}
  QPoly compute(long L) const;

  std::shared_ptr<Node> node_;

  friend BaileyState bailey_step(const BaileyState& s);
};

/// Inserts the state into the Bailey lemma once:
///   F'(L) = sum_{r<=L} q^{b(r^2+ar)} [2L+a choose 2r+a]_{q^b} (q^{b(L-r+1)}; q^b)_{L-r} F(r)
///   alpha'_j = q^{b(j^2+aj)} alpha_j.
BaileyState bailey_step(const BaileyState& s);

/// The state after n steps.
BaileyState bailey_iterate(const BaileyState& s, int n);

/// Weight of F(r) inside F'(L): q^{b(r^2+ar)} [2L+a choose L-r] (q^{b(2r+a+1)}; q^b)_{L-r}.
QPoly step_weight(long L, long r, int a, long base_power);

struct PolyMismatch {
  std::size_t exponent = 0;
  Coeff lhs;
  Coeff rhs;
};

std::optional<PolyMismatch> compare(const QPoly& lhs, const QPoly& rhs);
std::optional<PolyMismatch> compare(const QSeries& lhs, const QSeries& rhs);

struct LevelCheck {
  long L = 0;
  bool pass = false;
  std::optional<PolyMismatch> mismatch;
};

struct StateReport {
  std::vector<LevelCheck> levels;
  bool all_pass() const;
  /// First failing level, if any.
  const LevelCheck* first_failure() const;
};

/// Compares F(L) with the alpha side for L = 0..L_max.
StateReport verify_state(const BaileyState& s, long L_max);

/// Where the literature places the moving index of the binomial.
enum class BinomialSlot {
  LMinusJ,  // [2L+a choose L-j]
  LPlusJ,   // [2L+a choose L+j]
};

/// A seed identity as written down, before conventions are normalized.
struct SeedDescriptor {
  std::string id;
  int a = 0;
  AlphaSpec alpha;
  BinomialSlot slot = BinomialSlot::LMinusJ;
  ClosedForm closed_form;
};

/// Brings a seed to the [2L+a choose L-j] convention (re-indexing j -> -j
/// when needed), then checks L = 0, 1, 2 before and after. Throws
/// ConventionMismatch if either probe fails.
BaileyState canonicalize_seed(const SeedDescriptor& seed);

/// theta(alpha) / (q^b; q^b)_inf through q^order, the L -> infinity limit of
/// F(L) for a state whose alpha has a positive definite exponent.
QSeries limit_rhs(const AlphaSpec& alpha, int order);

/// theta(alpha) = scale * q^shift * Q(q^A, z_sign q^B).
struct QuintupleMatch {
  qkit::QuintupleSpec spec;
  long shift = 0;
  int scale = 1;
};

/// Searches for a quintuple-product form of the theta series of alpha.
std::optional<QuintupleMatch> match_quintuple(const AlphaSpec& alpha);

}  // namespace qident::bailey
