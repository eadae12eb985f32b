#include "qident/bailey.hpp"

#include <future>
#include <map>
#include <mutex>

#include "qident/error.hpp"
#include "qident/pochhammer.hpp"
#include "qident/qbinom.hpp"

namespace qident::bailey {

struct BaileyState::Node {
  int a = 0;
  AlphaSpec alpha;
  int steps = 0;
  ClosedForm closed_form;
  std::shared_ptr<const BaileyState> parent;
  mutable std::mutex mutex;
  mutable std::map<long, std::shared_future<QPoly>> memo;
};

BaileyState BaileyState::from_seed(int a, AlphaSpec alpha, ClosedForm closed_form) {
  if (a < 0) throw Error(ErrorKind::ParamsOutOfRange, "a must be >= 0");
  if (!closed_form) throw Error(ErrorKind::ParamsOutOfRange, "seed needs a closed form");
  alpha.validate();
  auto n = std::make_shared<Node>();
  n->a = a;
  n->alpha = std::move(alpha);
  n->closed_form = std::move(closed_form);
  return BaileyState(std::move(n));
}

int BaileyState::a() const noexcept { return node_->a; }
const AlphaSpec& BaileyState::alpha() const noexcept { return node_->alpha; }
int BaileyState::steps() const noexcept { return node_->steps; }
std::shared_ptr<const BaileyState> BaileyState::parent() const { return node_->parent; }

const QPoly& BaileyState::F(long L) const {
  if (L < 0) throw Error(ErrorKind::ParamsOutOfRange, "L must be >= 0");
  std::promise<QPoly> promise;
  std::shared_future<QPoly> slot;
  bool owner = false;
  {
    std::lock_guard lock(node_->mutex);
    auto [it, inserted] = node_->memo.try_emplace(L);
    if (inserted) it->second = promise.get_future().share();
    slot = it->second;
    owner = inserted;
  }
  // The first caller computes; concurrent callers for the same L wait on it.
  if (owner) {
    try {
      promise.set_value(compute(L));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return slot.get();
}

QPoly BaileyState::compute(long L) const {
  if (!node_->parent) return node_->closed_form(L);
  const BaileyState& p = *node_->parent;
  QPoly acc;
  for (long r = 0; r <= L; ++r) {
    const QPoly& fr = p.F(r);
    if (fr.is_zero()) continue;
    acc += step_weight(L, r, node_->a, node_->alpha.base_power) * fr;
  }
  return acc;
}

QPoly BaileyState::alpha_side(long L) const {
  if (L < 0) throw Error(ErrorKind::ParamsOutOfRange, "L must be >= 0");
  return alpha_binomial_sum(node_->alpha, node_->a, L);
}

QPoly step_weight(long L, long r, int a, long b) {
  QPoly w = qkit::qbinom(2 * L + a, L - r, b).shifted(static_cast<std::size_t>(b * (r * r + a * r)));
  for (long k = 0; k < L - r; ++k) w.mul_binomial(-1, static_cast<std::size_t>(b * (2 * r + a + 1 + k)));
  return w;
}

BaileyState bailey_step(const BaileyState& s) {
  auto n = std::make_shared<BaileyState::Node>();
  n->a = s.a();
  n->alpha = s.alpha().bumped(s.a());
  n->steps = s.steps() + 1;
  n->parent = std::make_shared<const BaileyState>(s);
  return BaileyState(std::move(n));
}

BaileyState bailey_iterate(const BaileyState& s, int n) {
  if (n < 0) throw Error(ErrorKind::ParamsOutOfRange, "step count must be >= 0");
  BaileyState cur = s;
  for (int i = 0; i < n; ++i) cur = bailey_step(cur);
  return cur;
}

std::optional<PolyMismatch> compare(const QPoly& lhs, const QPoly& rhs) {
  const auto e = exact::first_mismatch(lhs, rhs);
  if (!e) return std::nullopt;
  return PolyMismatch{*e, lhs.coeff(*e), rhs.coeff(*e)};
}

std::optional<PolyMismatch> compare(const QSeries& lhs, const QSeries& rhs) {
  const auto e = exact::first_mismatch(lhs, rhs);
  if (!e) return std::nullopt;
  return PolyMismatch{*e, lhs.coeff(*e), rhs.coeff(*e)};
}

bool StateReport::all_pass() const { return first_failure() == nullptr; }

const LevelCheck* StateReport::first_failure() const {
  for (const auto& l : levels) {
    if (!l.pass) return &l;
  }
  return nullptr;
}

StateReport verify_state(const BaileyState& s, long L_max) {
  if (L_max < 0) throw Error(ErrorKind::ParamsOutOfRange, "L_max must be >= 0");
  StateReport rep;
  for (long L = 0; L <= L_max; ++L) {
    LevelCheck c;
    c.L = L;
    c.mismatch = compare(s.F(L), s.alpha_side(L));
    c.pass = !c.mismatch;
    rep.levels.push_back(std::move(c));
  }
  return rep;
}

BaileyState canonicalize_seed(const SeedDescriptor& seed) {
  if (!seed.closed_form) throw Error(ErrorKind::ParamsOutOfRange, seed.id + ": no closed form");
  const bool plus = seed.slot == BinomialSlot::LPlusJ;
  for (long L = 0; L <= 2; ++L) {
    const QPoly raw = plus ? alpha_binomial_sum_plus(seed.alpha, seed.a, L)
                           : alpha_binomial_sum(seed.alpha, seed.a, L);
    if (raw != seed.closed_form(L)) {
      throw Error(ErrorKind::ConventionMismatch,
                  seed.id + ": identity fails as written at L = " + std::to_string(L));
    }
  }
  AlphaSpec alpha = plus ? seed.alpha.reindexed() : seed.alpha;
  BaileyState st = BaileyState::from_seed(seed.a, alpha, seed.closed_form);
  const StateReport rep = verify_state(st, 2);
  if (const auto* bad = rep.first_failure()) {
    throw Error(ErrorKind::ConventionMismatch,
                seed.id + ": canonical form fails at L = " + std::to_string(bad->L));
  }
  return st;
}

QSeries limit_rhs(const AlphaSpec& alpha, int order) {
  alpha.validate();
  const QSeries theta = qkit::theta_sum(alpha.exponent, alpha.weight, order);
  const QSeries den = qkit::pochhammer_infinite({+1, alpha.base_power, alpha.base_power, std::nullopt}, order);
  return theta * exact::inverse(den);
}

std::optional<QuintupleMatch> match_quintuple(const AlphaSpec& alpha) {
  alpha.validate();
  const auto& e = alpha.exponent;
  // Q(q^A, z) has its k-th pair of terms at A(3k^2 -+ k)/2 + 3Bk, so the
  // j^2 coefficient of the alpha exponent must be A/6.
  if ((6 * e.A) % e.D != 0) return std::nullopt;
  const long A = 6 * e.A / e.D;
  if (A < 1) return std::nullopt;
  const int order = static_cast<int>(std::max<long>(6 * A, 60));
  const QSeries theta = qkit::theta_sum(e, alpha.weight, order);
  const auto val = theta.valuation();
  if (!val) return std::nullopt;
  const Coeff lead = theta.coeff(*val);
  if (lead != 1 && lead != -1) return std::nullopt;
  const int scale = lead > 0 ? 1 : -1;
  const QSeries normalized = theta.scaled(Coeff(scale));
  for (long B = 1; A - 2 * B >= 1; ++B) {
    for (int z : {1, -1}) {
      const qkit::QuintupleSpec spec{A, z, B};
      const QSeries cand = qkit::quintuple_sum(spec, order).shifted(*val);
      if (cand == normalized) return QuintupleMatch{spec, static_cast<long>(*val), scale};
    }
  }
  return std::nullopt;
}

}  // namespace qident::bailey
