#include <doctest.h>

#include <thread>

#include "qident/bailey.hpp"
#include "qident/error.hpp"
#include "qident/multisum.hpp"
#include "qident/pochhammer.hpp"
#include "qident/qbinom.hpp"
#include "qident/seeds.hpp"

using namespace qident;
using namespace qident::bailey;
using registry::seed;
using registry::seeds;

namespace {

BaileyState canonical(const std::string& id) { return canonicalize_seed(registry::printed_descriptor(seed(id))); }

// F'(L) straight from the lemma, without the rearranged weight.
QPoly step_by_definition(const BaileyState& parent, long L) {
  const long b = parent.base_power();
  const int a = parent.a();
  QPoly acc;
  for (long r = 0; r <= L; ++r) {
    QPoly w = qkit::qbinom(2 * L + a, 2 * r + a, b) * qkit::pochhammer_finite({1, b * (L - r + 1), b, L - r});
    acc += (w * parent.F(r)).shifted(static_cast<std::size_t>(b * (r * r + a * r)));
  }
  return acc;
}

}  // namespace

TEST_CASE("alpha specs") {
  const AlphaSpec a{{1, 0, SignRule::None}, {1, -3, 2, 2}, 1};
  CHECK_NOTHROW(a.validate());
  CHECK(!a.term(0));
  CHECK(a.term(1) == std::pair{1, 0L});
  CHECK(a.term(2) == std::pair{-1, 0L});
  CHECK(a.term(-1) == std::pair{-1, 3L});
  const AlphaSpec r = a.reindexed();
  for (long j = -10; j <= 10; ++j) CHECK(r.term(j) == a.term(-j));
  CHECK(r.reindexed() == a);
  // One bump adds j^2 + a j in the base.
  const AlphaSpec one{{1, std::nullopt, SignRule::None}, {0, 0, 0, 1}, 1};
  CHECK(one.bumped(0).term(1) == std::pair{1, 1L});
  CHECK(one.bumped(0, 2) == one.bumped(0).bumped(0));
  const AlphaSpec half{{1, std::nullopt, SignRule::None}, {1, 0, 0, 2}, 1};
  CHECK_THROWS_AS(half.validate(), Error);
  const AlphaSpec zero_base{{1, 0, SignRule::None}, {1, 0, 0, 1}, 0};
  CHECK_THROWS_AS(zero_base.validate(), Error);
}

TEST_CASE("seeds canonicalize and satisfy the defining relation") {
  for (const auto& s : seeds()) {
    const BaileyState st = canonical(s.id);
    CHECK(st.alpha() == s.canonical);
    CHECK_MESSAGE(verify_state(st, 12).all_pass(), s.id);
  }
  CHECK(canonical("SEED-A").alpha().exponent == qkit::QuadraticExponent{1, 3, 2, 2});
}

TEST_CASE("seed base cases") {
  CHECK(canonical("SEED-A").F(0).is_zero());
  CHECK(canonical("SEED-B").F(0) == QPoly(1));
  CHECK(canonical("SEED-B").alpha_side(0) == QPoly(1));
  CHECK(canonical("SEED-G").F(0) == QPoly(1));
  CHECK(canonical("SEED-H").F(0) == QPoly::from_ints({0, 1}));
  CHECK(canonical("SEED-I").F(0) == QPoly::from_ints({1, 1}));
  CHECK(canonical("SEED-A").F(1) == QPoly::from_ints({1, 0, 0, -1}));
}

TEST_CASE("wrong descriptors are rejected") {
  auto d = registry::printed_descriptor(seed("SEED-D"));
  d.alpha.weight.legendre_shift = 0;
  CHECK_THROWS_AS(canonicalize_seed(d), Error);
  auto e = registry::printed_descriptor(seed("SEED-B"));
  e.slot = e.slot == BinomialSlot::LPlusJ ? BinomialSlot::LMinusJ : BinomialSlot::LPlusJ;
  try {
    canonicalize_seed(e);
    FAIL("expected ConventionMismatch");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ConventionMismatch);
  }
}

TEST_CASE("a flipped character shift fails early") {
  const auto& s = seed("SEED-A");
  AlphaSpec bad = s.canonical;
  bad.weight.legendre_shift = 1;
  const BaileyState st = BaileyState::from_seed(s.a, bad, s.closed_form);
  const StateReport rep = verify_state(st, 5);
  const LevelCheck* f = rep.first_failure();
  REQUIRE(f);
  CHECK(f->L <= 1);
  REQUIRE(f->mismatch);
  CHECK(f->mismatch->exponent <= 1);
}

TEST_CASE("step weight") {
  CHECK(step_weight(1, 1, 0, 2) == QPoly::from_ints({0, 0, 1}));
  CHECK(step_weight(0, 0, 1, 1) == QPoly(1));
  const BaileyState d = canonical("SEED-D");
  const BaileyState d1 = bailey_step(d);
  CHECK(d1.F(1) == step_weight(1, 0, 0, 2) * d.F(0) + step_weight(1, 1, 0, 2) * d.F(1));
  CHECK(d1.steps() == 1);
  CHECK(d1.parent()->steps() == 0);
  CHECK(bailey_iterate(d, 2).alpha() == d.alpha().bumped(0, 2));
}

TEST_CASE("the rearranged step weight matches the lemma") {
  for (const auto& s : seeds()) {
    const BaileyState st = canonical(s.id);
    const BaileyState next = bailey_step(st);
    for (long L = 0; L <= 6; ++L) CHECK_MESSAGE(next.F(L) == step_by_definition(st, L), s.id << " L=" << L);
  }
}

TEST_CASE("Bailey steps preserve the defining relation") {
  for (const auto& s : seeds()) {
    BaileyState st = canonical(s.id);
    for (int v = 1; v <= 4; ++v) {
      st = bailey_step(st);
      const auto rep = verify_state(st, 15);
      CHECK_MESSAGE(rep.all_pass(), s.id << " v=" << v);
      CHECK(rep.levels.size() == 16);
    }
  }
}

TEST_CASE("memoized F tolerates concurrent fills") {
  const BaileyState st = bailey_iterate(canonical("SEED-C"), 2);
  std::vector<QPoly> got(6);
  std::vector<std::thread> pool;
  for (int w = 0; w < 6; ++w) pool.emplace_back([&, w] { got[static_cast<std::size_t>(w)] = st.F(9 + w % 2); });
  for (auto& th : pool) th.join();
  for (int w = 0; w < 6; ++w) CHECK(got[static_cast<std::size_t>(w)] == st.alpha_side(9 + w % 2));
  CHECK_THROWS_AS(st.F(-1), Error);
}

TEST_CASE("multisum: two-term expansion in base q^2") {
  // sum_n q^{2n^2} (q^3;q^6)_n / ((q^2;q^2)_{2n} (q;q^2)_n) through q^7: only n = 0, 1 contribute.
  MultisumSpec m{2, 1, 0, 0, 0, qkit::ratio_odd, {}};
  const QSeries got = multisum_lhs(m, 7);
  QSeries expect = exact::inverse(QSeries(QPoly(1), 7));
  expect += QSeries(qkit::ratio_odd(1).shifted(2), 7) * exact::inverse(QSeries(qkit::q_factorial(2, 2), 7));
  CHECK(got == expect);
  CHECK(multisum_lhs(m, 0) == QSeries::one(0));
}

TEST_CASE("multisum: shifted quadratic forms coincide") {
  MultisumSpec a{1, 1, 2, 1, 2, nullptr, {}};
  MultisumSpec b{1, 1, 3, 0, 2, nullptr, {}};
  CHECK(multisum_lhs(a, 80) == multisum_lhs(b, 80));
}

TEST_CASE("multisum pruning is sound") {
  for (int v = 1; v <= 3; ++v) {
    const auto m = registry::seeds()[1];  // SEED-B
    MultisumSpec spec{1, v, 1, 0, 1, m.closed_form, {}};
    MultisumStats tight, loose;
    const QSeries a = multisum_lhs(spec, 60, 0, &tight);
    const QSeries b = multisum_lhs(spec, 60, 40, &loose);
    CHECK(a == b);
    CHECK(loose.terms >= tight.terms);
    CHECK(tight.pruned > 0);
  }
}

TEST_CASE("finite chains converge to their multisum limits") {
  for (const auto& s : seeds()) {
    if (!s.has_chain) continue;
    for (int v = 1; v <= 2; ++v) {
      const BaileyState st = bailey_iterate(canonical(s.id), v);
      MultisumSpec spec{s.canonical.base_power, v, s.a, 0, s.a, s.closed_form, {}};
      for (long L : {10L, 15L, 20L}) {
        const QSeries lim = multisum_lhs(spec, static_cast<int>(L));
        CHECK_MESSAGE(QSeries(st.F(L), static_cast<int>(L)) == lim, s.id << " v=" << v << " L=" << L);
      }
    }
  }
}

TEST_CASE("multisum limits equal theta quotients") {
  for (const auto& s : seeds()) {
    const int v = 1;
    const BaileyState st = bailey_iterate(canonical(s.id), v);
    MultisumSpec spec{s.canonical.base_power, v, s.a, 0, s.a, s.closed_form, {}};
    CHECK_MESSAGE(multisum_lhs(spec, 100) == limit_rhs(st.alpha(), 100), s.id);
  }
}

TEST_CASE("limit_rhs examples") {
  const BaileyState d1 = bailey_step(canonical("SEED-D"));
  const QSeries lim = limit_rhs(d1.alpha(), 150);
  const QSeries den = qkit::pochhammer_infinite({1, 2, 2, std::nullopt}, 150);
  CHECK(lim == qkit::quintuple_product({18, 1, 3}, 150) * exact::inverse(den));
  const BaileyState e1 = bailey_step(canonical("SEED-E"));
  CHECK(limit_rhs(e1.alpha(), 150) == qkit::quintuple_product({18, 1, 5}, 150) * exact::inverse(den));
  // Only j = 0 lies below the order, so the quotient is 1/(q)_inf.
  const AlphaSpec lone{{1, std::nullopt, SignRule::None}, {1000, 0, 0, 1}, 1};
  CHECK(limit_rhs(lone, 100) == exact::inverse(qkit::pochhammer_infinite({1, 1, 1, std::nullopt}, 100)));
  const AlphaSpec odd{{1, 0, SignRule::None}, {1, 0, 0, 1}, 1};
  CHECK(limit_rhs(odd, 40).is_zero());
}

TEST_CASE("quintuple matches of the classical members") {
  const auto d = match_quintuple(bailey_step(canonical("SEED-D")).alpha());
  REQUIRE(d);
  CHECK(d->spec == qkit::QuintupleSpec{18, 1, 3});
  CHECK(d->shift == 0);
  const auto f = match_quintuple(bailey_step(canonical("SEED-F")).alpha());
  REQUIRE(f);
  CHECK(f->spec == qkit::QuintupleSpec{18, 1, 7});
  CHECK(f->shift == 1);
  const auto a = match_quintuple(bailey_iterate(canonical("SEED-A"), 3).alpha());
  REQUIRE(a);
  CHECK(a->spec == qkit::QuintupleSpec{21, -1, 9});
  CHECK(a->shift == 3);
  const auto i = match_quintuple(bailey_step(canonical("SEED-I")).alpha());
  REQUIRE(i);
  CHECK(i->spec == qkit::QuintupleSpec{9, 1, 1});
  CHECK(i->shift == 0);
}
