#include "qident/seeds.hpp"

#include "qident/error.hpp"
#include "qident/pochhammer.hpp"

namespace qident::registry {

namespace {

using bailey::QuadraticExponent;
using bailey::SignRule;
using bailey::ThetaWeight;
using qkit::ratio_cube;
using qkit::ratio_neg_one;
using qkit::ratio_odd;

QPoly mono(long e, long c = 1) { return QPoly::monomial(static_cast<std::size_t>(e), Coeff(c)); }

QPoly F_A(long L) {
  if (L == 0) return {};
  QPoly p = ratio_neg_one(L - 1) * QPoly::from_ints({1, 1, 1}).shifted(static_cast<std::size_t>(L - 1));
  p.mul_binomial(-1, static_cast<std::size_t>(L));
  return p;
}

QPoly F_B(long L) {
  return (ratio_neg_one(L) * (QPoly(1) + mono(1) - mono(L + 1))).shifted(static_cast<std::size_t>(L));
}

QPoly F_C(long L) {
  // (1 - q^{4L+2}) / (1 - q^{2L+1}) = 1 + q^{2L+1}
  QPoly p = ratio_odd(L);
  p.mul_binomial(1, static_cast<std::size_t>(2 * L + 1));
  return p;
}

QPoly F_D(long L) { return ratio_odd(L); }
QPoly F_E(long L) { return ratio_odd(L); }
QPoly F_F(long L) { return ratio_odd(L).shifted(static_cast<std::size_t>(2 * L + 1)); }

QPoly F_G(long L) {
  if (L == 0) return QPoly(1);
  return ratio_cube(L - 1) * (QPoly(2) + mono(L) + mono(L + 1) - mono(2 * L + 1));
}

QPoly F_H(long L) {
  if (L == 0) return mono(1);
  return ratio_cube(L - 1) * (QPoly(-1) + mono(L) + mono(L + 1) + mono(2 * L + 1, 2));
}

QPoly F_I(long L) {
  if (L == 0) return QPoly::from_ints({1, 1});
  return ratio_cube(L - 1) * (QPoly(1) + mono(2 * L + 1) + mono(L, 2) + mono(L + 1, 2));
}

AlphaSpec make_alpha(int scale, int shift, SignRule sign, QuadraticExponent e, long base) {
  return AlphaSpec{ThetaWeight{scale, shift, sign}, e, base};
}

std::vector<SeedInfo> build() {
  const auto None = SignRule::None;
  const auto Alt = SignRule::Alternating;
  const auto AltS = SignRule::AlternatingShifted;
  const auto Plus = BinomialSlot::LPlusJ;
  const auto Minus = BinomialSlot::LMinusJ;
  std::vector<SeedInfo> v;
  v.push_back({"SEED-A", "mod 3 character seed, a = 0", 0,
               make_alpha(-1, 0, None, {1, 3, 2, 2}, 1), make_alpha(1, 0, None, {1, -3, 2, 2}, 1), Plus,
               F_A, "0 (L = 0); q^{L-1} (1-q^3)(1-q^L)/(1-q) (-1;q^3)_{L-1}/(-1;q)_{L-1}", true});
  v.push_back({"SEED-B", "mod 3 character seed, a = 1", 1,
               make_alpha(-1, 0, None, {1, 3, 2, 2}, 1), make_alpha(1, 0, None, {1, -3, 2, 2}, 1), Plus,
               F_B, "q^L (1+q-q^{L+1}) (-1;q^3)_L/(-1;q)_L", true});
  v.push_back({"SEED-C", "alternating seed in base q^2, a = 1 (stated twice)", 1,
               make_alpha(-1, 2, Alt, {1, 0, 0, 1}, 2), make_alpha(1, 1, Alt, {1, 0, 0, 1}, 2), Plus,
               F_C, "(q^3;q^6)_L/(q;q^2)_L (1-q^{4L+2})/(1-q^{2L+1})", true});
  v.push_back({"SEED-D", "alternating seed in base q^2, a = 0", 0,
               make_alpha(-1, 2, Alt, {1, 0, 0, 1}, 2), make_alpha(1, 1, Alt, {1, 0, 0, 1}, 2), Plus,
               F_D, "(q^3;q^6)_L/(q;q^2)_L", true});
  v.push_back({"SEED-E", "seed behind Slater's item 124", 1,
               make_alpha(1, 1, Alt, {1, 0, 0, 1}, 2), make_alpha(1, 1, Alt, {1, 0, 0, 1}, 2), Minus,
               F_E, "(q^3;q^6)_L/(q;q^2)_L", true});
  v.push_back({"SEED-F", "seed behind Slater's item 125", 1,
               make_alpha(1, 0, Alt, {1, 0, 0, 1}, 2), make_alpha(1, 0, Alt, {1, 0, 0, 1}, 2), Minus,
               F_F, "q^{2L+1} (q^3;q^6)_L/(q;q^2)_L", true});
  v.push_back({"SEED-G", "triangular-exponent seed, character (j+1)/3", 1,
               make_alpha(1, 1, Alt, {1, -1, 0, 2}, 1), make_alpha(1, 1, Alt, {1, -1, 0, 2}, 1), Minus,
               F_G, "1 (L = 0); (q^3;q^3)_{L-1}/(q;q)_{L-1} (2+q^L+q^{L+1}-q^{2L+1})", false});
  v.push_back({"SEED-H", "triangular-exponent seed, character j/3", 1,
               make_alpha(1, 0, Alt, {1, -1, 0, 2}, 1), make_alpha(1, 0, Alt, {1, -1, 0, 2}, 1), Minus,
               F_H, "q (L = 0); (q^3;q^3)_{L-1}/(q;q)_{L-1} (-1+q^L+q^{L+1}+2q^{2L+1})", false});
  v.push_back({"SEED-I", "triangular-exponent seed, character (j+2)/3", 1,
               make_alpha(1, 2, AltS, {1, -1, 0, 2}, 1), make_alpha(1, 2, AltS, {1, -1, 0, 2}, 1), Minus,
               F_I, "1+q (L = 0); (q^3;q^3)_{L-1}/(q;q)_{L-1} (1+q^{2L+1}+2q^L+2q^{L+1})", false});
  return v;
}

}  // namespace

const std::vector<SeedInfo>& seeds() {
  static const std::vector<SeedInfo> all = build();
  return all;
}

const SeedInfo& seed(const std::string& id) {
  for (const auto& s : seeds()) {
    if (s.id == id) return s;
  }
  throw Error(ErrorKind::UnknownSeed, "no seed named '" + id + "'");
}

bailey::SeedDescriptor printed_descriptor(const SeedInfo& s) {
  return {s.id, s.a, s.printed, s.printed_slot, s.closed_form};
}

QPoly seed_closed_form(const std::string& id, long L) {
  if (L < 0) throw Error(ErrorKind::ParamsOutOfRange, "L must be >= 0");
  return seed(id).closed_form(L);
}

}  // namespace qident::registry
