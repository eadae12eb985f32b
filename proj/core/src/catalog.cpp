#include <algorithm>
#include <set>
#include <sstream>

#include "qident/character.hpp"
#include "qident/error.hpp"
#include "qident/pochhammer.hpp"
#include "qident/products.hpp"
#include "qident/registry.hpp"
#include "qident/seeds.hpp"

namespace qident::registry {

namespace {

using bailey::AlphaSpec;
using qkit::PochhammerSpec;
using qkit::QuadraticExponent;
using qkit::QuintupleSpec;
using qkit::SignRule;
using qkit::ThetaWeight;
using Cap = ParamRange::Cap;

constexpr long kMaxOrder = 2000;

long get(const Params& p, const char* key) { return p.at(key); }
int order_of(const Params& p) { return static_cast<int>(p.at("order")); }

QPoly mono(long e, long c = 1) { return QPoly::monomial(static_cast<std::size_t>(e), Coeff(c)); }

ParamRange L_range(long max) { return {"L", 0, max, Cap::L}; }
ParamRange v_range(long max = 4) { return {"v", 1, max, Cap::V}; }
ParamRange order_range() { return {"order", 0, kMaxOrder, Cap::Order}; }

// 1 / (q^base; q^base)_inf
QSeries inv_qinf(long base, int order) {
  return exact::inverse(qkit::pochhammer_infinite({1, base, base, std::nullopt}, order));
}

QSeries quintuple_over(const QuintupleSpec& s, long base, int order) {
  return qkit::quintuple_product(s, order) * inv_qinf(base, order);
}

// --- chains -----------------------------------------------------------------

struct ChainInfo {
  char letter;
  std::string seed_id;
  // Q(q^A, z) form of the limit, as printed, and the monomial the derived
  // multisum carries on top of it.
  QuintupleSpec (*quintuple)(long v);
  long (*monomial)(long v);
  // The v-fold alpha as printed, in its printed slot.
  AlphaSpec (*printed_alpha)(long v);
  bailey::BinomialSlot printed_slot;
  std::string note;
};

AlphaSpec alpha_of(int scale, int shift, SignRule sign, QuadraticExponent e, long base) {
  return AlphaSpec{ThetaWeight{scale, shift, sign}, e, base};
}

const std::vector<ChainInfo>& chains() {
  using S = SignRule;
  using B = bailey::BinomialSlot;
  static const std::vector<ChainInfo> all = {
      {'A', "SEED-A", [](long v) { return QuintupleSpec{6 * v + 3, -1, 3 * v}; }, [](long v) { return v; },
       [](long v) { return alpha_of(1, 0, S::None, {2 * v + 1, -3, 2 - 2 * v, 2}, 1); }, B::LPlusJ, ""},
      {'B', "SEED-B", [](long v) { return QuintupleSpec{6 * v + 3, -1, 2 * v}; }, [](long) { return 0L; },
       [](long v) { return alpha_of(1, 0, S::None, {2 * v + 1, -(2 * v + 3), 2, 2}, 1); }, B::LPlusJ, ""},
      {'C', "SEED-C", [](long v) { return QuintupleSpec{12 * v + 6, 1, 1}; }, [](long) { return 0L; },
       [](long v) { return alpha_of(1, 1, S::Alternating, {2 * v + 1, -2 * v, 0, 1}, 2); }, B::LPlusJ, ""},
      {'D', "SEED-D", [](long v) { return QuintupleSpec{12 * v + 6, 1, 2 * v + 1}; }, [](long) { return 0L; },
       [](long v) { return alpha_of(1, 1, S::Alternating, {2 * v + 1, 0, 0, 1}, 2); }, B::LPlusJ, ""},
      {'E', "SEED-E", [](long v) { return QuintupleSpec{12 * v + 6, 1, 4 * v + 1}; }, [](long) { return 0L; },
       [](long v) { return alpha_of(1, 1, S::Alternating, {2 * v + 1, 2 * v, 0, 1}, 2); }, B::LMinusJ,
       "display normalized: the printed v-fold exponent is garbled; (2v+1)j^2+2vj is the derived one"},
      {'F', "SEED-F", [](long v) { return QuintupleSpec{12 * v + 6, 1, 4 * v + 3}; }, [](long) { return 1L; },
       [](long v) { return alpha_of(1, 0, S::Alternating, {2 * v + 1, 2 * v, -1, 1}, 2); }, B::LMinusJ, ""},
  };
  return all;
}

const ChainInfo* chain_for_seed(const std::string& seed_id) {
  for (const auto& c : chains()) {
    if (c.seed_id == seed_id) return &c;
  }
  return nullptr;
}

// Compares the derived alpha with the printed one through their theta series
// and describes the monomial between them.
std::string diff_printed(const ChainInfo& c, long v, const AlphaSpec& derived) {
  AlphaSpec printed = c.printed_alpha(v);
  if (c.printed_slot == bailey::BinomialSlot::LPlusJ) printed = printed.reindexed();
  const int order = 400;
  const QSeries td = qkit::theta_sum(derived.exponent, derived.weight, order);
  const QSeries tp = qkit::theta_sum(printed.exponent, printed.weight, order);
  const auto vd = td.valuation();
  const auto vp = tp.valuation();
  std::ostringstream os;
  os << "v=" << v << ": ";
  if (vd && vp && *vd >= *vp && td == tp.shifted(*vd - *vp)) {
    const std::size_t k = *vd - *vp;
    if (k == 0) {
      os << "derived alpha matches the printed form";
    } else {
      os << "derived alpha = q^" << k << " * printed alpha";
    }
  } else {
    os << "derived alpha differs from the printed form beyond a monomial";
  }
  return os.str();
}

std::string chain_note(const ChainInfo& c) {
  std::string note;
  for (long v = 1; v <= 3; ++v) {
    if (!note.empty()) note += "; ";
    note += diff_printed(c, v, chain_state(c.seed_id, static_cast<int>(v)).alpha());
  }
  if (!c.note.empty()) note += "; " + c.note;
  return note;
}

IdentityRecord chain_poly_record(const ChainInfo& c) {
  IdentityRecord r;
  r.id = std::string("CHAIN-") + c.letter + "-POLY";
  r.kind = Kind::Polynomial;
  r.paper_ref = "v-fold polynomial identity from " + c.seed_id + " by iterating the Bailey lemma";
  r.quote = "F^{(v)}_a(L) = \\sum_j q^{vb(j^2+aj)} \\alpha_j {2L+a \\brack L-j}_{q^b}";
  r.display = "v-fold Bailey chain of " + c.seed_id;
  r.provenance_note = chain_note(c);
  r.ranges = {v_range(), L_range(40)};
  const std::string sid = c.seed_id;
  r.lhs = [sid](const Params& p, const Overrides&) -> Value {
    return chain_state(sid, static_cast<int>(get(p, "v"))).F(get(p, "L"));
  };
  r.rhs = [sid](const Params& p, const Overrides&) -> Value {
    const auto st = chain_state(sid, static_cast<int>(get(p, "v")));
    return bailey::alpha_binomial_sum(st.alpha(), st.a(), get(p, "L"));
  };
  return r;
}

IdentityRecord chain_limit_record(const ChainInfo& c) {
  IdentityRecord r;
  r.id = std::string("CHAIN-") + c.letter + "-LIM";
  r.kind = Kind::Series;
  r.paper_ref = "L -> infinity limit of the v-fold chain of " + c.seed_id;
  const QuintupleSpec s1 = c.quintuple(1);
  r.quote = "multisum = q^{m(v)} Q(q^{A(v)}, z(v)) / (q^b;q^b)_\\infty, v=1: " + qkit::to_string(s1);
  r.display = r.quote;
  r.provenance_note = c.monomial(1) == 0 ? "" : "the derived multisum carries an extra monomial over the printed product; kept as an RHS multiplier";
  r.ranges = {v_range(), order_range()};
  const std::string sid = c.seed_id;
  const long base = seed(sid).canonical.base_power;
  r.lhs = [sid](const Params& p, const Overrides&) -> Value {
    return bailey::multisum_lhs(chain_multisum(sid, static_cast<int>(get(p, "v"))), order_of(p));
  };
  auto quint = c.quintuple;
  r.rhs = [quint, base](const Params& p, const Overrides&) -> Value {
    return quintuple_over(quint(get(p, "v")), base, order_of(p));
  };
  auto monomial = c.monomial;
  if (c.monomial(1) != 0 || c.monomial(2) != 0) {
    r.rhs_multiplier = [monomial](const Params& p) { return Multiplier{mono(monomial(get(p, "v"))), QPoly(1)}; };
  }
  return r;
}

// --- simple series helpers --------------------------------------------------

// sum q^{2m^2+6mn+6n^2} / ((q)_m (q^3;q^3)_n)
QSeries capparelli_double_sum(int order) {
  QSeries acc(order);
  QSeries inv_n = QSeries::one(order);
  for (long n = 0; 6 * n * n <= order; ++n) {
    if (n > 0) inv_n.div_one_minus(static_cast<std::size_t>(3 * n));
    QSeries inv_m = inv_n;
    for (long m = 0;; ++m) {
      const long e = 2 * m * m + 6 * m * n + 6 * n * n;
      if (e > order) break;
      if (m > 0) inv_m.div_one_minus(static_cast<std::size_t>(m));
      acc += inv_m.shifted(static_cast<std::size_t>(e));
    }
  }
  return acc;
}

QPoly capparelli_poly_lhs(long L) {
  QPoly acc;
  for (long n = 0; 3 * n <= L; ++n) {
    for (long m = 0; 3 * n + 2 * m <= L; ++m) {
      const long k = 3 * n + 2 * m;
      const QPoly top = qkit::pochhammer_finite({1, L - k + 1, 1, k});
      const QPoly den = qkit::q_factorial(m) * qkit::q_factorial(n, 3);
      acc += exact::exact_div(top, den).shifted(static_cast<std::size_t>(2 * m * m + 6 * m * n + 6 * n * n));
    }
  }
  return acc;
}

IntSequence char_range(long (*f)(long)) {
  IntSequence s{-1000, {}};
  for (long j = -1000; j <= 1000; ++j) s.values.push_back(f(j));
  return s;
}

bailey::MultisumSpec limit_spec(long base, long c, long lin, long offset, std::function<QPoly(long)> tail,
                                long v = 1) {
  bailey::MultisumSpec m;
  m.base = base;
  m.depth = static_cast<int>(v);
  m.quad_offset = c;
  m.last_linear = lin;
  m.final_offset = offset;
  m.tail = std::move(tail);
  return m;
}

std::vector<IdentityRecord> build() {
  std::vector<IdentityRecord> out;
  auto add = [&](IdentityRecord r) { out.push_back(std::move(r)); };

  // --- structural ---
  {
    IdentityRecord r;
    r.id = "JTP-POLY";
    r.kind = Kind::Structural;
    r.paper_ref = "polynomial analogue of the Jacobi triple product";
    r.quote = "\\sum_{i=-n}^{m} q^{i^2} x^i {n+m \\brack n+i}_{q^2} = (-q/x;q^2)_n (-xq;q^2)_m";
    r.display = r.quote;
    r.ranges = {{"n", 0, 12, Cap::L}, {"m", 0, 12, Cap::L}};
    r.lhs = [](const Params& p, const Overrides&) -> Value {
      return qkit::triple_product_poly_sides(get(p, "n"), get(p, "m")).first;
    };
    r.rhs = [](const Params& p, const Overrides&) -> Value {
      return qkit::triple_product_poly_sides(get(p, "n"), get(p, "m")).second;
    };
    add(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "QBT";
    r.kind = Kind::Structural;
    r.paper_ref = "q-binomial theorem (m = 0 case of the polynomial triple product)";
    r.quote = "\\sum_{i=0}^{L} q^{i^2} x^i {L \\brack i}_{q^2} = (-xq;q^2)_L";
    r.display = r.quote;
    r.ranges = {L_range(20)};
    r.lhs = [](const Params& p, const Overrides&) -> Value { return qkit::qbinomial_theorem_sides(get(p, "L")).first; };
    r.rhs = [](const Params& p, const Overrides&) -> Value { return qkit::qbinomial_theorem_sides(get(p, "L")).second; };
    add(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "JTP";
    r.kind = Kind::Structural;
    r.paper_ref = "Jacobi triple product";
    r.quote = "\\sum_{i} q^{i^2} x^i = (-q/x, -xq, q^2; q^2)_\\infty";
    r.display = r.quote;
    r.ranges = {{"order", 0, 400, Cap::Order}};
    r.lhs = [](const Params& p, const Overrides&) -> Value {
      return qkit::jacobi_triple_product_sides(order_of(p)).first;
    };
    r.rhs = [](const Params& p, const Overrides&) -> Value {
      return qkit::jacobi_triple_product_sides(order_of(p)).second;
    };
    add(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "QPI";
    r.kind = Kind::Series;
    r.paper_ref = "quintuple product identity, at every specialization used in the catalog";
    r.quote = "\\sum_k (-1)^k q^{(3k^2-k)/2} z^{3k} (1+zq^k) = (q,-z,-q/z;q)_\\infty (q/z^2, z^2 q; q^2)_\\infty";
    r.display = r.quote;
    r.ranges = {{"A", 1, 100000, Cap::None}, {"z", -1, 1, Cap::None}, {"B", 1, 100000, Cap::None}, order_range()};
    r.grid = [](const Limits& lim) {
      std::set<QuintupleSpec> specs = {{6, -1, 1}, {9, 1, 2}, {9, 1, 4}, {18, 1, 3}, {18, 1, 5}, {18, 1, 7}};
      for (long v = 1; v <= std::max<long>(lim.v_max, 1); ++v) {
        for (const auto& c : chains()) specs.insert(c.quintuple(v));
        specs.insert({6 * v + 3, -1, v + 1});
      }
      std::vector<Params> g;
      const long order = std::min<long>(lim.order, kMaxOrder);
      for (const auto& s : specs) g.push_back({{"A", s.A}, {"z", s.z_sign}, {"B", s.B}, {"order", order}});
      return g;
    };
    auto spec = [](const Params& p) {
      const long z = get(p, "z");
      if (z != 1 && z != -1) throw Error(ErrorKind::ParamsOutOfRange, "z must be +1 or -1");
      return QuintupleSpec{get(p, "A"), static_cast<int>(z), get(p, "B")};
    };
    r.lhs = [spec](const Params& p, const Overrides&) -> Value { return qkit::quintuple_sum(spec(p), order_of(p)); };
    r.rhs = [spec](const Params& p, const Overrides&) -> Value {
      return qkit::quintuple_product(spec(p), order_of(p));
    };
    add(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "EISEN3";
    r.kind = Kind::Structural;
    r.paper_ref = "Eisenstein formula for the Legendre symbol at p = 3";
    r.quote = "(j/3) = (w^j - \\bar w^j)/(w - \\bar w),  w = e^{2\\pi i/3},  -1000 <= j <= 1000";
    r.display = r.quote;
    r.lhs = [](const Params&, const Overrides&) -> Value {
      return char_range([](long j) -> long { return qkit::legendre3(j); });
    };
    r.rhs = [](const Params&, const Overrides&) -> Value { return char_range(qkit::eisenstein_chi); };
    add(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "CHARSUM";
    r.kind = Kind::Structural;
    r.paper_ref = "vanishing sum of three shifted characters";
    r.quote = "(j/3) + ((j+1)/3) + ((j+2)/3) = 0,  -1000 <= j <= 1000";
    r.display = r.quote;
    r.lhs = [](const Params&, const Overrides&) -> Value {
      return char_range([](long j) -> long { return qkit::legendre3(j) + qkit::legendre3(j + 1) + qkit::legendre3(j + 2); });
    };
    r.rhs = [](const Params&, const Overrides&) -> Value { return char_range([](long) { return 0L; }); };
    add(std::move(r));
  }

  // --- Capparelli ---
  {
    IdentityRecord r;
    r.id = "CAP-POLY";
    r.kind = Kind::Polynomial;
    r.paper_ref = "polynomial refinement of Capparelli's identity";
    r.quote =
        "\\sum_{m,n} q^{2m^2+6mn+6n^2} (q^{L-3n-2m+1};q)_{3n+2m} / ((q)_m (q^3;q^3)_n)"
        " = \\sum_j ((j+1)/3) q^{j^2} {2L \\brack L-j}";
    r.display = r.quote;
    r.ranges = {L_range(25)};
    r.lhs = [](const Params& p, const Overrides&) -> Value { return capparelli_poly_lhs(get(p, "L")); };
    r.rhs = [](const Params& p, const Overrides&) -> Value {
      const AlphaSpec a{ThetaWeight{1, 1, SignRule::None}, QuadraticExponent{1, 0, 0, 1}, 1};
      return bailey::alpha_binomial_sum(a, 0, get(p, "L"));
    };
    add(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "CAP";
    r.kind = Kind::Series;
    r.paper_ref = "Capparelli's identity, analytic form";
    r.quote = "\\sum_{m,n} q^{2m^2+6mn+6n^2} / ((q)_m (q^3;q^3)_n) = Q(q^6, -q) / (q)_\\infty";
    r.display = r.quote;
    r.ranges = {order_range()};
    r.lhs = [](const Params& p, const Overrides&) -> Value { return capparelli_double_sum(order_of(p)); };
    r.rhs = [](const Params& p, const Overrides&) -> Value { return quintuple_over({6, -1, 1}, 1, order_of(p)); };
    add(std::move(r));
  }

  // --- seeds ---
  for (const auto& s : seeds()) {
    IdentityRecord r;
    r.id = s.id;
    r.kind = Kind::Polynomial;
    r.paper_ref = "seed identity: " + s.name;
    r.quote = "\\sum_j \\alpha_j {2L+" + std::to_string(s.a) + " \\brack L" +
              (s.printed_slot == BinomialSlot::LPlusJ ? "+" : "-") + "j}_{q^" +
              std::to_string(s.canonical.base_power) + "} = " + s.closed_form_display;
    r.display = "alpha_j = " + bailey::to_string(s.printed);
    if (s.id == "SEED-C") r.provenance_note = "stated twice in the source; one record covers both";
    if (s.printed_slot == BinomialSlot::LPlusJ) {
      r.provenance_note += std::string(r.provenance_note.empty() ? "" : "; ") +
                           "printed with [2L+a choose L+j]; re-indexed j -> -j";
    }
    r.ranges = {L_range(40)};
    const std::string id = s.id;
    r.lhs = [id](const Params& p, const Overrides&) -> Value { return seed(id).closed_form(get(p, "L")); };
    r.rhs = [id](const Params& p, const Overrides& o) -> Value {
      const SeedInfo& info = seed(id);
      const auto it = o.seed_alpha.find(id);
      const AlphaSpec& a = it != o.seed_alpha.end() ? it->second : info.canonical;
      return bailey::alpha_binomial_sum(a, info.a, get(p, "L"));
    };
    add(std::move(r));
  }

  // --- chains ---
  for (const auto& c : chains()) {
    add(chain_poly_record(c));
    add(chain_limit_record(c));
  }

  // --- printed multisums ---
  {
    IdentityRecord r;
    r.id = "MS-PLUS";
    r.kind = Kind::Series;
    r.paper_ref = "v-fold multisum limit of the a = 1 mod 3 character chain";
    r.quote =
        "\\sum q^{N_1(N_1+1)+...+N_v(N_v+1)+n_v} (-1;q^3)_{n_v}(1+q-q^{n_v+1}) / "
        "((q)_{n_1}...(q)_{n_{v-1}}(q)_{2n_v+1}(-1;q)_{n_v}) = Q(q^{6v+3},-q^{2v})/(q)_\\infty";
    r.display = r.quote;
    r.ranges = {v_range(), order_range()};
    r.lhs = [](const Params& p, const Overrides&) -> Value {
      auto tail = [](long n) { return qkit::ratio_neg_one(n) * (QPoly(1) + mono(1) - mono(n + 1)); };
      return bailey::multisum_lhs(limit_spec(1, 1, 1, 1, tail, get(p, "v")), order_of(p));
    };
    r.rhs = [](const Params& p, const Overrides&) -> Value {
      const long v = get(p, "v");
      return quintuple_over({6 * v + 3, -1, 2 * v}, 1, order_of(p));
    };
    add(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "MS-PLUSPLUS";
    r.kind = Kind::Series;
    r.paper_ref = "companion v-fold multisum with a = 0 Pochhammer tail";
    r.quote =
        "\\sum q^{N_1^2+...+N_v^2} (-1;q^3)_{n_v} / ((q)_{n_1}...(q)_{n_{v-1}}(q)_{2n_v}(-1;q)_{n_v}) = "
        "Q(q^{6v+3},-q^{v+1})/(q)_\\infty";
    r.display = r.quote;
    r.provenance_note = "external result, verified not derived";
    r.ranges = {v_range(), order_range()};
    r.lhs = [](const Params& p, const Overrides&) -> Value {
      return bailey::multisum_lhs(limit_spec(1, 0, 0, 0, qkit::ratio_neg_one, get(p, "v")), order_of(p));
    };
    r.rhs = [](const Params& p, const Overrides&) -> Value {
      const long v = get(p, "v");
      return quintuple_over({6 * v + 3, -1, v + 1}, 1, order_of(p));
    };
    add(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "MS2";
    r.kind = Kind::Series;
    r.paper_ref = "v-fold multisum in base q^2 from the (q^3;q^6)/(q;q^2) seed";
    r.quote =
        "\\sum q^{2N_1(N_1+1)+...+2N_v(N_v+1)} (q^3;q^6)_{n_v} / ((q^2;q^2)_{n_1}...(q^2;q^2)_{n_{v-1}}"
        "(q^2;q^2)_{2n_v}(q;q^2)_{n_v+1}) = Q(q^{12v+6},q)/(q^2;q^2)_\\infty";
    r.display = r.quote;
    r.ranges = {v_range(), order_range()};
    r.lhs = [](const Params& p, const Overrides&) -> Value {
      auto m = limit_spec(2, 1, 0, 0, qkit::ratio_odd, get(p, "v"));
      m.tail_denominator = [](long n) {
        QPoly d(1);
        d.mul_binomial(-1, static_cast<std::size_t>(2 * n + 1));
        return d;
      };
      return bailey::multisum_lhs(m, order_of(p));
    };
    r.rhs = [](const Params& p, const Overrides&) -> Value {
      const long v = get(p, "v");
      return quintuple_over({12 * v + 6, 1, 1}, 2, order_of(p));
    };
    add(std::move(r));
  }

  // --- named specializations, left side from the engine ---
  struct Named {
    const char* id;
    const char* seed;
    QuintupleSpec spec;
    long monomial;
    const char* ref;
  };
  for (const Named& n : {Named{"RAMANUJAN", "SEED-D", {18, 1, 3}, 0, "Ramanujan's lost notebook entry (Andrews-Berndt)"},
                         Named{"SLATER-124", "SEED-E", {18, 1, 5}, 0, "Slater's list, item 124"},
                         Named{"SLATER-125", "SEED-F", {18, 1, 7}, 1, "Slater's list, item 125"}}) {
    IdentityRecord r;
    r.id = n.id;
    r.kind = Kind::Series;
    r.paper_ref = std::string(n.ref) + "; v = 1 member of the " + n.seed + " chain";
    r.quote = "multisum = " + std::string(n.monomial ? "q " : "") + qkit::to_string(n.spec) + " / (q^2;q^2)_\\infty";
    r.display = r.quote;
    r.provenance_note = "left side derived by one Bailey step from " + std::string(n.seed);
    r.ranges = {order_range()};
    const std::string sid = n.seed;
    r.lhs = [sid](const Params& p, const Overrides&) -> Value {
      return bailey::multisum_lhs(chain_multisum(sid, 1), order_of(p));
    };
    const QuintupleSpec spec = n.spec;
    r.rhs = [spec](const Params& p, const Overrides&) -> Value { return quintuple_over(spec, 2, order_of(p)); };
    if (n.monomial) r.rhs_multiplier = [m = n.monomial](const Params&) { return Multiplier{mono(m), QPoly(1)}; };
    add(std::move(r));
  }

  // --- single-sum limits of the triangular-exponent seeds ---
  const Multiplier one_minus_q{QPoly::from_ints({1, -1}), QPoly(1)};
  {
    IdentityRecord r;
    r.id = "LIM-G";
    r.kind = Kind::Series;
    r.paper_ref = "single-sum limit of SEED-G";
    r.quote = "\\sum_n q^{n^2+n} F_G(n) / (q)_{2n+1} (1-q) = Q(q^9, q^2) / (q^2;q)_\\infty";
    r.display = r.quote;
    r.ranges = {order_range()};
    r.lhs = [](const Params& p, const Overrides&) -> Value {
      return bailey::multisum_lhs(chain_multisum("SEED-G", 1), order_of(p));
    };
    r.lhs_multiplier = [one_minus_q](const Params&) { return one_minus_q; };
    r.rhs = [](const Params& p, const Overrides&) -> Value {
      const int N = order_of(p);
      return qkit::quintuple_product({9, 1, 2}, N) * exact::inverse(qkit::pochhammer_infinite({1, 2, 1, std::nullopt}, N));
    };
    add(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "LIM-H";
    r.kind = Kind::Series;
    r.paper_ref = "single-sum limit of SEED-H";
    r.quote = "\\sum_n q^{n^2+n} F_H(n) / (q)_{2n+1} (1-q) = q Q(q^9, q^4) / (q^2;q)_\\infty";
    r.display = r.quote;
    r.ranges = {order_range()};
    r.lhs = [](const Params& p, const Overrides&) -> Value {
      return bailey::multisum_lhs(chain_multisum("SEED-H", 1), order_of(p));
    };
    r.lhs_multiplier = [one_minus_q](const Params&) { return one_minus_q; };
    r.rhs = [](const Params& p, const Overrides&) -> Value {
      const int N = order_of(p);
      return qkit::quintuple_product({9, 1, 4}, N) * exact::inverse(qkit::pochhammer_infinite({1, 2, 1, std::nullopt}, N));
    };
    r.rhs_multiplier = [](const Params&) { return Multiplier{mono(1), QPoly(1)}; };
    add(std::move(r));
  }
  {
    IdentityRecord r;
    r.id = "LIM-I";
    r.kind = Kind::Series;
    r.paper_ref = "single-sum limit of SEED-I after dividing out 1+q";
    r.quote =
        "\\sum_n q^{n^2+n} F_I(n)/(1+q) / (q)_{2n+1} (1-q) = "
        "(q^9,-q^8,-q^{10};q^9)_\\infty (q^7,q^{11};q^{18})_\\infty / (q^2;q)_\\infty";
    r.display = r.quote;
    r.provenance_note = "Q(q^9, q^8) is not a valid specialization; the right side is the explicit product";
    r.ranges = {order_range()};
    r.lhs = [](const Params& p, const Overrides&) -> Value {
      auto m = chain_multisum("SEED-I", 1);
      m.tail = [](long n) { return exact::exact_div(seed_closed_form("SEED-I", n), QPoly::from_ints({1, 1})); };
      return bailey::multisum_lhs(m, order_of(p));
    };
    r.lhs_multiplier = [one_minus_q](const Params&) { return one_minus_q; };
    r.rhs = [](const Params& p, const Overrides&) -> Value {
      const int N = order_of(p);
      QSeries prod = QSeries::one(N);
      for (const PochhammerSpec& f : {PochhammerSpec{1, 9, 9, std::nullopt}, PochhammerSpec{-1, 8, 9, std::nullopt},
                                      PochhammerSpec{-1, 10, 9, std::nullopt}, PochhammerSpec{1, 7, 18, std::nullopt},
                                      PochhammerSpec{1, 11, 18, std::nullopt}}) {
        prod *= qkit::pochhammer_infinite(f, N);
      }
      return prod * exact::inverse(qkit::pochhammer_infinite({1, 2, 1, std::nullopt}, N));
    };
    add(std::move(r));
  }

  std::sort(out.begin(), out.end(), [](const IdentityRecord& a, const IdentityRecord& b) { return a.id < b.id; });
  return out;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
  static const std::vector<IdentityRecord> all = build();
  return all;
}

DerivedChain derive_chain(const std::string& seed_id, int v) {
  if (v < 1) throw Error(ErrorKind::ParamsOutOfRange, "v must be >= 1");
  const SeedInfo& s = seed(seed_id);
  const bailey::BaileyState st = chain_state(seed_id, v);
  DerivedChain out;
  out.alpha = st.alpha();
  out.quintuple = bailey::match_quintuple(out.alpha);
  const std::string tag = s.id + " v=" + std::to_string(v);

  std::string note;
  if (const ChainInfo* c = chain_for_seed(seed_id)) {
    note = diff_printed(*c, v, out.alpha);
    if (!c->note.empty()) note += "; " + c->note;
  }

  IdentityRecord& p = out.poly;
  p.id = "DERIVED-" + s.id.substr(5) + "-POLY";
  p.kind = Kind::Polynomial;
  p.paper_ref = "Bailey chain of " + s.id;
  p.quote = "F(L) = \\sum_j \\alpha_j {2L+" + std::to_string(s.a) + " \\brack L-j}, alpha_j = " + bailey::to_string(out.alpha);
  p.display = tag;
  p.provenance_note = note;
  p.ranges = {L_range(40)};
  p.lhs = [st](const Params& prm, const Overrides&) -> Value { return st.F(get(prm, "L")); };
  p.rhs = [st](const Params& prm, const Overrides&) -> Value {
    return bailey::alpha_binomial_sum(st.alpha(), st.a(), get(prm, "L"));
  };

  IdentityRecord& l = out.limit;
  l.id = "DERIVED-" + s.id.substr(5) + "-LIM";
  l.kind = Kind::Series;
  l.paper_ref = "L -> infinity limit of the Bailey chain of " + s.id;
  l.display = tag;
  l.provenance_note = note;
  l.ranges = {order_range()};
  const auto ms = chain_multisum(seed_id, v);
  l.lhs = [ms](const Params& prm, const Overrides&) -> Value { return bailey::multisum_lhs(ms, order_of(prm)); };
  const long base = s.canonical.base_power;
  if (out.quintuple) {
    const auto m = *out.quintuple;
    l.quote = "multisum = " + std::string(m.scale < 0 ? "-" : "") + "q^" + std::to_string(m.shift) + " " +
              qkit::to_string(m.spec) + " / (q^" + std::to_string(base) + ";q^" + std::to_string(base) + ")_\\infty";
    l.rhs = [m, base](const Params& prm, const Overrides&) -> Value {
      return quintuple_over(m.spec, base, order_of(prm));
    };
    l.rhs_multiplier = [m](const Params&) { return Multiplier{mono(m.shift, m.scale), QPoly(1)}; };
  } else {
    l.quote = "multisum = theta(alpha) / (q^b;q^b)_\\infty";
    const AlphaSpec a = out.alpha;
    l.rhs = [a](const Params& prm, const Overrides&) -> Value { return bailey::limit_rhs(a, order_of(prm)); };
  }
  return out;
}

const std::vector<Coverage>& coverage() {
  static const std::vector<Coverage> all = {
      {"q-Pochhammer symbol", "", "definition; exercised by the pochhammer unit tests"},
      {"Gaussian binomial coefficient", "", "definition; checked against the product formula"},
      {"Gaussian binomial recurrence", "", "builds the binomial table; checked against the product formula"},
      {"limits of the Gaussian binomial and finite Pochhammer", "", "used by every L -> infinity passage; covered by the finite-to-limit tests"},
      {"Legendre symbol mod 3", "EISEN3", ""},
      {"Capparelli polynomial identity", "CAP-POLY", ""},
      {"Capparelli analytic identity", "CAP", ""},
      {"definition of Q(q, z)", "QPI", "product side of every quintuple check"},
      {"quintuple product identity", "QPI", ""},
      {"polynomial Jacobi triple product", "JTP-POLY", ""},
      {"q-binomial theorem", "QBT", ""},
      {"Jacobi triple product", "JTP", ""},
      {"Eisenstein formula at p = 3", "EISEN3", ""},
      {"special case of the Bailey lemma", "CHAIN-A-POLY", "every CHAIN-*-POLY record checks it after each step"},
      {"general Bailey lemma with free parameters", "", "out of scope"},
      {"mod 3 character seed, a = 0", "SEED-A", ""},
      {"mod 3 character seed, a = 1", "SEED-B", ""},
      {"alternating base q^2 seed, a = 1", "SEED-C", "stated twice; one record"},
      {"alternating base q^2 seed, a = 0", "SEED-D", ""},
      {"seed behind Slater 124", "SEED-E", ""},
      {"seed behind Slater 125", "SEED-F", ""},
      {"v-fold chains of the six seeds", "CHAIN-A-POLY", "CHAIN-A..F-POLY"},
      {"v-fold multisum limits of the six seeds", "CHAIN-A-LIM", "CHAIN-A..F-LIM"},
      {"multisum of the a = 1 character chain", "MS-PLUS", ""},
      {"companion multisum with a = 0 tail", "MS-PLUSPLUS", "external result"},
      {"base q^2 multisum", "MS2", ""},
      {"Ramanujan's entry", "RAMANUJAN", ""},
      {"Slater 124", "SLATER-124", ""},
      {"Slater 125", "SLATER-125", ""},
      {"triangular seed, character (j+1)/3", "SEED-G", ""},
      {"triangular seed, character j/3", "SEED-H", ""},
      {"triangular seed, character (j+2)/3", "SEED-I", ""},
      {"single-sum limit of the (j+1)/3 seed", "LIM-G", ""},
      {"single-sum limit of the j/3 seed", "LIM-H", ""},
      {"single-sum limit of the (j+2)/3 seed", "LIM-I", "after division by 1+q"},
      {"three shifted characters sum to zero", "CHARSUM", ""},
  };
  return all;
}

}  // namespace qident::registry
