#include <doctest.h>

#include <json.hpp>
#include <set>

#include "qident/error.hpp"
#include "qident/registry.hpp"
#include "qident/report.hpp"
#include "qident/seeds.hpp"

using namespace qident;
using namespace qident::registry;

namespace {

Limits small() { return Limits{4, 1, 40}; }

std::set<std::string> failing(const Report& rep) {
  std::set<std::string> out;
  for (const auto& t : rep.results) {
    if (!t.pass) out.insert(t.id);
  }
  return out;
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& cat = catalog();
  CHECK(cat.size() == 38);
  std::set<std::string> ids;
  for (const auto& r : cat) {
    CHECK(ids.insert(r.id).second);
    CHECK(!r.paper_ref.empty());
    CHECK(!r.quote.empty());
    CHECK(r.lhs);
    CHECK(r.rhs);
  }
  CHECK(std::is_sorted(cat.begin(), cat.end(), [](const auto& a, const auto& b) { return a.id < b.id; }));
  for (const char* id : {"JTP-POLY", "QBT", "JTP", "QPI", "EISEN3", "CHARSUM", "CAP-POLY", "CAP", "SEED-A",
                         "SEED-I", "CHAIN-A-POLY", "CHAIN-F-LIM", "MS-PLUS", "MS-PLUSPLUS", "MS2", "RAMANUJAN",
                         "SLATER-124", "SLATER-125", "LIM-G", "LIM-H", "LIM-I"}) {
    CHECK_MESSAGE(ids.count(id), id);
  }
  CHECK(find_record("MS-PLUSPLUS").provenance_note == "external result, verified not derived");
  CHECK(find_record("CHAIN-E-POLY").provenance_note.find("display normalized") != std::string::npos);
}

TEST_CASE("coverage names only real records and reaches every record") {
  std::set<std::string> covered;
  for (const auto& c : coverage()) {
    CHECK(!c.display.empty());
    if (c.record.empty()) {
      CHECK(!c.reason.empty());
      continue;
    }
    CHECK_NOTHROW(find_record(c.record));
    covered.insert(c.record);
  }
  for (const auto& r : catalog()) {
    const bool chain = r.id.rfind("CHAIN-", 0) == 0;
    CHECK_MESSAGE((chain || covered.count(r.id)), r.id);
  }
}

TEST_CASE("evaluate_identity examples") {
  const auto a1 = evaluate_identity("SEED-A", {{"L", 1}});
  CHECK(a1.equal);
  CHECK(std::get<QPoly>(a1.lhs) == QPoly::from_ints({1, 0, 0, -1}));
  const auto a0 = evaluate_identity("SEED-A", {{"L", 0}});
  CHECK(a0.equal);
  CHECK(std::get<QPoly>(a0.rhs).is_zero());
  const auto h0 = evaluate_identity("SEED-H", {{"L", 0}});
  CHECK(h0.equal);
  CHECK(std::get<QPoly>(h0.lhs) == QPoly::from_ints({0, 1}));
  CHECK(evaluate_identity("CAP", {{"order", 0}}).equal);
  CHECK(evaluate_identity("QPI", {{"A", 6}, {"z", -1}, {"B", 1}, {"order", 50}}).equal);
}

TEST_CASE("evaluate_identity errors") {
  auto kind = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::NonzeroRemainder;
  };
  CHECK(kind([] { evaluate_identity("NOPE", {}); }) == ErrorKind::UnknownIdentity);
  CHECK(kind([] { evaluate_identity("SEED-A", {{"L", -1}}); }) == ErrorKind::ParamsOutOfRange);
  CHECK(kind([] { evaluate_identity("SEED-A", {{"L", 41}}); }) == ErrorKind::ParamsOutOfRange);
  CHECK(kind([] { evaluate_identity("SEED-A", {}); }) == ErrorKind::ParamsOutOfRange);
  CHECK(kind([] { evaluate_identity("SEED-A", {{"L", 1}, {"v", 1}}); }) == ErrorKind::ParamsOutOfRange);
  CHECK(kind([] { derive_chain("SEED-Z", 1); }) == ErrorKind::UnknownSeed);
  CHECK(kind([] { derive_chain("SEED-A", 0); }) == ErrorKind::ParamsOutOfRange);
}

TEST_CASE("multipliers are applied") {
  const auto h = evaluate_identity("LIM-H", {{"order", 30}});
  CHECK(h.equal);
  CHECK(std::get<QSeries>(h.rhs).coeff(0) == 0);
  const auto& rec = find_record("CHAIN-A-LIM");
  REQUIRE(rec.rhs_multiplier);
  CHECK(rec.rhs_multiplier({{"v", 2}, {"order", 10}}).num == QPoly::monomial(2));
}

TEST_CASE("verify_all at L_max = 0 covers the base cases") {
  VerifyOptions o;
  o.limits = Limits{0, 1, 20};
  const Report rep = verify_all(o);
  CHECK(rep.all_pass());
  std::size_t seeds_seen = 0;
  for (const auto& t : rep.results) {
    if (t.id.rfind("SEED-", 0) == 0) {
      ++seeds_seen;
      CHECK(t.params.at("L") == 0);
    }
  }
  CHECK(seeds_seen == 9);
}

TEST_CASE("verify_all results are sorted and independent of the worker count") {
  VerifyOptions o;
  o.limits = small();
  o.jobs = 1;
  const Report one = verify_all(o);
  o.jobs = 3;
  const Report three = verify_all(o);
  CHECK(one.all_pass());
  REQUIRE(one.results.size() == three.results.size());
  for (std::size_t i = 0; i < one.results.size(); ++i) {
    CHECK(one.results[i].id == three.results[i].id);
    CHECK(one.results[i].params == three.results[i].params);
    CHECK(one.results[i].pass == three.results[i].pass);
  }
  for (std::size_t i = 1; i < one.results.size(); ++i) {
    const auto& a = one.results[i - 1];
    const auto& b = one.results[i];
    CHECK(std::tie(a.id, a.params) < std::tie(b.id, b.params));
  }
}

TEST_CASE("an injected sign error fails exactly its record") {
  VerifyOptions o;
  o.limits = small();
  AlphaSpec bad = seed("SEED-F").canonical;
  bad.weight.sign = qkit::SignRule::AlternatingShifted;
  o.overrides.seed_alpha["SEED-F"] = bad;
  const Report rep = verify_all(o);
  CHECK(failing(rep) == std::set<std::string>{"SEED-F"});
  for (const auto& t : rep.results) {
    if (t.id == "SEED-F" && !t.pass) {
      REQUIRE(t.mismatch);
      CHECK(t.mismatch->lhs_coeff != t.mismatch->rhs_coeff);
    }
  }
}

TEST_CASE("derive_chain reproduces the classical members") {
  const auto d = derive_chain("SEED-D", 1);
  REQUIRE(d.quintuple);
  CHECK(d.quintuple->spec == qkit::QuintupleSpec{18, 1, 3});
  CHECK(evaluate_identity(d.limit, {{"order", 80}}).equal);
  CHECK(evaluate_identity(d.poly, {{"L", 6}}).equal);
  const auto e = derive_chain("SEED-E", 1);
  REQUIRE(e.quintuple);
  CHECK(e.quintuple->spec == qkit::QuintupleSpec{18, 1, 5});
  const auto f = derive_chain("SEED-F", 1);
  REQUIRE(f.quintuple);
  CHECK(f.quintuple->spec == qkit::QuintupleSpec{18, 1, 7});
  CHECK(f.poly.provenance_note.find("q^1 * printed") != std::string::npos);
  const auto a = derive_chain("SEED-A", 2);
  CHECK(a.poly.provenance_note.find("q^2 * printed") != std::string::npos);
  const auto b = derive_chain("SEED-B", 2);
  CHECK(b.poly.provenance_note.find("matches the printed form") != std::string::npos);
  const auto i = derive_chain("SEED-I", 1);
  REQUIRE(i.quintuple);
  CHECK(i.quintuple->spec == qkit::QuintupleSpec{9, 1, 1});
  CHECK(evaluate_identity(i.limit, {{"order", 60}}).equal);
}

TEST_CASE("catalog exports") {
  const auto doc = nlohmann::json::parse(catalog_json(Limits{}));
  REQUIRE(doc.is_array());
  CHECK(doc.size() == catalog().size());
  for (const auto& r : doc) {
    for (const char* key : {"id", "kind", "paper_ref", "quote", "ranges"}) CHECK(r.contains(key));
  }
  CHECK(describe_ranges(find_record("SEED-A"), Limits{}) == "L in [0, 25]");
  CHECK(describe_ranges(find_record("CAP"), Limits{}) == "order=200");
  CHECK(catalog_text(Limits{}).find("38 records") != std::string::npos);
}

TEST_CASE("coefficient listings") {
  const auto ev = evaluate_identity("RAMANUJAN", {{"order", 50}});
  const auto c = coefficients(ev.lhs);
  CHECK(c.size() == 51);
  for (const auto& x : c) CHECK(x.get_den() == 1);
  const auto jtp = evaluate_identity("JTP", {{"order", 4}});
  CHECK(coefficients(jtp.lhs) == coefficients(jtp.rhs));
}
