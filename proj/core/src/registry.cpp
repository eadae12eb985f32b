#include "qident/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "qident/error.hpp"
#include "qident/seeds.hpp"

namespace qident::registry {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Polynomial: return "polynomial";
    case Kind::Series: return "series";
    case Kind::Structural: return "structural";
  }
  return "?";
}

std::string to_string(const Params& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : p) {
    if (!first) os << ",";
    first = false;
    os << k << "=" << v;
  }
  return os.str();
}

std::string to_string(const Multiplier& m) {
  if (m.den == QPoly(1)) return m.num.to_string();
  return "(" + m.num.to_string() + ")/(" + m.den.to_string() + ")";
}

namespace {

long clipped_max(const ParamRange& r, const Limits& limits) {
  switch (r.cap) {
    case ParamRange::Cap::L: return std::min(r.max, limits.L_max);
    case ParamRange::Cap::V: return std::min(r.max, limits.v_max);
    case ParamRange::Cap::Order: return std::min<long>(r.max, limits.order);
    case ParamRange::Cap::None: break;
  }
  return r.max;
}

void expand_grid(const std::vector<ParamRange>& ranges, const Limits& limits, std::size_t i, Params& cur,
                 std::vector<Params>& out) {
  if (i == ranges.size()) {
    out.push_back(cur);
    return;
  }
  const auto& r = ranges[i];
  const long hi = clipped_max(r, limits);
  // An order is a truncation point, not something to sweep.
  const long lo = r.cap == ParamRange::Cap::Order ? hi : r.min;
  for (long x = lo; x <= hi; ++x) {
    cur[r.name] = x;
    expand_grid(ranges, limits, i + 1, cur, out);
  }
  cur.erase(r.name);
}

Value apply_multiplier(const Value& v, const Multiplier& m) {
  if (m.is_one()) return v;
  if (const auto* p = std::get_if<QPoly>(&v)) return exact::exact_div(*p * m.num, m.den);
  if (const auto* s = std::get_if<QSeries>(&v)) {
    const int n = s->order();
    return *s * QSeries(m.num, n) * exact::inverse(QSeries(m.den, n));
  }
  throw Error(ErrorKind::ParamsOutOfRange, "multipliers apply to polynomials and series only");
}

}  // namespace

std::string describe_ranges(const IdentityRecord& r, const Limits& limits) {
  std::ostringstream os;
  bool first = true;
  for (const auto& p : r.ranges) {
    if (!first) os << ", ";
    first = false;
    const long hi = clipped_max(p, limits);
    if (p.cap == ParamRange::Cap::Order) {
      os << p.name << "=" << hi;
    } else {
      os << p.name << " in [" << p.min << ", " << hi << "]";
    }
  }
  if (first) os << "-";
  return os.str();
}

std::vector<Params> parameter_grid(const IdentityRecord& r, const Limits& limits) {
  if (r.grid) return r.grid(limits);
  std::vector<Params> out;
  Params cur;
  expand_grid(r.ranges, limits, 0, cur, out);
  return out;
}

const IdentityRecord& find_record(const std::string& id) {
  for (const auto& r : catalog()) {
    if (r.id == id) return r;
  }
  throw Error(ErrorKind::UnknownIdentity, "unknown identity '" + id + "'");
}

std::optional<Mismatch> compare_values(const Value& lhs, const Value& rhs) {
  if (lhs.index() != rhs.index()) {
    throw Error(ErrorKind::ParamsOutOfRange, "the two sides evaluate to different kinds of value");
  }
  if (const auto* a = std::get_if<QPoly>(&lhs)) {
    const auto& b = std::get<QPoly>(rhs);
    const auto e = exact::first_mismatch(*a, b);
    if (!e) return std::nullopt;
    return Mismatch{static_cast<long>(*e), std::nullopt, a->coeff(*e).get_str(), b.coeff(*e).get_str()};
  }
  if (const auto* a = std::get_if<QSeries>(&lhs)) {
    const auto& b = std::get<QSeries>(rhs);
    const auto e = exact::first_mismatch(*a, b);
    if (!e) return std::nullopt;
    return Mismatch{static_cast<long>(*e), std::nullopt, a->coeff(*e).get_str(), b.coeff(*e).get_str()};
  }
  if (const auto* a = std::get_if<XLaurentPoly>(&lhs)) {
    const auto& b = std::get<XLaurentPoly>(rhs);
    const auto m = exact::first_mismatch(*a, b);
    if (!m) return std::nullopt;
    return Mismatch{static_cast<long>(m->q_exponent), m->x_power,
                    a->coeff(m->x_power).coeff(m->q_exponent).get_str(),
                    b.coeff(m->x_power).coeff(m->q_exponent).get_str()};
  }
  const auto& a = std::get<IntSequence>(lhs);
  const auto& b = std::get<IntSequence>(rhs);
  if (a.start != b.start) throw Error(ErrorKind::ParamsOutOfRange, "sequences start at different indices");
  const std::size_t n = std::max(a.values.size(), b.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    const long x = i < a.values.size() ? a.values[i] : 0;
    const long y = i < b.values.size() ? b.values[i] : 0;
    if (x != y) {
      return Mismatch{a.start + static_cast<long>(i), std::nullopt, std::to_string(x), std::to_string(y)};
    }
  }
  return std::nullopt;
}

std::vector<Coeff> coefficients(const Value& v) {
  std::vector<Coeff> out;
  if (const auto* p = std::get_if<QPoly>(&v)) {
    for (std::size_t e = 0; e < p->size(); ++e) out.push_back(p->coeff(e));
  } else if (const auto* s = std::get_if<QSeries>(&v)) {
    for (int e = 0; e <= s->order(); ++e) out.push_back(s->coeff(static_cast<std::size_t>(e)));
  } else if (const auto* x = std::get_if<XLaurentPoly>(&v)) {
    const QPoly p = x->at_x_one();
    for (std::size_t e = 0; e < p.size(); ++e) out.push_back(p.coeff(e));
  } else {
    for (long c : std::get<IntSequence>(v).values) out.emplace_back(c);
  }
  return out;
}

Evaluation evaluate_identity(const std::string& id, const Params& params, const Overrides& overrides) {
  return evaluate_identity(find_record(id), params, overrides);
}

Evaluation evaluate_identity(const IdentityRecord& r, const Params& params, const Overrides& overrides) {
  for (const auto& [k, v] : params) {
    const auto it = std::find_if(r.ranges.begin(), r.ranges.end(), [&](const ParamRange& p) { return p.name == k; });
    if (it == r.ranges.end()) {
      throw Error(ErrorKind::ParamsOutOfRange, r.id + " takes no parameter '" + k + "'");
    }
    if (v < it->min || v > it->max) {
      throw Error(ErrorKind::ParamsOutOfRange, r.id + ": " + k + " = " + std::to_string(v) + " outside [" +
                                                   std::to_string(it->min) + ", " + std::to_string(it->max) + "]");
    }
  }
  for (const auto& p : r.ranges) {
    if (!params.count(p.name)) throw Error(ErrorKind::ParamsOutOfRange, r.id + " needs parameter '" + p.name + "'");
  }
  Evaluation ev{r.lhs(params, overrides), r.rhs(params, overrides), false, std::nullopt};
  if (r.lhs_multiplier) ev.lhs = apply_multiplier(ev.lhs, r.lhs_multiplier(params));
  if (r.rhs_multiplier) ev.rhs = apply_multiplier(ev.rhs, r.rhs_multiplier(params));
  ev.mismatch = compare_values(ev.lhs, ev.rhs);
  ev.equal = !ev.mismatch;
  return ev;
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const TaskResult& t) { return !t.pass; }));
}

Report verify_all(const VerifyOptions& opts) {
  if (opts.limits.L_max < 0 || opts.limits.v_max < 0 || opts.limits.order < 0) {
    throw Error(ErrorKind::ParamsOutOfRange, "limits must be >= 0");
  }
  std::vector<const IdentityRecord*> selected;
  if (opts.ids.empty()) {
    for (const auto& r : catalog()) selected.push_back(&r);
  } else {
    for (const auto& id : opts.ids) selected.push_back(&find_record(id));
  }

  std::vector<TaskResult> tasks;
  std::vector<const IdentityRecord*> owners;
  for (const auto* r : selected) {
    for (auto& p : parameter_grid(*r, opts.limits)) {
      TaskResult t;
      t.id = r->id;
      t.params = std::move(p);
      tasks.push_back(std::move(t));
      owners.push_back(r);
    }
  }

  const auto wall_start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto& t = tasks[i];
      const auto start = std::chrono::steady_clock::now();
      try {
        const Evaluation ev = evaluate_identity(*owners[i], t.params, opts.overrides);
        t.pass = ev.equal;
        t.mismatch = ev.mismatch;
      } catch (const std::exception& e) {
        t.pass = false;
        t.error = e.what();
      }
      t.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::sort(tasks.begin(), tasks.end(), [](const TaskResult& a, const TaskResult& b) {
    return std::tie(a.id, a.params) < std::tie(b.id, b.params);
  });
  const double wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - wall_start).count();
  return Report{std::move(tasks), wall};
}

bailey::BaileyState chain_state(const std::string& seed_id, int v) {
  if (v < 0) throw Error(ErrorKind::ParamsOutOfRange, "v must be >= 0");
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, bailey::BaileyState> cache;
  const auto key = std::pair{seed_id, v};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  bailey::BaileyState st = v == 0 ? bailey::canonicalize_seed(printed_descriptor(seed(seed_id)))
                                  : bailey::bailey_step(chain_state(seed_id, v - 1));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(st)).first->second;
}

bailey::MultisumSpec chain_multisum(const std::string& seed_id, int v) {
  if (v < 1) throw Error(ErrorKind::ParamsOutOfRange, "v must be >= 1");
  const SeedInfo& s = seed(seed_id);
  bailey::MultisumSpec m;
  m.base = s.canonical.base_power;
  m.depth = v;
  m.quad_offset = s.a;
  m.last_linear = 0;
  m.final_offset = s.a;
  m.tail = s.closed_form;
  return m;
}

}  // namespace qident::registry
