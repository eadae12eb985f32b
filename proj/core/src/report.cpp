#include "qident/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "qident/version.hpp"

namespace qident::registry {

namespace {

using nlohmann::json;

json params_json(const Params& p) {
  json o = json::object();
  for (const auto& [k, v] : p) o[k] = v;
  return o;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_cell(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ';';
    s += k + "=" + std::to_string(v);
  }
  return s;
}

}  // namespace

std::string report_json(const Report& report, const RunSummary& run) {
  json results = json::array();
  for (const auto& t : report.results) {
    json r;
    r["id"] = t.id;
    r["params"] = params_json(t.params);
    r["pass"] = t.pass;
    if (t.mismatch) {
      json m;
      m["exponent"] = t.mismatch->exponent;
      if (t.mismatch->x_power) m["x_power"] = *t.mismatch->x_power;
      m["lhs_coeff"] = t.mismatch->lhs_coeff;
      m["rhs_coeff"] = t.mismatch->rhs_coeff;
      r["first_mismatch"] = m;
    } else {
      r["first_mismatch"] = nullptr;
    }
    r["millis"] = t.millis;
    if (t.error) r["error"] = *t.error;
    results.push_back(std::move(r));
  }
  json config;
  config["L_max"] = run.limits.L_max;
  config["v_max"] = run.limits.v_max;
  config["order"] = run.limits.order;
  config["jobs"] = run.jobs;
  config["ids"] = run.ids.empty() ? json("all") : json(run.ids);
  json doc;
  doc["engine_version"] = kEngineVersion;
  doc["config"] = config;
  doc["results"] = results;
  return doc.dump(2) + "\n";
}

std::string report_csv(const Report& report) {
  std::ostringstream os;
  os << "id,params,pass,exponent,x_power,lhs_coeff,rhs_coeff,millis,error\n";
  for (const auto& t : report.results) {
    os << t.id << ',' << csv_field(params_cell(t.params)) << ',' << (t.pass ? "true" : "false") << ',';
    if (t.mismatch) {
      os << t.mismatch->exponent << ',' << (t.mismatch->x_power ? std::to_string(*t.mismatch->x_power) : "")
         << ',' << t.mismatch->lhs_coeff << ',' << t.mismatch->rhs_coeff;
    } else {
      os << ",,,";
    }
    os << ',' << std::fixed << std::setprecision(3) << t.millis << ',' << csv_field(t.error.value_or("")) << '\n';
  }
  return os.str();
}

std::string report_text(const Report& report) {
  std::ostringstream os;
  std::size_t pass = 0;
  for (const auto& t : report.results) {
    if (t.pass) {
      ++pass;
      continue;
    }
    os << "FAIL " << t.id << " [" << to_string(t.params) << "]";
    if (t.mismatch) {
      os << " first mismatch at q^" << t.mismatch->exponent;
      if (t.mismatch->x_power) os << " x^" << *t.mismatch->x_power;
      os << ": lhs " << t.mismatch->lhs_coeff << ", rhs " << t.mismatch->rhs_coeff;
    }
    if (t.error) os << " error: " << *t.error;
    os << '\n';
  }
  os << pass << "/" << report.results.size() << " checks passed (" << std::fixed << std::setprecision(1)
     << report.wall_millis / 1000.0 << " s)\n";
  return os.str();
}

std::string catalog_json(const Limits& limits) {
  json arr = json::array();
  for (const auto& r : catalog()) {
    json o;
    o["id"] = r.id;
    o["kind"] = to_string(r.kind);
    o["paper_ref"] = r.paper_ref;
    o["quote"] = r.quote;
    o["display"] = r.display;
    o["provenance_note"] = r.provenance_note;
    o["ranges"] = describe_ranges(r, limits);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string catalog_csv(const Limits& limits) {
  std::ostringstream os;
  os << "id,kind,paper_ref,quote,ranges\n";
  for (const auto& r : catalog()) {
    os << r.id << ',' << to_string(r.kind) << ',' << csv_field(r.paper_ref) << ',' << csv_field(r.quote) << ','
       << csv_field(describe_ranges(r, limits)) << '\n';
  }
  return os.str();
}

std::string catalog_text(const Limits& limits) {
  std::ostringstream os;
  for (const auto& r : catalog()) {
    os << std::left << std::setw(14) << r.id << std::setw(12) << to_string(r.kind) << r.paper_ref << "\n"
       << std::string(26, ' ') << r.quote << "\n"
       << std::string(26, ' ') << "ranges: " << describe_ranges(r, limits) << "\n";
  }
  os << catalog().size() << " records\n";
  return os.str();
}

}  // namespace qident::registry
