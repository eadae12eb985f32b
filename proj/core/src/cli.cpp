#include "qident/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <thread>

#include "qident/error.hpp"
#include "qident/report.hpp"
#include "qident/version.hpp"

namespace qident::cli {

namespace {

using registry::Limits;

struct Options {
  std::vector<std::string> ids;
  bool all = false;
  long L_max = 25;
  long v_max = 3;
  long order = 200;
  std::string output = "text";
  unsigned jobs = 1;
  // expand
  std::string side = "lhs";
  std::vector<std::string> params;
  std::optional<long> L;
  std::optional<long> v;
};

bool is_usage_error(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::UnknownIdentity:
    case ErrorKind::UnknownSeed:
    case ErrorKind::ParamsOutOfRange:
      return true;
    default:
      return false;
  }
}

void check_limits(const Options& o) {
  if (o.L_max < 0) throw Error(ErrorKind::ParamsOutOfRange, "--Lmax must be >= 0");
  if (o.v_max < 0) throw Error(ErrorKind::ParamsOutOfRange, "--vmax must be >= 0");
  if (o.order < 0) throw Error(ErrorKind::ParamsOutOfRange, "--order must be >= 0");
  if (o.order > 100000) throw Error(ErrorKind::ParamsOutOfRange, "--order is unreasonably large");
  if (o.jobs < 1) throw Error(ErrorKind::ParamsOutOfRange, "--jobs must be >= 1");
}

Limits limits_of(const Options& o) { return Limits{o.L_max, o.v_max, static_cast<int>(o.order)}; }

int cmd_verify(const Options& o, std::ostream& out) {
  check_limits(o);
  if (o.ids.empty() && !o.all) throw Error(ErrorKind::ParamsOutOfRange, "name identities to verify or pass --all");
  registry::VerifyOptions vo;
  vo.limits = limits_of(o);
  vo.jobs = o.jobs;
  if (!o.all) vo.ids = o.ids;
  for (const auto& id : vo.ids) registry::find_record(id);
  const registry::Report rep = registry::verify_all(vo);
  if (o.output == "json") {
    out << registry::report_json(rep, {vo.limits, vo.jobs, vo.ids});
  } else if (o.output == "csv") {
    out << registry::report_csv(rep);
  } else {
    out << registry::report_text(rep);
  }
  return rep.all_pass() ? kExitPass : kExitFail;
}

registry::Params expand_params(const registry::IdentityRecord& r, const Options& o) {
  registry::Params p;
  for (const auto& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParamsOutOfRange, "--param expects name=value, got '" + kv + "'");
    try {
      p[kv.substr(0, eq)] = std::stol(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParamsOutOfRange, "bad integer in --param '" + kv + "'");
    }
  }
  for (const auto& range : r.ranges) {
    if (p.count(range.name)) continue;
    if (range.name == "order") {
      p["order"] = o.order;
    } else if (range.name == "L" && o.L) {
      p["L"] = *o.L;
    } else if (range.name == "v" && o.v) {
      p["v"] = *o.v;
    } else {
      p[range.name] = range.min;
    }
  }
  return p;
}

int cmd_expand(const Options& o, std::ostream& out) {
  check_limits(o);
  if (o.ids.size() != 1) throw Error(ErrorKind::ParamsOutOfRange, "expand takes exactly one identity id");
  if (o.side != "lhs" && o.side != "rhs") throw Error(ErrorKind::ParamsOutOfRange, "--side must be lhs or rhs");
  const auto& rec = registry::find_record(o.ids.front());
  const auto params = expand_params(rec, o);
  const auto ev = registry::evaluate_identity(rec, params);
  const auto coeffs = registry::coefficients(o.side == "lhs" ? ev.lhs : ev.rhs);
  if (o.output == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      arr.push_back({{"exponent", e}, {"numerator", coeffs[e].get_num().get_str()},
                     {"denominator", coeffs[e].get_den().get_str()}});
    }
    nlohmann::json doc{{"id", rec.id}, {"side", o.side}, {"params", params}, {"coefficients", arr}};
    out << doc.dump(2) << "\n";
  } else if (o.output == "csv") {
    out << "exponent,numerator,denominator\n";
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      out << e << ',' << coeffs[e].get_num().get_str() << ',' << coeffs[e].get_den().get_str() << '\n';
    }
  } else {
    out << rec.id << " " << o.side << " [" << registry::to_string(params) << "]\n";
    for (std::size_t e = 0; e < coeffs.size(); ++e) out << "c_" << e << " = " << coeffs[e].get_str() << '\n';
  }
  return kExitPass;
}

int cmd_list(const Options& o, std::ostream& out) {
  check_limits(o);
  const Limits lim = limits_of(o);
  if (o.output == "json") {
    out << registry::catalog_json(lim);
  } else if (o.output == "csv") {
    out << registry::catalog_csv(lim);
  } else {
    out << registry::catalog_text(lim);
  }
  return kExitPass;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  registry::VerifyOptions vo;
  vo.limits = Limits{5, 1, 60};
  vo.jobs = o.jobs;
  const auto rep = registry::verify_all(vo);
  out << "selftest: " << registry::report_text(rep);
  return rep.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-series and Bailey chain identities", "qident"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));
  Options o;
  const std::vector<std::string> outputs = {"json", "csv", "text"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "Output format")->check(CLI::IsMember(outputs));
  };

  auto* verify = app.add_subcommand("verify", "Verify identities over their parameter ranges");
  verify->add_option("ids", o.ids, "Identity ids");
  verify->add_flag("--all", o.all, "Verify the whole catalog");
  verify->add_option("--Lmax", o.L_max, "Largest L for polynomial identities")->capture_default_str();
  verify->add_option("--vmax", o.v_max, "Largest chain depth v")->capture_default_str();
  verify->add_option("--order", o.order, "Truncation order for series")->capture_default_str();
  verify->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  add_common(verify);

  auto* expand = app.add_subcommand("expand", "Print the coefficients of one side of an identity");
  expand->add_option("id", o.ids, "Identity id")->required()->expected(1);
  expand->add_option("--side", o.side, "lhs or rhs")->capture_default_str();
  expand->add_option("--order", o.order, "Truncation order for series")->capture_default_str();
  expand->add_option("--L", o.L, "L for polynomial identities");
  expand->add_option("--v", o.v, "Chain depth v");
  expand->add_option("--param", o.params, "Other parameters as name=value");
  add_common(expand);

  auto* list = app.add_subcommand("list", "List the catalog");
  list->add_option("--Lmax", o.L_max, "Clip displayed L ranges");
  list->add_option("--vmax", o.v_max, "Clip displayed v ranges");
  list->add_option("--order", o.order, "Displayed series order");
  add_common(list);

  auto* selftest = app.add_subcommand("selftest", "Quick run of the whole catalog at small sizes");
  selftest->add_option("--jobs", o.jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::CallForVersion&) {
    out << kEngineVersion << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "qident: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*expand) return cmd_expand(o, out);
    if (*list) return cmd_list(o, out);
    return cmd_selftest(o, out);
  } catch (const Error& e) {
    err << "qident: " << e.what() << "\n";
    return is_usage_error(e) ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    err << "qident: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace qident::cli
