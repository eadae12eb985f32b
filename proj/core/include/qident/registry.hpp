#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qident/bailey.hpp"
#include "qident/multisum.hpp"
#include "qident/qpoly.hpp"
#include "qident/qseries.hpp"
#include "qident/xlaurent.hpp"

namespace qident::registry {

using exact::QPoly;
using exact::QSeries;
using exact::XLaurentPoly;

/// Integers indexed from start; used for the character checks.
struct IntSequence {
  long start = 0;
  std::vector<long> values;
  friend bool operator==(const IntSequence&, const IntSequence&) = default;
};

using Value = std::variant<QPoly, QSeries, XLaurentPoly, IntSequence>;

enum class Kind { Polynomial, Series, Structural };
std::string to_string(Kind k);

using Params = std::map<std::string, long>;
std::string to_string(const Params& p);

/// Global caps applied on top of each record's own ranges.
struct Limits {
  long L_max = 25;
  long v_max = 3;
  int order = 200;
};

/// Alpha replacements for seed records, used to show the suite is not vacuous.
struct Overrides {
  std::map<std::string, bailey::AlphaSpec> seed_alpha;
};

/// Prefactor num/den applied to one side: exact division for polynomials,
/// series inversion otherwise.
struct Multiplier {
  QPoly num{1};
  QPoly den{1};
  bool is_one() const { return num == QPoly(1) && den == QPoly(1); }
};
std::string to_string(const Multiplier& m);

struct ParamRange {
  std::string name;
  long min = 0;
  long max = 0;  // record's own upper bound before clipping
  enum class Cap { None, L, V, Order } cap = Cap::None;
};

using SideFn = std::function<Value(const Params&, const Overrides&)>;
using MultiplierFn = std::function<Multiplier(const Params&)>;

struct IdentityRecord {
  std::string id;
  Kind kind = Kind::Polynomial;
  std::string paper_ref;        // where the identity lives, by name
  std::string quote;            // the identity as a formula
  std::string display;          // the form as usually printed
  std::string provenance_note;  // e.g. external result, normalized display
  std::vector<ParamRange> ranges;
  SideFn lhs;
  SideFn rhs;
  MultiplierFn lhs_multiplier;  // optional
  MultiplierFn rhs_multiplier;  // optional
  /// Explicit parameter list; when empty the grid is the product of ranges.
  std::function<std::vector<Params>(const Limits&)> grid;
};

/// Declared ranges after clipping to limits, as "name in [lo, hi]".
std::string describe_ranges(const IdentityRecord& r, const Limits& limits);
std::vector<Params> parameter_grid(const IdentityRecord& r, const Limits& limits);

/// The catalog, sorted by id.
const std::vector<IdentityRecord>& catalog();
/// Throws UnknownIdentity.
const IdentityRecord& find_record(const std::string& id);

struct Mismatch {
  long exponent = 0;                // q-exponent (sequence index for IntSequence)
  std::optional<long> x_power;      // only for bivariate values
  std::string lhs_coeff;
  std::string rhs_coeff;
};

struct Evaluation {
  Value lhs;
  Value rhs;
  bool equal = false;
  std::optional<Mismatch> mismatch;
};

/// Evaluates both sides with their multipliers applied. Throws
/// UnknownIdentity or ParamsOutOfRange.
Evaluation evaluate_identity(const std::string& id, const Params& params,
                             const Overrides& overrides = {});
Evaluation evaluate_identity(const IdentityRecord& r, const Params& params,
                             const Overrides& overrides = {});

std::optional<Mismatch> compare_values(const Value& lhs, const Value& rhs);

/// Coefficient listing c_0..c_n for expand: polynomials in full, series to
/// their order, bivariate values at x = 1.
std::vector<Coeff> coefficients(const Value& v);

struct TaskResult {
  std::string id;
  Params params;
  bool pass = false;
  std::optional<Mismatch> mismatch;
  double millis = 0;
  std::optional<std::string> error;
};

struct VerifyOptions {
  Limits limits;
  std::vector<std::string> ids;  // empty means all
  unsigned jobs = 1;
  Overrides overrides;
};

struct Report {
  std::vector<TaskResult> results;  // sorted by (id, params)
  double wall_millis = 0;
  bool all_pass() const;
  std::size_t failures() const;
};

/// Runs every selected record over its clipped grid on a worker pool.
Report verify_all(const VerifyOptions& opts);

/// A chain built from a seed by v Bailey steps.
struct DerivedChain {
  IdentityRecord poly;   // F(L) by the r-sum recursion vs the alpha side
  IdentityRecord limit;  // nested multisum vs theta / (q^b;q^b)_inf
  bailey::AlphaSpec alpha;
  std::optional<bailey::QuintupleMatch> quintuple;
};

/// Throws UnknownSeed, or ParamsOutOfRange for v < 1.
DerivedChain derive_chain(const std::string& seed_id, int v);

/// The Bailey state of a seed after v steps, shared across callers.
bailey::BaileyState chain_state(const std::string& seed_id, int v);

/// The multisum limit of a seed's v-fold chain.
bailey::MultisumSpec chain_multisum(const std::string& seed_id, int v);

/// How each displayed identity is covered.
struct Coverage {
  std::string display;  // descriptive name of the display
  std::string record;   // record id, empty when out of scope
  std::string reason;   // why it is out of scope or how it is covered
};
const std::vector<Coverage>& coverage();

}  // namespace qident::registry
