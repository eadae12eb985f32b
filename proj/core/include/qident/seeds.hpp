#pragma once

#include <string>
#include <vector>

#include "qident/bailey.hpp"

namespace qident::registry {

using bailey::AlphaSpec;
using bailey::BinomialSlot;
using bailey::ClosedForm;
using exact::QPoly;

/// A finite seed identity F_a(L) = sum_j alpha_j [2L+a choose L-j]_{q^b}.
struct SeedInfo {
  std::string id;         // SEED-A .. SEED-I
  std::string name;       // short human description
  int a = 0;
  AlphaSpec canonical;    // alpha in the [2L+a choose L-j] slot
  AlphaSpec printed;      // alpha as usually written, in printed_slot
  BinomialSlot printed_slot = BinomialSlot::LMinusJ;
  ClosedForm closed_form;
  std::string closed_form_display;
  bool has_chain = false;  // one of the six seeds iterated into v-fold chains
};

/// All nine seeds in id order.
const std::vector<SeedInfo>& seeds();
/// Throws UnknownSeed.
const SeedInfo& seed(const std::string& id);

/// The printed form packaged for canonicalize_seed.
bailey::SeedDescriptor printed_descriptor(const SeedInfo& s);

// Closed forms, exposed for tests and the multisum tails.
QPoly seed_closed_form(const std::string& id, long L);

}  // namespace qident::registry
