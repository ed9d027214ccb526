#pragma once

#include <cstdint>
#include <string>

namespace tuttekit {

enum class Verdict {
  HoldsOnSamples,  // every sampled point satisfied the property
  Falsified,       // witness carries a point violating it
  ProvenExact,     // complete check (all coefficients / all subsets / all roots)
  Inconclusive,    // search exhausted its budget without a decision
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HoldsOnSamples: return "holds-on-samples";
    case Verdict::Falsified: return "falsified";
    case Verdict::ProvenExact: return "proven-exact";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Inconclusive;
  long samples = 0;
  uint64_t seed = 0;
  // exact witnesses are rational strings; float witnesses state their tolerance
  std::string witness;
  std::string detail;

  bool falsified() const { return verdict == Verdict::Falsified; }
};

}  // namespace tuttekit
