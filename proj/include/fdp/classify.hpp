#pragma once

#include <functional>
#include <vector>

#include "fdp/dp1.hpp"
#include "fdp/fedder.hpp"
#include "fdp/pgl2.hpp"

namespace fdp {

// The coefficient-side condition of the splitting theorem, evaluated after
// completing the square/cube:
//   p = 5: a4 = 0 and a6 in span{s^6, s^5 t, s t^5, t^6}
//   p = 3: a2 = 0 and a4 in span{s^4, s^3 t, s t^3, t^4}
//   p = 2: a1 = 0
// The theorem states this is equivalent to the section ring NOT being
// F-split; classify() checks both sides independently.
bool lemma_predicate(const DP1Equation& eq);

struct ClassificationReport {
  uint32_t p;
  FedderVerdict fedder;
  bool predicate;
  bool consistent;  // fedder.f_split == !predicate
  JInvariant j;
  // For p in {3, 5}: the PGL2 class of the reduced discriminant divisor.
  // For p = 2 with a1 = 0: the class of the branch divisor roots(a3).
  // `other` whenever the relevant form vanishes identically, splits beyond
  // the field cap, or (p = 2) a1 != 0.
  DeltaClassResult configuration;
  SmoothnessReport smoothness;
  int fibers_checked;
  bool fibers_agree;  // supersingular <=> c4 = 0 held on every checked fiber
  DP1Equation normalized;
};

ClassificationReport classify(const DP1Equation& eq, int search_bound = 6);

// ---------------------------------------------------------------------------
// Exhaustive / sampled census comparing the Fedder verdict against the
// coefficient predicate instance by instance.

enum class CensusSpace {
  full,        // all five coefficient forms free (characteristic 2 only)
  normalized,  // the completed shape: p=2 full, p=3 (a2,a4,a6), p=5 (a4,a6)
  a6_only,     // the slice a1 = a2 = a3 = a4 = 0
};

struct CensusSpec {
  uint32_t p = 2;
  int field_degree = 1;  // coefficients range over F_{p^degree}, order <= 256
  CensusSpace space = CensusSpace::full;
  bool exhaustive = true;
  // Number of draws when !exhaustive.  Sample k (0-based) is generated
  // digit by digit, in layout order, from a SplitMix stream seeded with
  // seed ^ ((k+1) * 0x9E3779B97F4A7C15), each digit via bounded(q) — so runs
  // are reproducible and independent of the worker count.
  uint64_t samples = 0;
  uint64_t seed = 0;
  int workers = 1;
  uint64_t exhaustive_ceiling = 300000000;  // refuse larger exhaustive runs
};

struct CensusMismatch {
  uint64_t index;  // instance index (exhaustive) or sample number
  // Field-element indices (Field::from_index), one per free coefficient.  The
  // free forms appear in the order a1, a2, a3, a4, a6 (restricted to the
  // space), each contributing digits c0..cd where ck multiplies s^(d-k) t^k.
  // In exhaustive mode, digit 0 is the fastest-varying radix of `index`.
  std::vector<uint16_t> digits;
  bool f_split;
  bool predicate;
  std::string equation;
};

struct CensusSummary {
  CensusSpec spec;
  uint64_t space_size;  // of the coefficient space (exhaustive runs scan all)
  uint64_t scanned;
  uint64_t non_f_split;
  uint64_t mismatch_count;
  std::vector<CensusMismatch> mismatches;  // first few, in index order
  double seconds;
};

using CensusProgress = std::function<void(uint64_t done, uint64_t total)>;

CensusSummary census(const CensusSpec& spec, const CensusProgress& progress = {});

}  // namespace fdp
