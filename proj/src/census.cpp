#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "fdp/classify.hpp"
#include "fdp/upoly.hpp"

namespace fdp {

namespace {

constexpr std::size_t kMaxRecordedMismatches = 32;

// Lookup-table arithmetic for F_q, q <= 256.  Element indices agree with
// Field::from_index, so results can be lifted back to FieldElem exactly.
struct SmallFq {
  uint32_t q;
  uint32_t p;
  std::vector<uint8_t> add, mul;
  std::vector<uint8_t> neg;

  explicit SmallFq(FieldRef f) : q(static_cast<uint32_t>(f->order())), p(f->characteristic()) {
    add.resize(q * q);
    mul.resize(q * q);
    neg.resize(q);
    for (uint32_t i = 0; i < q; ++i) {
      const FieldElem a = f->from_index(i);
      neg[i] = static_cast<uint8_t>(f->index(-a));
      for (uint32_t j = 0; j < q; ++j) {
        const FieldElem b = f->from_index(j);
        add[i * q + j] = static_cast<uint8_t>(f->index(a + b));
        mul[i * q + j] = static_cast<uint8_t>(f->index(a * b));
      }
    }
  }
  uint8_t plus(uint8_t a, uint8_t b) const { return add[static_cast<uint32_t>(a) * q + b]; }
  uint8_t times(uint8_t a, uint8_t b) const { return mul[static_cast<uint32_t>(a) * q + b]; }
};

// monomial key: (e_s << 24) | (e_t << 16) | (e_x << 8) | e_y; exponents stay
// below 25 so byte-wise sums never carry
uint32_t pack_key(int es, int et, int ex, int ey) {
  return (static_cast<uint32_t>(es) << 24) | (static_cast<uint32_t>(et) << 16) |
         (static_cast<uint32_t>(ex) << 8) | static_cast<uint32_t>(ey);
}

struct DigitSlot {
  uint32_t key;
  bool negate;
  int form;   // 1, 2, 3, 4 or 6
  int coeff;  // index within the form
};

struct Layout {
  std::vector<DigitSlot> slots;
  // digit positions that must vanish for the predicate, plus a flag for
  // "predicate is trivially true"
  std::vector<int> predicate_zero_digits;
};

Layout build_layout(uint32_t p, CensusSpace space) {
  Layout L;
  auto block = [&L](int form, int degree, int ex, int ey, bool negate) {
    for (int k = 0; k <= degree; ++k)
      L.slots.push_back(DigitSlot{pack_key(degree - k, k, ex, ey), negate, form, k});
  };
  const bool full = (space == CensusSpace::full) || (space == CensusSpace::normalized && p == 2);
  if (space == CensusSpace::a6_only) {
    block(6, 6, 0, 0, true);
    if (p == 5)
      L.predicate_zero_digits = {2, 3, 4};  // a6 middle coefficients
    // p = 2, 3: the slice satisfies the predicate identically
  } else if (full) {
    block(1, 1, 1, 1, false);
    block(2, 2, 2, 0, true);
    block(3, 3, 0, 1, false);
    block(4, 4, 1, 0, true);
    block(6, 6, 0, 0, true);
    L.predicate_zero_digits = {0, 1};  // a1 = 0
  } else if (p == 3) {
    block(2, 2, 2, 0, true);
    block(4, 4, 1, 0, true);
    block(6, 6, 0, 0, true);
    L.predicate_zero_digits = {0, 1, 2, /*a4 c2:*/ 5};
  } else {  // p == 5 normalized
    block(4, 4, 1, 0, true);
    block(6, 6, 0, 0, true);
    L.predicate_zero_digits = {0, 1, 2, 3, 4, /*a6 middle:*/ 7, 8, 9};
  }
  return L;
}

// (key << 8) | coefficient-index, kept sorted by key with nonzero coefficients
using KTerms = std::vector<uint64_t>;

void square_kernel(const KTerms& in, KTerms& out, KTerms& scratch, const SmallFq& F) {
  scratch.clear();
  const std::size_t n = in.size();
  for (std::size_t i = 0; i < n; ++i) {
    const uint32_t ki = static_cast<uint32_t>(in[i] >> 8);
    const uint8_t ci = static_cast<uint8_t>(in[i]);
    const uint8_t cii = F.times(ci, ci);
    if (cii) scratch.push_back((static_cast<uint64_t>(ki + ki) << 8) | cii);
    for (std::size_t j = i + 1; j < n; ++j) {
      const uint32_t kj = static_cast<uint32_t>(in[j] >> 8);
      const uint8_t cij = F.times(ci, static_cast<uint8_t>(in[j]));
      const uint8_t c2 = F.plus(cij, cij);
      if (c2) scratch.push_back((static_cast<uint64_t>(ki + kj) << 8) | c2);
    }
  }
  std::sort(scratch.begin(), scratch.end());
  out.clear();
  std::size_t i = 0;
  while (i < scratch.size()) {
    const uint64_t key = scratch[i] >> 8;
    uint8_t acc = static_cast<uint8_t>(scratch[i]);
    ++i;
    while (i < scratch.size() && (scratch[i] >> 8) == key) {
      acc = F.plus(acc, static_cast<uint8_t>(scratch[i]));
      ++i;
    }
    if (acc) out.push_back((key << 8) | acc);
  }
}

bool has_low_monomial(const KTerms& terms, uint32_t p) {
  for (uint64_t t : terms) {
    const uint32_t k = static_cast<uint32_t>(t >> 8);
    if (((k >> 24) & 0xFF) < p && ((k >> 16) & 0xFF) < p && ((k >> 8) & 0xFF) < p &&
        (k & 0xFF) < p)
      return true;
  }
  return false;
}

struct Shard {
  uint64_t non_f_split = 0;
  uint64_t mismatches = 0;
  std::vector<CensusMismatch> recorded;
};

DP1Equation equation_from_digits(FieldRef F, const Layout& L,
                                 const std::vector<uint16_t>& digits) {
  DP1Equation eq = DP1Equation::zero(F);
  for (std::size_t d = 0; d < L.slots.size(); ++d) {
    const DigitSlot& slot = L.slots[d];
    const FieldElem v = F->from_index(digits[d]);
    switch (slot.form) {
      case 1: eq.a1.set_coeff(slot.coeff, v); break;
      case 2: eq.a2.set_coeff(slot.coeff, v); break;
      case 3: eq.a3.set_coeff(slot.coeff, v); break;
      case 4: eq.a4.set_coeff(slot.coeff, v); break;
      default: eq.a6.set_coeff(slot.coeff, v); break;
    }
  }
  return eq;
}

class Worker {
 public:
  Worker(const CensusSpec& spec, const Layout& layout, const SmallFq& fq, FieldRef field)
      : spec_(spec), L_(layout), F_(fq), field_(field) {}

  void run(uint64_t lo, uint64_t hi, Shard& shard, std::atomic<uint64_t>& done) {
    const std::size_t nd = L_.slots.size();
    std::vector<uint8_t> digits(nd, 0);
    if (spec_.exhaustive) {
      // odometer decode of the first index, then increment in place
      uint64_t k = lo;
      for (std::size_t d = 0; d < nd; ++d) {
        digits[d] = static_cast<uint8_t>(k % F_.q);
        k /= F_.q;
      }
    }
    uint64_t since_tick = 0;
    for (uint64_t idx = lo; idx < hi; ++idx) {
      if (!spec_.exhaustive) {
        upoly::SplitMix rng(spec_.seed ^ ((idx + 1) * 0x9E3779B97F4A7C15ull));
        for (std::size_t d = 0; d < nd; ++d)
          digits[d] = static_cast<uint8_t>(rng.bounded(F_.q));
      }
      test_instance(idx, digits, shard);
      if (spec_.exhaustive) {
        for (std::size_t d = 0; d < nd; ++d) {
          if (++digits[d] < F_.q) break;
          digits[d] = 0;
        }
      }
      if (++since_tick == (1u << 16)) {
        done += since_tick;
        since_tick = 0;
      }
    }
    done += since_tick;
  }

 private:
  void test_instance(uint64_t idx, const std::vector<uint8_t>& digits, Shard& shard) {
    base_.clear();
    base_.push_back((static_cast<uint64_t>(pack_key(0, 0, 0, 2)) << 8) | 1);
    base_.push_back((static_cast<uint64_t>(pack_key(0, 0, 3, 0)) << 8) | F_.neg[1]);
    for (std::size_t d = 0; d < digits.size(); ++d) {
      const uint8_t v = digits[d];
      if (!v) continue;
      const DigitSlot& slot = L_.slots[d];
      base_.push_back((static_cast<uint64_t>(slot.key) << 8) | (slot.negate ? F_.neg[v] : v));
    }
    bool split;
    if (F_.p == 2) {
      split = has_low_monomial(base_, F_.p);
    } else if (F_.p == 3) {
      square_kernel(base_, pow_, scratch_, F_);
      split = has_low_monomial(pow_, F_.p);
    } else {
      square_kernel(base_, pow_, scratch_, F_);
      square_kernel(pow_, pow2_, scratch_, F_);
      split = has_low_monomial(pow2_, F_.p);
    }
    bool pred = true;
    for (int d : L_.predicate_zero_digits)
      if (digits[static_cast<std::size_t>(d)]) {
        pred = false;
        break;
      }
    if (!split) ++shard.non_f_split;
    if (split != !pred) {
      ++shard.mismatches;
      if (shard.recorded.size() < kMaxRecordedMismatches) {
        std::vector<uint16_t> ds(digits.begin(), digits.end());
        const DP1Equation eq = equation_from_digits(field_, L_, ds);
        shard.recorded.push_back(
            CensusMismatch{idx, std::move(ds), split, pred, format_poly(to_poly(eq))});
      }
    }
  }

  const CensusSpec& spec_;
  const Layout& L_;
  const SmallFq& F_;
  FieldRef field_;
  KTerms base_, pow_, pow2_, scratch_;
};

}  // namespace

CensusSummary census(const CensusSpec& spec, const CensusProgress& progress) {
  if (spec.p != 2 && spec.p != 3 && spec.p != 5)
    throw math_error(errc::unsupported, "census covers characteristics 2, 3 and 5");
  if (spec.space == CensusSpace::full && spec.p != 2)
    throw math_error(errc::unsupported,
                     "full-space census is supported in characteristic 2 only; use the "
                     "normalized space (complete the square first) for p = 3 and 5");
  FieldRef F = make_field(spec.p, spec.field_degree);
  if (F->order() > 256)
    throw math_error(errc::unsupported, "census needs a coefficient field of order <= 256");
  if (spec.workers < 1)
    throw math_error(errc::degree_out_of_range, "worker count must be positive");

  const Layout layout = build_layout(spec.p, spec.space);
  const SmallFq fq(F);

  unsigned __int128 size128 = 1;
  for (std::size_t i = 0; i < layout.slots.size(); ++i) size128 *= fq.q;
  const bool size_fits = size128 <= static_cast<unsigned __int128>(UINT64_MAX);
  const uint64_t space_size = size_fits ? static_cast<uint64_t>(size128) : UINT64_MAX;

  uint64_t total;
  if (spec.exhaustive) {
    if (!size_fits || space_size > spec.exhaustive_ceiling)
      throw math_error(errc::census_infeasible,
                       "coefficient space too large for an exhaustive census (ceiling " +
                           std::to_string(spec.exhaustive_ceiling) + ")");
    total = space_size;
  } else {
    total = spec.samples;
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::atomic<uint64_t> done{0};
  std::mutex progress_mu;
  std::atomic<bool> stop_progress{false};

  const int nworkers = static_cast<int>(
      std::min<uint64_t>(static_cast<uint64_t>(spec.workers), std::max<uint64_t>(total, 1)));
  std::vector<Shard> shards(static_cast<std::size_t>(nworkers));
  std::vector<std::thread> threads;
  std::thread reporter;
  if (progress && total > 0) {
    reporter = std::thread([&] {
      uint64_t last = 0;
      while (!stop_progress.load()) {
        std::this_thread::sleep_for(std::chrono::milliseconds(500));
        const uint64_t d = done.load();
        if (d != last) {
          last = d;
          std::lock_guard<std::mutex> lock(progress_mu);
          progress(d, total);
        }
      }
    });
  }

  const uint64_t chunk = total / static_cast<uint64_t>(nworkers);
  const uint64_t rem = total % static_cast<uint64_t>(nworkers);
  uint64_t lo = 0;
  for (int w = 0; w < nworkers; ++w) {
    const uint64_t len = chunk + (static_cast<uint64_t>(w) < rem ? 1 : 0);
    const uint64_t hi = lo + len;
    Shard& shard = shards[static_cast<std::size_t>(w)];
    if (nworkers == 1) {
      Worker(spec, layout, fq, F).run(lo, hi, shard, done);
    } else {
      threads.emplace_back([&, lo, hi, w] {
        Worker(spec, layout, fq, F).run(lo, hi, shards[static_cast<std::size_t>(w)], done);
      });
    }
    lo = hi;
  }
  for (auto& th : threads) th.join();
  stop_progress.store(true);
  if (reporter.joinable()) reporter.join();
  if (progress && total > 0) progress(total, total);

  CensusSummary out;
  out.spec = spec;
  out.space_size = space_size;
  out.scanned = total;
  out.non_f_split = 0;
  out.mismatch_count = 0;
  for (const auto& s : shards) {
    out.non_f_split += s.non_f_split;
    out.mismatch_count += s.mismatches;
    for (const auto& m : s.recorded)
      if (out.mismatches.size() < kMaxRecordedMismatches) out.mismatches.push_back(m);
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace fdp
