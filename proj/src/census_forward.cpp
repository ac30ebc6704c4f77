// Forward enumeration of normalized pairs (g, h), parallel over shards of
// the inner-polynomial space.

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <string>
#include <unordered_map>

#include "polycensus/census.hpp"

namespace polycensus {
namespace {

constexpr int kMaxDegree = 16;
constexpr std::uint8_t kIndecompBit = 0x80;

// Coefficients 1..d of f.
struct UpperKey {
  std::array<std::int32_t, kMaxDegree> c{};
  friend bool operator==(const UpperKey&, const UpperKey&) = default;
};

struct UpperKeyHash {
  std::size_t operator()(const UpperKey& k) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (std::int32_t v : k.c) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 0xBF58476D1CE4E5B9ULL;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }
};

// Flags per key: bit s marks membership in split s, kIndecompBit marks an
// indecomposable outer polynomial in the (d/l, l) split.
using UpperSet = std::unordered_map<UpperKey, std::uint8_t, UpperKeyHash>;

// Unit of parallel work: the leading coefficients of g and h and the next
// coefficient of h.
struct Shard {
  int split = 0;
  Int lead_g = 0;
  Int lead_h = 0;
  Int top = 0;
};

// Closed integer interval; empty when lo > hi.
struct Range {
  Int lo;
  Int hi;
  bool empty() const { return lo > hi; }
};

// {x : |base + slope * x| <= bound} intersected with r.
Range restrict(Range r, Int base, Int slope, Int bound) {
  if (slope.is_zero()) {
    if (abs(base) > bound) r.lo = r.hi + 1;
    return r;
  }
  Int lo = 0;
  Int hi = 0;
  if (slope.sign() > 0) {
    lo = ceil_div(-bound - base, slope);
    hi = floor_div(bound - base, slope);
  } else {
    lo = ceil_div(bound - base, slope);
    hi = floor_div(-bound - base, slope);
  }
  r.lo = std::max(r.lo, lo);
  r.hi = std::min(r.hi, hi);
  return r;
}

// Coefficient k of r(y)^e where r(y) = sum r[i] y^i (only the first k+1
// entries of r are read).
Int power_series_coeff(const std::vector<Int>& r, int e, int k) {
  std::vector<Int> acc(static_cast<std::size_t>(k) + 1, Int(0));
  acc[0] = 1;
  for (int step = 0; step < e; ++step) {
    std::vector<Int> next(static_cast<std::size_t>(k) + 1, Int(0));
    for (int i = 0; i <= k; ++i) {
      if (acc[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; i + j <= k; ++j) {
        next[static_cast<std::size_t>(i + j)] += acc[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)];
      }
    }
    acc = std::move(next);
  }
  return acc[static_cast<std::size_t>(k)];
}

class SplitEnumerator {
 public:
  SplitEnumerator(int m, int n, int split_index, Int height, bool monic, bool indecomp_split,
                  UpperSet& set, std::uint64_t& raw_pairs, std::atomic<std::uint64_t>& inserted,
                  std::uint64_t budget, const PairVisitor* visit)
      : m_(m),
        n_(n),
        d_(m * n),
        split_bit_(static_cast<std::uint8_t>(1U << split_index)),
        height_(height),
        monic_(monic),
        indecomp_split_(indecomp_split),
        box_(m, n, height),
        set_(set),
        raw_pairs_(raw_pairs),
        inserted_(inserted),
        budget_(budget),
        visit_(visit) {}

  // Heads ordered lexicographically by (lead_g, lead_h, top).
  void heads(int split_index, std::vector<Shard>& out) const {
    const Int lo = monic_ ? Int(1) : -height_;
    for (Int a = lo; a <= height_; a += 1) {
      if (a.is_zero()) continue;
      const Int b_max = box_.b_max(a);
      for (Int c = 1; c <= b_max; c += 1) {
        if (abs(a) * pow(c, static_cast<unsigned>(m_)) > height_) break;
        // coeff of x^{d-1} in a h^m is a m c^{m-1} b_{n-1}
        const Range r = restrict({-b_max, b_max}, 0, a * Int(m_) * pow(c, static_cast<unsigned>(m_ - 1)), height_);
        for (Int t = r.lo; t <= r.hi; t += 1) out.push_back({split_index, a, c, t});
        if (monic_) break;
      }
      if (monic_) break;
    }
  }

  void run(const Shard& s) {
    lead_g_ = s.lead_g;
    lead_h_ = s.lead_h;
    b_max_ = box_.b_max(lead_g_);
    // rev_[k] = b_{n-k}: the inner polynomial read from the top.
    rev_.assign(static_cast<std::size_t>(n_), Int(0));
    rev_[0] = lead_h_;
    rev_[1] = s.top;
    slope_h_ = lead_g_ * Int(m_) * pow(lead_h_, static_cast<unsigned>(m_ - 1));
    inner(2);
  }

 private:
  // Choose b_{n-k}; the coefficient of x^{d-k} of f is final and linear in it.
  void inner(int k) {
    if (k == n_) {
      leaf_h();
      return;
    }
    rev_[static_cast<std::size_t>(k)] = 0;
    const Int base = lead_g_ * power_series_coeff(rev_, m_, k);
    const Range r = restrict({-b_max_, b_max_}, base, slope_h_, height_);
    for (Int b = r.lo; b <= r.hi; b += 1) {
      rev_[static_cast<std::size_t>(k)] = b;
      inner(k + 1);
    }
    rev_[static_cast<std::size_t>(k)] = 0;
  }

  void leaf_h() {
    if (!monic_) {
      Int g = 0;
      for (const Int& b : rev_) g = gcd(g, b);
      if (g != Int(1)) return;  // only primitive inner polynomials
    }
    h_.assign(static_cast<std::size_t>(n_) + 1, Int(0));
    Int hh = 0;
    for (int k = 0; k < n_; ++k) {
      h_[static_cast<std::size_t>(n_ - k)] = rev_[static_cast<std::size_t>(k)];
      hh = std::max(hh, abs(rev_[static_cast<std::size_t>(k)]));
    }
    h_height_ = hh;

    // h_pow_[i] = h^i as dense vectors of length i n + 1.
    h_pow_.resize(static_cast<std::size_t>(m_) + 1);
    h_pow_[0] = {Int(1)};
    for (int i = 1; i <= m_; ++i) {
      const auto& prev = h_pow_[static_cast<std::size_t>(i - 1)];
      std::vector<Int> cur(static_cast<std::size_t>(i * n_) + 1, Int(0));
      for (std::size_t x = 0; x < prev.size(); ++x) {
        if (prev[x].is_zero()) continue;
        for (std::size_t y = 0; y < h_.size(); ++y) cur[x + y] += prev[x] * h_[y];
      }
      h_pow_[static_cast<std::size_t>(i)] = std::move(cur);
    }

    partial_.assign(static_cast<std::size_t>(m_) + 1, {});
    auto& top = partial_[static_cast<std::size_t>(m_)];
    top.resize(static_cast<std::size_t>(d_) + 1);
    for (int j = 0; j <= d_; ++j) top[static_cast<std::size_t>(j)] = lead_g_ * h_pow_[static_cast<std::size_t>(m_)][static_cast<std::size_t>(j)];
    g_.assign(static_cast<std::size_t>(m_) + 1, Int(0));
    g_[static_cast<std::size_t>(m_)] = lead_g_;
    outer(m_);
  }

  // a_m..a_k fixed in partial_[k]; coefficients above (k-1) n are final and
  // within bounds. Choose a_{k-1}: it moves coefficients 1..(k-1)n linearly,
  // of which those above (k-2) n become final.
  void outer(int k) {
    const auto& cur = partial_[static_cast<std::size_t>(k)];
    const auto& p = h_pow_[static_cast<std::size_t>(k - 1)];
    const Int gb = box_.g_coeff_bound(k - 1, h_height_);
    Range r{-gb, gb};
    for (int j = (k - 2) * n_ + 1; j <= (k - 1) * n_ && !r.empty(); ++j) {
      r = restrict(r, cur[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j)], height_);
    }
    if (r.empty()) return;
    auto& next = partial_[static_cast<std::size_t>(k - 1)];
    for (Int a = r.lo; a <= r.hi; a += 1) {
      next = cur;
      for (int j = 1; j <= (k - 1) * n_; ++j) next[static_cast<std::size_t>(j)] += a * p[static_cast<std::size_t>(j)];
      g_[static_cast<std::size_t>(k - 1)] = a;
      if (k - 1 == 1) {
        record(next);
      } else {
        outer(k - 1);
      }
    }
  }

  void record(const std::vector<Int>& f) {
    ++raw_pairs_;
    if (visit_ != nullptr && *visit_) (*visit_)(IntPoly(g_), IntPoly(h_));
    UpperKey key;
    for (int j = 1; j <= d_; ++j) key.c[static_cast<std::size_t>(j - 1)] = static_cast<std::int32_t>(f[static_cast<std::size_t>(j)].to_int64());
    std::uint8_t flags = split_bit_;
    if (indecomp_split_) {
      const IntPoly g(g_);
      if (splits_of(m_).empty() || !is_decomposable(g)) flags |= kIndecompBit;
    }
    auto [it, fresh] = set_.try_emplace(key, flags);
    if (fresh) {
      if (inserted_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
        throw BudgetExceeded("forward census: deduplication set exceeds budget of " + std::to_string(budget_) +
                                 " entries",
                             static_cast<double>(budget_) + 1);
      }
    } else {
      it->second |= flags;
    }
  }

  int m_;
  int n_;
  int d_;
  std::uint8_t split_bit_;
  Int height_;
  bool monic_;
  bool indecomp_split_;
  EnumBox box_;
  UpperSet& set_;
  std::uint64_t& raw_pairs_;
  std::atomic<std::uint64_t>& inserted_;
  std::uint64_t budget_;
  const PairVisitor* visit_;

  Int lead_g_ = 0;
  Int lead_h_ = 0;
  Int b_max_ = 0;
  Int slope_h_ = 0;
  Int h_height_ = 0;
  std::vector<Int> rev_;
  std::vector<Int> h_;
  std::vector<Int> g_;
  std::vector<std::vector<Int>> h_pow_;
  std::vector<std::vector<Int>> partial_;
};

}  // namespace

Int ForwardTally::split(int m, int n) const {
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (splits[i] == std::make_pair(m, n)) return constant_choices * Int(static_cast<long long>(split_upper[i]));
  }
  throw PreconditionError("ForwardTally: split (" + std::to_string(m) + "," + std::to_string(n) + ") not enumerated");
}

ForwardTally forward_tally(int d, Int height, bool monic, const ForwardOptions& options, const PairVisitor& visit) {
  if (d < 2 || d > kMaxDegree) throw PreconditionError("forward census: degree must be in [2, 16]");
  if (height < Int(2) || height > Int(INT32_MAX)) throw PreconditionError("forward census: height must be in [2, 2^31 - 1]");
  if (options.workers < 1) throw PreconditionError("forward census: workers must be positive");

  ForwardTally tally;
  tally.constant_choices = Int(2) * height + Int(1);
  tally.splits = options.splits.empty() ? splits_of(d) : options.splits;
  for (const auto& [m, n] : tally.splits) {
    if (m < 2 || n < 2 || m * n != d) throw PreconditionError("forward census: invalid split");
  }
  const std::size_t ns = tally.splits.size();
  if (ns > 7) throw PreconditionError("forward census: too many splits");
  tally.split_upper.assign(ns, 0);
  tally.raw_pairs.assign(ns, 0);
  if (ns == 0) return tally;

  const int ell = smallest_prime_factor(d);
  const std::pair<int, int> main_split{d / ell, ell};

  std::vector<Shard> shards;
  for (std::size_t s = 0; s < ns; ++s) {
    const auto [m, n] = tally.splits[s];
    UpperSet unused;
    std::uint64_t unused_pairs = 0;
    std::atomic<std::uint64_t> unused_count{0};
    SplitEnumerator(m, n, static_cast<int>(s), height, monic, false, unused, unused_pairs, unused_count, 0, nullptr)
        .heads(static_cast<int>(s), shards);
  }

  const int workers = visit ? 1 : options.workers;
  std::vector<UpperSet> sets(static_cast<std::size_t>(workers));
  std::vector<std::vector<std::uint64_t>> pairs(static_cast<std::size_t>(workers), std::vector<std::uint64_t>(ns, 0));
  std::atomic<std::uint64_t> inserted{0};
  std::exception_ptr failure;
  std::atomic<bool> stop{false};

#pragma omp parallel num_threads(workers)
  {
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    std::vector<SplitEnumerator> enumerators;
    enumerators.reserve(ns);
    for (std::size_t s = 0; s < ns; ++s) {
      const auto [m, n] = tally.splits[s];
      const bool indecomp = options.track_indecomposable && tally.splits[s] == main_split;
      enumerators.emplace_back(m, n, static_cast<int>(s), height, monic, indecomp, sets[t], pairs[t][s], inserted,
                               options.config.set_budget, visit ? &visit : nullptr);
    }
#pragma omp for schedule(dynamic, 1)
    for (std::size_t i = 0; i < shards.size(); ++i) {
      if (stop.load(std::memory_order_relaxed)) continue;
      try {
        enumerators[static_cast<std::size_t>(shards[i].split)].run(shards[i]);
      } catch (...) {
#pragma omp critical(polycensus_forward_failure)
        {
          if (!failure) failure = std::current_exception();
        }
        stop.store(true, std::memory_order_relaxed);
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  // Union of the shard sets; flags combine by OR, so the result does not
  // depend on how shards were assigned to threads.
  UpperSet& merged = sets[0];
  for (std::size_t t = 1; t < sets.size(); ++t) {
    for (const auto& [key, flags] : sets[t]) merged[key] |= flags;
    UpperSet().swap(sets[t]);
  }
  for (const auto& per_thread : pairs) {
    for (std::size_t s = 0; s < ns; ++s) tally.raw_pairs[s] += per_thread[s];
  }
  tally.total_upper = merged.size();
  for (const auto& [key, flags] : merged) {
    for (std::size_t s = 0; s < ns; ++s) {
      if (flags & (1U << s)) ++tally.split_upper[s];
    }
    if (flags & kIndecompBit) ++tally.indecomp_upper;
  }
  return tally;
}

}  // namespace polycensus
