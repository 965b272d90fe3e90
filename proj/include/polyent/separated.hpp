// Copyright 2026 The polyent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <unordered_map>
#include <vector>

#include "polyent/error.hpp"
#include "polyent/systems.hpp"

namespace polyent {

struct PackOptions {
  std::uint64_t seed = 1;
  /// Run the candidate scan with OpenMP. Results do not depend on it.
  bool parallel = true;
  /// Prune witness comparisons with the system's Lipschitz sketch.
  bool use_index = true;
  /// Number of probe times used by the index.
  int probes = 5;
  std::size_t block = 1024;
};

/// S(n, eps; cloud) as realized by one greedy packing.
struct SeparatedCount {
  int n = 0;
  double eps = 0.0;
  std::size_t count = 0;
  /// Cloud indices of the separated set, in insertion order.
  std::vector<std::size_t> witness;
};

/// Fisher-Yates permutation of [0, size) driven by mt19937_64.
std::vector<std::size_t> seeded_order(std::size_t size, std::uint64_t seed);

/// Greedy first-fit packing of a cloud under the dynamic metric d_n.
///
/// Candidates are visited in a seeded order; a candidate joins the witness
/// set when its d_n distance to every witness is at least eps. extend_to()
/// grows n and keeps the current witnesses (d_n is non-decreasing in n, so
/// they stay separated), which makes the count non-decreasing in n.
template <DynamicalSystem S>
class GreedyPacking {
 public:
  using State = typename S::State;

  GreedyPacking(const S& sys, std::span<const State> cloud, double eps, int n_max,
                const PackOptions& opt = {})
      : sys_(sys), cloud_(cloud), eps_(eps), n_max_(n_max), opt_(opt),
        order_(seeded_order(cloud.size(), opt.seed)), is_witness_(cloud.size(), 0) {
    if (cloud.empty()) throw DomainError("separated_count: empty cloud");
    if (!(eps > 0.0)) throw DomainError("separated_count: eps must be positive");
    if (n_max < 1) throw DomainError("separated_count: n must be >= 1");
    if constexpr (requires { sys.has_sketch(); }) use_index_ = opt.use_index && sys.has_sketch();
    else use_index_ = opt.use_index && S::kSketchDims > 0;
  }

  int n() const noexcept { return n_; }
  std::size_t count() const noexcept { return ids_.size(); }
  const std::vector<std::size_t>& witness() const noexcept { return ids_; }

  std::size_t extend_to(int n) {
    if (n < n_ || n > n_max_) throw DomainError("extend_to: n must grow and stay <= n_max");
    n_ = n;
    if (use_index_) rebuild_index();
    const std::size_t total = order_.size();
    const std::size_t block = std::max<std::size_t>(opt_.block, 1);
    std::vector<State> buf;
    std::vector<char> covered;
    for (std::size_t start = 0; start < total; start += block) {
      const std::size_t len = std::min(block, total - start);
      buf.resize(len * static_cast<std::size_t>(n_));
      covered.assign(len, 0);
      const std::size_t snapshot = ids_.size();
      const auto slen = static_cast<std::ptrdiff_t>(len);
#pragma omp parallel for schedule(dynamic, 16) if (opt_.parallel)
      for (std::ptrdiff_t i = 0; i < slen; ++i) {
        const std::size_t idx = order_[start + static_cast<std::size_t>(i)];
        if (is_witness_[idx]) {
          covered[static_cast<std::size_t>(i)] = 1;
          continue;
        }
        State* traj = buf.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n_);
        fill_trajectory(cloud_[idx], traj, n_);
        covered[static_cast<std::size_t>(i)] = is_covered(traj, snapshot) ? 1 : 0;
      }
      for (std::size_t i = 0; i < len; ++i) {
        if (covered[i]) continue;
        const State* traj = buf.data() + i * static_cast<std::size_t>(n_);
        bool ok = true;
        for (std::size_t w = snapshot; w < ids_.size() && ok; ++w)
          ok = separated(traj, witness_traj(w));
        if (ok) insert(order_[start + i], traj);
      }
    }
    return ids_.size();
  }

 private:
  const State* witness_traj(std::size_t w) const noexcept {
    return wtraj_.data() + w * static_cast<std::size_t>(n_max_);
  }

  void fill_trajectory(const State& x, State* out, int len) const noexcept {
    out[0] = x;
    for (int t = 1; t < len; ++t) out[t] = sys_.step(out[t - 1]);
  }

  bool separated(const State* a, const State* b) const noexcept {
    for (int t = 0; t < n_; ++t)
      if (sys_.distance(a[t], b[t]) >= eps_) return true;
    return false;
  }

  // True when some witness among the first `limit` is within eps of the
  // candidate at every time t < n.
  bool is_covered(const State* traj, std::size_t limit) const {
    if (!use_index_) {
      for (std::size_t w = 0; w < limit; ++w)
        if (!separated(traj, witness_traj(w))) return true;
      return false;
    }
    // Pick the probe time whose neighbourhood holds the fewest witnesses.
    std::array<const std::vector<std::uint32_t>*, kMaxNeighbours> best{};
    std::size_t best_total = SIZE_MAX;
    int best_cells = 0;
    for (std::size_t p = 0; p < probe_times_.size(); ++p) {
      std::array<const std::vector<std::uint32_t>*, kMaxNeighbours> cells{};
      int ncells = 0;
      std::size_t total = 0;
      for_each_neighbour(sys_.sketch(traj[probe_times_[p]]), [&](std::uint64_t key) {
        auto it = index_[p].find(key);
        if (it == index_[p].end()) return;
        cells[ncells++] = &it->second;
        total += it->second.size();
      });
      if (total < best_total) {
        best_total = total;
        best = cells;
        best_cells = ncells;
        if (total == 0) return false;
      }
    }
    for (int c = 0; c < best_cells; ++c)
      for (std::uint32_t w : *best[c]) {
        if (w >= limit) break;  // cell lists are in insertion order
        if (!separated(traj, witness_traj(w))) return true;
      }
    return false;
  }

  void insert(std::size_t idx, const State* traj) {
    const std::size_t w = ids_.size();
    ids_.push_back(idx);
    is_witness_[idx] = 1;
    wtraj_.resize((w + 1) * static_cast<std::size_t>(n_max_));
    State* dst = wtraj_.data() + w * static_cast<std::size_t>(n_max_);
    std::copy(traj, traj + n_, dst);
    for (int t = n_; t < n_max_; ++t) dst[t] = sys_.step(dst[t - 1]);
    if (use_index_) index_witness(w);
  }

  // --- sketch index -------------------------------------------------------

  std::int64_t cell_of(double v) const noexcept {
    if (periodic_) {
      auto c = static_cast<std::int64_t>(std::floor(wrap01(v) * periodic_cells_));
      return std::min<std::int64_t>(c, periodic_cells_ - 1);
    }
    return static_cast<std::int64_t>(std::floor(v / eps_));
  }

  static constexpr int kDims = S::kSketchDims;
  static_assert(kDims >= 0 && kDims <= 3, "sketches have at most 3 coordinates");
  static constexpr int kMaxNeighbours = kDims == 0 ? 1 : kDims == 1 ? 3 : kDims == 2 ? 9 : 27;

  // 21 bits per coordinate, offset so that the cell -1 stays non-negative.
  static std::uint64_t pack(const std::array<std::int64_t, 3>& c) noexcept {
    std::uint64_t key = 0;
    for (int d = 0; d < 3; ++d) key = (key << 21) | (static_cast<std::uint64_t>(c[d] + 1) & 0x1FFFFF);
    return key;
  }

  std::int64_t wrap_cell(std::int64_t c) const noexcept {
    if (!periodic_) return c;
    return ((c % periodic_cells_) + periodic_cells_) % periodic_cells_;
  }

  template <class Sketch>
  std::array<std::int64_t, 3> cells_of(const Sketch& sk) const noexcept {
    std::array<std::int64_t, 3> c{0, 0, 0};
    for (int d = 0; d < kDims; ++d) c[d] = cell_of(sk[d]);
    return c;
  }

  template <class Sketch, class Fn>
  void for_each_neighbour(const Sketch& sk, Fn&& fn) const {
    const auto base = cells_of(sk);
    const int span = periodic_ && periodic_cells_ < 3 ? 0 : 1;
    int total = 1;
    for (int d = 0; d < kDims; ++d) total *= 2 * span + 1;
    for (int code = 0; code < total; ++code) {
      std::array<std::int64_t, 3> c = base;
      int rest = code;
      for (int d = 0; d < kDims; ++d) {
        c[d] = wrap_cell(c[d] + rest % (2 * span + 1) - span);
        rest /= 2 * span + 1;
      }
      fn(pack(c));
    }
  }

  std::uint64_t key_of(const State& s) const noexcept { return pack(cells_of(sys_.sketch(s))); }

  void rebuild_index() {
    periodic_ = sys_.sketch_periodic();
    periodic_cells_ = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(1.0 / eps_)));
    if (periodic_ && periodic_cells_ < 3) periodic_cells_ = 1;
    const int probes = std::max(1, std::min(opt_.probes, n_));
    probe_times_.clear();
    for (int p = 0; p < probes; ++p)
      probe_times_.push_back(probes == 1 ? 0 : static_cast<int>(std::lround(
                                                   static_cast<double>(p) * (n_ - 1) / (probes - 1))));
    probe_times_.erase(std::unique(probe_times_.begin(), probe_times_.end()), probe_times_.end());
    index_.assign(probe_times_.size(), {});
    for (std::size_t w = 0; w < ids_.size(); ++w) index_witness(w);
  }

  void index_witness(std::size_t w) {
    const State* traj = witness_traj(w);
    for (std::size_t p = 0; p < probe_times_.size(); ++p)
      index_[p][key_of(traj[probe_times_[p]])].push_back(static_cast<std::uint32_t>(w));
  }

  const S& sys_;
  std::span<const State> cloud_;
  double eps_;
  int n_max_;
  PackOptions opt_;
  std::vector<std::size_t> order_;
  std::vector<char> is_witness_;
  std::vector<std::size_t> ids_;
  std::vector<State> wtraj_;
  int n_ = 0;

  bool use_index_ = false;
  bool periodic_ = false;
  std::int64_t periodic_cells_ = 1;
  std::vector<int> probe_times_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>> index_;
};

/// Carry-forward packing over an increasing list of window lengths.
template <DynamicalSystem S>
std::vector<SeparatedCount> separated_counts(const S& sys, std::span<const typename S::State> cloud,
                                             std::span<const int> n_list, double eps,
                                             const PackOptions& opt = {},
                                             bool retain_witness = false) {
  if (n_list.empty()) return {};
  if (!std::is_sorted(n_list.begin(), n_list.end()))
    throw DomainError("separated_counts: n_list must be increasing");
  GreedyPacking<S> packing(sys, cloud, eps, n_list.back(), opt);
  std::vector<SeparatedCount> out;
  for (int n : n_list) {
    SeparatedCount c{n, eps, packing.extend_to(n), {}};
    if (retain_witness) c.witness = packing.witness();
    out.push_back(std::move(c));
  }
  return out;
}

template <DynamicalSystem S>
SeparatedCount separated_count(const S& sys, std::span<const typename S::State> cloud, int n,
                               double eps, const PackOptions& opt = {}) {
  std::array<int, 1> ns{n};
  return separated_counts(sys, cloud, std::span<const int>(ns), eps, opt, true).front();
}

/// Serial reference for the packing: the same visiting order and
/// carry-forward, with every comparison done through dyn_metric and no
/// pruning. Kept for testing the fast kernel.
template <DynamicalSystem S>
std::vector<SeparatedCount> separated_counts_reference(const S& sys,
                                                       std::span<const typename S::State> cloud,
                                                       std::span<const int> n_list, double eps,
                                                       std::uint64_t seed) {
  auto order = seeded_order(cloud.size(), seed);
  std::vector<std::size_t> ids;
  std::vector<char> taken(cloud.size(), 0);
  std::vector<SeparatedCount> out;
  for (int n : n_list) {
    for (std::size_t idx : order) {
      if (taken[idx]) continue;
      bool ok = true;
      for (std::size_t w : ids)
        if (dyn_metric(sys, cloud[idx], cloud[w], n) < eps) {
          ok = false;
          break;
        }
      if (ok) {
        ids.push_back(idx);
        taken[idx] = 1;
      }
    }
    out.push_back({n, eps, ids.size(), ids});
  }
  return out;
}

}  // namespace polyent
