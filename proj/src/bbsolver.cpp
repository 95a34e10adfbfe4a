// Copyright 2026 The platobell Authors
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

#include "platobell/bbsolver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iostream>
#include <mutex>
#include <numeric>

#include "parallel.hpp"
#include "platobell/errors.hpp"

namespace platobell {

IntMatrix::IntMatrix(int rows, int cols, std::vector<int64_t> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0 || e_.size() != size_t(rows) * size_t(cols))
    throw ValidationError("IntMatrix: entry count does not match shape");
  for (int64_t x : e_) {
    if (x > kAbsSumLimit || x < -kAbsSumLimit)
      throw ResourceError("IntMatrix: entry exceeds 2^31");
    abs_sum_ += x < 0 ? -x : x;
    if (abs_sum_ > kAbsSumLimit)
      throw ResourceError("IntMatrix: sum of |entries| exceeds 2^31");
  }
}

IntMatrix IntMatrix::from_real(const Eigen::MatrixXd& m) {
  std::vector<int64_t> e;
  e.reserve(m.size());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double x = m(i, j);
      if (x != std::round(x) || std::abs(x) > 4e18)
        throw ValidationError("IntMatrix: entry is not an integer");
      e.push_back(static_cast<int64_t>(x));
    }
  return IntMatrix(static_cast<int>(m.rows()), static_cast<int>(m.cols()),
                   std::move(e));
}

IntMatrix IntMatrix::transposed() const {
  std::vector<int64_t> t(e_.size());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t[size_t(j) * rows_ + i] = (*this)(i, j);
  return IntMatrix(cols_, rows_, std::move(t));
}

Eigen::MatrixXd IntMatrix::to_real() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = static_cast<double>((*this)(i, j));
  return m;
}

namespace {

class Search {
 public:
  Search(const IntMatrix& m, const BBOptions& opt)
      : ma_(m.rows()), mb_(m.cols()), opt_(opt) {
    // Heaviest columns first.
    std::vector<int64_t> weight(mb_, 0);
    for (int j = 0; j < mb_; ++j)
      for (int i = 0; i < ma_; ++i) weight[j] += std::abs(m(i, j));
    perm_.resize(mb_);
    std::iota(perm_.begin(), perm_.end(), 0);
    std::stable_sort(perm_.begin(), perm_.end(),
                     [&](int x, int y) { return weight[x] > weight[y]; });
    col_.resize(size_t(mb_) * ma_);
    for (int k = 0; k < mb_; ++k)
      for (int i = 0; i < ma_; ++i) col_[size_t(k) * ma_ + i] = m(i, perm_[k]);
    rem_.assign(size_t(mb_ + 1) * ma_, 0);
    for (int k = mb_ - 1; k >= 0; --k)
      for (int i = 0; i < ma_; ++i)
        rem_[size_t(k) * ma_ + i] =
            rem_[size_t(k + 1) * ma_ + i] + std::abs(col_[size_t(k) * ma_ + i]);
    rem_total_.assign(mb_ + 1, 0);
    for (int k = 0; k <= mb_; ++k)
      for (int i = 0; i < ma_; ++i) rem_total_[k] += rem_[size_t(k) * ma_ + i];
    doll_.assign(mb_ + 1, 0);
  }

  IntBoundResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    IntBoundResult out;
    if (mb_ == 0 || ma_ == 0) {
      out.witness_a.assign(ma_, 1);
      out.witness_b.assign(mb_, 1);
      return out;
    }
    use_doll_ = false;
    if (opt_.russian_doll) {
      for (int s = mb_ - 1; s >= 1; --s) {
        std::vector<int> b;
        int64_t v = greedy(s, &b);
        best_ = std::max(v, doll_[s + 1]) - 1;
        have_witness_ = false;
        solve_from(s);
        doll_[s] = std::max(best_.load(), doll_[s + 1]);
        use_doll_ = true;
        if (opt_.verbose)
          std::cerr << "  suffix " << s << ": bound " << doll_[s] << ", nodes "
                    << nodes_ << "\n";
      }
    }
    witness_b_.clear();
    const int64_t g = greedy(0, &witness_b_);
    have_witness_ = true;
    int64_t start = g;
    if (use_doll_) start = std::max(start, doll_[1] - 1);
    if (opt_.initial_incumbent != INT64_MIN)
      start = std::max(start, opt_.initial_incumbent - 1);
    if (start > g) have_witness_ = false;
    best_ = start;
    best_value_with_witness_ = g;
    solve_from(0);
    if (!have_witness_ || best_value_with_witness_ != best_.load())
      throw std::logic_error("local_bound_int: lost the optimal witness");

    out.value = best_value_with_witness_;
    out.witness_b.assign(mb_, 1);
    for (int k = 0; k < mb_; ++k) out.witness_b[perm_[k]] = witness_b_[k];
    out.witness_a.assign(ma_, 1);
    for (int i = 0; i < ma_; ++i) {
      int64_t p = 0;
      for (int k = 0; k < mb_; ++k) p += col_[size_t(k) * ma_ + i] * witness_b_[k];
      out.witness_a[i] = p < 0 ? -1 : 1;
    }
    out.nodes = nodes_;
    out.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
  }

 private:
  // Sets each free column greedily from `start`; returns the final value.
  int64_t greedy(int start, std::vector<int>* b) const {
    std::vector<int64_t> p(ma_, 0);
    b->assign(mb_, 1);
    for (int k = start; k < mb_; ++k) {
      const int64_t* c = &col_[size_t(k) * ma_];
      int64_t plus = 0, minus = 0;
      for (int i = 0; i < ma_; ++i) {
        plus += std::abs(p[i] + c[i]);
        minus += std::abs(p[i] - c[i]);
      }
      const int s = (k == start || plus >= minus) ? 1 : -1;
      (*b)[k] = s;
      for (int i = 0; i < ma_; ++i) p[i] += s * c[i];
    }
    int64_t v = 0;
    for (int64_t x : p) v += std::abs(x);
    return v;
  }

  int64_t bound(int level, const int64_t* p) const {
    int64_t fixed = 0;
    if (use_doll_) {
      for (int i = 0; i < ma_; ++i) fixed += std::abs(p[i]);
      return fixed + std::min(doll_[level], rem_total_[level]);
    }
    const int64_t* r = &rem_[size_t(level) * ma_];
    for (int i = 0; i < ma_; ++i) fixed += std::abs(p[i]) + r[i];
    return fixed;
  }

  struct Task {
    std::vector<int> prefix;
  };

  // Searches all columns from `start` on, with column `start` fixed to +1.
  void solve_from(int start) {
    start_ = start;
    const int workers = detail::resolve_threads(opt_.threads);
    const int depth = mb_ - start;
    std::vector<int> b(mb_, 1);
    std::vector<int64_t> p(size_t(mb_ + 1) * ma_, 0);
    // Column `start` is +1 by sign symmetry.
    for (int i = 0; i < ma_; ++i)
      p[size_t(start + 1) * ma_ + i] = col_[size_t(start) * ma_ + i];
    if (workers <= 1 || depth < 8) {
      uint64_t nodes = 0;
      dfs(start + 1, p.data(), b, nodes, -1, nullptr);
      nodes_ += nodes;
      return;
    }
    const int split = std::min(start + 1 + 12, mb_ - 2);
    std::vector<Task> tasks;
    uint64_t nodes = 0;
    dfs(start + 1, p.data(), b, nodes, split, &tasks);
    nodes_ += nodes;
    std::atomic<size_t> next{0};
    std::atomic<uint64_t> total{0};
    detail::parallel_for(static_cast<size_t>(workers), workers,
                         [&](size_t, size_t, int) {
      std::vector<int> bb(mb_, 1);
      std::vector<int64_t> pp(size_t(mb_ + 1) * ma_, 0);
      uint64_t local = 0;
      for (size_t t = next++; t < tasks.size(); t = next++) {
        const std::vector<int>& pre = tasks[t].prefix;
        std::copy(pre.begin(), pre.end(), bb.begin() + start);
        int64_t* row = &pp[size_t(split) * ma_];
        std::fill(row, row + ma_, 0);
        for (int k = start; k < split; ++k) {
          const int64_t* c = &col_[size_t(k) * ma_];
          for (int i = 0; i < ma_; ++i) row[i] += bb[k] * c[i];
        }
        dfs(split, pp.data(), bb, local, -1, nullptr);
      }
      total += local;
    });
    nodes_ += total;
  }

  // p holds one row of partial sums per level; the row for `level` is
  // current on entry.
  void dfs(int level, int64_t* p, std::vector<int>& b, uint64_t& nodes,
           int split, std::vector<Task>* tasks) {
    ++nodes;
    const int64_t* cur = p + size_t(level) * ma_;
    if (level == mb_) {
      int64_t v = 0;
      for (int i = 0; i < ma_; ++i) v += std::abs(cur[i]);
      if (v > best_.load(std::memory_order_relaxed)) offer(v, b);
      return;
    }
    if (bound(level, cur) <= best_.load(std::memory_order_relaxed)) return;
    if (level == split) {
      tasks->push_back(
          Task{std::vector<int>(b.begin() + start_, b.begin() + level)});
      return;
    }
    if (opt_.verbose && (nodes & ((uint64_t{1} << 28) - 1)) == 0)
      std::cerr << "  bb nodes " << nodes << ", incumbent " << best_.load()
                << "\n";
    const int64_t* c = &col_[size_t(level) * ma_];
    int64_t* next = p + size_t(level + 1) * ma_;
    // Try the sign that keeps |p| larger first.
    int64_t plus = 0, minus = 0;
    for (int i = 0; i < ma_; ++i) {
      plus += std::abs(cur[i] + c[i]);
      minus += std::abs(cur[i] - c[i]);
    }
    const int first = plus >= minus ? 1 : -1;
    for (int s : {first, -first}) {
      for (int i = 0; i < ma_; ++i) next[i] = cur[i] + s * c[i];
      b[level] = s;
      dfs(level + 1, p, b, nodes, split, tasks);
    }
    b[level] = 1;
  }

  void offer(int64_t v, const std::vector<int>& b) {
    std::lock_guard<std::mutex> lock(mu_);
    if (v <= best_.load()) return;
    best_ = v;
    if (start_ == 0) {
      witness_b_ = b;
      best_value_with_witness_ = v;
      have_witness_ = true;
    }
  }

  int ma_, mb_;
  BBOptions opt_;
  std::vector<int> perm_;
  std::vector<int64_t> col_, rem_, rem_total_, doll_;
  bool use_doll_ = false;
  int start_ = 0;
  std::atomic<int64_t> best_{0};
  std::mutex mu_;
  std::vector<int> witness_b_;
  int64_t best_value_with_witness_ = 0;
  bool have_witness_ = false;
  uint64_t nodes_ = 0;
};

}  // namespace

IntBoundResult local_bound_int(const IntMatrix& m, const BBOptions& opt) {
  if (m.abs_sum() > IntMatrix::kAbsSumLimit)
    throw ResourceError("local_bound_int: sum of |entries| exceeds 2^31");
  // Branch over the shorter side.
  if (m.cols() > m.rows()) {
    IntBoundResult r = Search(m.transposed(), opt).run();
    std::swap(r.witness_a, r.witness_b);
    return r;
  }
  return Search(m, opt).run();
}

IntMatrix floor_scaled(const Eigen::MatrixXd& m, int64_t scale,
                       double* delta_sum) {
  std::vector<int64_t> e;
  e.reserve(m.size());
  double delta = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double x = static_cast<double>(scale) * m(i, j);
      double f = std::floor(x);
      if (x - f > 1.0 - 1e-9 * std::max(1.0, std::abs(x)) ||
          std::abs(x - std::round(x)) <= 1e-9 * std::max(1.0, std::abs(x)))
        f = std::round(x);
      e.push_back(static_cast<int64_t>(f));
      delta += std::max(0.0, x - f);
    }
  if (delta_sum) *delta_sum = delta;
  return IntMatrix(static_cast<int>(m.rows()), static_cast<int>(m.cols()),
                   std::move(e));
}

int64_t fit_scale(const Eigen::MatrixXd& m, int64_t requested) {
  if (requested < 1) throw ValidationError("scale must be positive");
  // Flooring can add at most one per entry to the absolute sum.
  const double sum = m.cwiseAbs().sum(), extra = static_cast<double>(m.size());
  const double limit = static_cast<double>(IntMatrix::kAbsSumLimit);
  int64_t s = requested;
  while (s > 1 && static_cast<double>(s) * sum + extra > limit) s /= 10;
  if (static_cast<double>(s) * sum + extra > limit)
    throw ResourceError("matrix too large for the integer solver");
  return s;
}

BoundBracket local_bound_bracket(const BellMatrix& m, int64_t scale,
                                 const BBOptions& opt) {
  BoundBracket br;
  br.scale = fit_scale(m.entries(), scale);
  if (br.scale != scale && opt.verbose)
    std::cerr << "local_bound_bracket: scale reduced to " << br.scale << "\n";
  const IntMatrix mi = floor_scaled(m.entries(), br.scale, &br.delta_sum);
  const IntBoundResult r = local_bound_int(mi, opt);
  br.int_value = r.value;
  br.nodes = r.nodes;
  br.witness_a = r.witness_a;
  br.witness_b = r.witness_b;
  br.upper = (static_cast<double>(r.value) + br.delta_sum) / br.scale;
  br.lower = evaluate(m.entries(), r.witness_a, r.witness_b);
  // Guard the bracket against rounding in the two evaluations.
  br.upper = std::max(br.upper, br.lower);
  return br;
}

double brute_force_local(const Eigen::MatrixXd& in) {
  const Eigen::MatrixXd m = in.rows() <= in.cols() ? in : in.transpose();
  const int k = static_cast<int>(m.rows());
  if (k == 0) return 0.0;
  if (k > 26) throw ResourceError("brute_force_local: smaller side exceeds 26");
  // Gray code over the signs of rows 1..k-1, row 0 fixed to +1.
  Eigen::RowVectorXd acc = m.colwise().sum();
  std::vector<int> s(k, 1);
  double best = acc.cwiseAbs().sum();
  const uint64_t n = uint64_t{1} << (k - 1);
  for (uint64_t g = 1; g < n; ++g) {
    const int bit = __builtin_ctzll(g) + 1;
    s[bit] = -s[bit];
    acc += 2.0 * s[bit] * m.row(bit);
    best = std::max(best, acc.cwiseAbs().sum());
  }
  return best;
}

}  // namespace platobell
