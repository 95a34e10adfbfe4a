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


#include "platobell/shifted_gram.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>

#include "platobell/errors.hpp"
#include "platobell/geomstrat.hpp"

namespace platobell {
namespace {

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Insert-only set of fixed-width bit patterns; keys stay in insertion order.
class PatternSet {
 public:
  explicit PatternSet(int words) : w_(words), slots_(1024, 0) {}

  bool insert(const uint64_t* k) {
    if (2 * (count() + 1) > slots_.size()) grow();
    const size_t mask = slots_.size() - 1;
    for (size_t h = hash(k) & mask;; h = (h + 1) & mask) {
      if (!slots_[h]) {
        data_.insert(data_.end(), k, k + w_);
        slots_[h] = static_cast<uint32_t>(count());
        return true;
      }
      if (std::equal(k, k + w_, key(slots_[h] - 1))) return false;
    }
  }
  size_t count() const { return data_.size() / w_; }
  const uint64_t* key(size_t i) const { return data_.data() + i * w_; }
  std::vector<uint64_t> release() { return std::move(data_); }

 private:
  uint64_t hash(const uint64_t* k) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < w_; ++i) h = mix64(h ^ k[i]);
    return h;
  }
  void grow() {
    if (slots_.size() >= (size_t{1} << 31))
      throw ResourceError("shifted gram: too many cells");
    std::vector<uint32_t> next(slots_.size() * 2, 0);
    const size_t mask = next.size() - 1;
    for (size_t i = 0; i < count(); ++i) {
      size_t h = hash(key(i)) & mask;
      while (next[h]) h = (h + 1) & mask;
      next[h] = static_cast<uint32_t>(i + 1);
    }
    slots_.swap(next);
  }

  int w_;
  std::vector<uint32_t> slots_;
  std::vector<uint64_t> data_;
};

void encode(const std::vector<int>& c, int words, uint64_t* out) {
  std::fill(out, out + 2 * words, 0);
  for (size_t i = 0; i < c.size(); ++i) {
    if (!c[i]) continue;
    out[i >> 6] |= uint64_t{1} << (i & 63);
    if (c[i] < 0) out[words + (i >> 6)] |= uint64_t{1} << (i & 63);
  }
}

void decode(const uint64_t* k, int m, int words, std::vector<int>& c) {
  c.assign(m, 0);
  for (int i = 0; i < m; ++i)
    if ((k[i >> 6] >> (i & 63)) & 1)
      c[i] = ((k[words + (i >> 6)] >> (i & 63)) & 1) ? -1 : 1;
}

// Cones of the central arrangement of `rows`; the first d rows must be
// independent. Bit j of a mask means row j is on its negative side.
std::vector<uint64_t> local_cones(const Eigen::MatrixXd& rows, int d) {
  const int k = static_cast<int>(rows.rows());
  if (k > 63) throw ResourceError("shifted gram: more than 63 rows through a vertex");
  std::vector<uint64_t> cur(uint64_t{1} << d);
  std::iota(cur.begin(), cur.end(), uint64_t{0});
  SignStrategy s;
  for (int j = d; j < k; ++j) {
    const Eigen::MatrixXd sub = rows.topRows(j + 1);
    std::vector<uint64_t> next;
    s.assign(j + 1, 1);
    for (uint64_t c : cur) {
      for (int i = 0; i < j; ++i) s[i] = ((c >> i) & 1) ? -1 : 1;
      s[j] = 1;
      if (is_realizable(sub, s)) next.push_back(c);
      s[j] = -1;
      if (is_realizable(sub, s)) next.push_back(c | (uint64_t{1} << j));
    }
    cur.swap(next);
  }
  return cur;
}

double f_of(const Eigen::MatrixXd& a, double lambda, const std::vector<int>& c) {
  Eigen::VectorXd s = Eigen::VectorXd::Zero(a.cols());
  int n = 0;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i]) {
      s += c[i] * a.row(i).transpose();
      ++n;
    }
  return s.squaredNorm() - 2 * lambda * n + lambda * static_cast<double>(c.size());
}

int64_t int_value(const IntMatrix& mi, const std::vector<int>& a,
                  const std::vector<int>& b) {
  int64_t v = 0;
  for (int i = 0; i < mi.rows(); ++i) {
    int64_t r = 0;
    for (int j = 0; j < mi.cols(); ++j) r += b[j] * mi(i, j);
    v += a[i] * r;
  }
  return v;
}

}  // namespace

ShiftedGram::ShiftedGram(const Eigen::MatrixXd& a, double lambda,
                         const ShiftedGramOptions& opt)
    : a_(a), lambda_(lambda), opt_(opt) {
  if (a.rows() < 1 || a.cols() < 1) throw ValidationError("shifted gram: empty vector set");
  if (!(lambda > 0) || !std::isfinite(lambda))
    throw ValidationError("shifted gram: lambda must be finite and positive");
  if (Eigen::FullPivLU<Eigen::MatrixXd>(a).rank() < a.cols())
    throw ValidationError("shifted gram: vectors must span the space");
  words_ = (m() + 63) / 64;
  enumerate_cells();
}

void ShiftedGram::enumerate_cells() {
  const auto t0 = std::chrono::steady_clock::now();
  const int m = this->m(), d = this->d();
  PatternSet table(2 * words_);
  std::map<std::vector<int>, std::vector<uint64_t>> cone_cache;
  std::vector<uint64_t> key(2 * words_);
  const Eigen::VectorXd norms = a_.rowwise().norm();

  std::vector<int> comb(d), tight, basis;
  std::iota(comb.begin(), comb.end(), 0);
  Eigen::MatrixXd sub(d, d), q(d, d);
  Eigen::VectorXd rhs(d);
  int last_first = -1;
  for (;;) {
    if (opt_.verbose && comb[0] != last_first && comb[0] % 10 == 0) {
      last_first = comb[0];
      std::cerr << "shifted gram: first row " << comb[0] << "/" << m - d
                << ", cells " << table.count() << "\n";
    }
    for (int r = 0; r < d; ++r) sub.row(r) = a_.row(comb[r]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
    lu.setThreshold(1e-10);
    if (lu.isInvertible()) {
      for (int mask = 0; mask < (1 << d); ++mask) {
        for (int r = 0; r < d; ++r) rhs[r] = ((mask >> r) & 1) ? -1.0 : 1.0;
        const Eigen::VectorXd v = lu.solve(rhs);
        const Eigen::VectorXd u = a_ * v;
        const double vn = v.norm();
        tight.clear();
        for (int i = 0; i < m; ++i)
          if (std::abs(std::abs(u[i]) - 1) <= 1e-9 * std::max(1.0, norms[i] * vn))
            tight.push_back(i);
        if (tight.empty() || tight[0] != comb[0]) continue;
        // Each vertex once: from the greedy (lexicographically first) basis.
        basis.clear();
        int rank = 0;
        for (int i : tight) {
          Eigen::VectorXd r = a_.row(i).transpose();
          for (int c = 0; c < rank; ++c) r -= q.col(c).dot(r) * q.col(c);
          if (r.norm() > 1e-8 * norms[i]) {
            q.col(rank++) = r.normalized();
            basis.push_back(i);
            if (rank == d) break;
          }
        }
        if (basis != comb) continue;
        ++vertices_;
        std::vector<int> order = basis;
        for (int i : tight)
          if (!std::binary_search(basis.begin(), basis.end(), i)) order.push_back(i);

        // Pattern away from the vertex hyperplanes.
        std::fill(key.begin(), key.end(), 0);
        for (int i = 0; i < m; ++i)
          if (std::abs(u[i]) > 1 && !std::binary_search(tight.begin(), tight.end(), i)) {
            key[i >> 6] |= uint64_t{1} << (i & 63);
            if (u[i] < 0) key[words_ + (i >> 6)] |= uint64_t{1} << (i & 63);
          }
        const std::vector<uint64_t>* cones;
        std::vector<uint64_t> all;
        if (static_cast<int>(order.size()) == d) {
          all.resize(uint64_t{1} << d);
          std::iota(all.begin(), all.end(), uint64_t{0});
          cones = &all;
        } else {
          auto it = cone_cache.find(order);
          if (it == cone_cache.end()) {
            Eigen::MatrixXd rows(order.size(), d);
            for (size_t j = 0; j < order.size(); ++j) rows.row(j) = a_.row(order[j]);
            it = cone_cache.emplace(order, local_cones(rows, d)).first;
          }
          cones = &it->second;
        }
        std::vector<uint64_t> cell(2 * words_);
        for (uint64_t cone : *cones) {
          cell = key;
          for (size_t j = 0; j < order.size(); ++j) {
            const int i = order[j];
            const bool up = !((cone >> j) & 1);
            // Leaving the slab |A_i . y| <= 1 on the side of u_i.
            if (up == (u[i] > 0)) {
              cell[i >> 6] |= uint64_t{1} << (i & 63);
              if (u[i] < 0) cell[words_ + (i >> 6)] |= uint64_t{1} << (i & 63);
            }
          }
          table.insert(cell.data());
        }
      }
    }
    int p = d - 1;
    while (p >= 0 && comb[p] == m - d + p) --p;
    if (p < 0) break;
    ++comb[p];
    for (int r = p + 1; r < d; ++r) comb[r] = comb[r - 1] + 1;
  }

  // Sort by decreasing f.
  const size_t n = table.count();
  std::vector<double> f(n);
  std::vector<int> c;
  for (size_t k = 0; k < n; ++k) {
    decode(table.key(k), m, words_, c);
    f[k] = f_of(a_, lambda_, c);
  }
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return f[x] > f[y]; });
  const std::vector<uint64_t> raw = table.release();
  cells_.resize(raw.size());
  f_.resize(n);
  for (size_t k = 0; k < n; ++k) {
    std::copy(raw.begin() + idx[k] * 2 * words_, raw.begin() + (idx[k] + 1) * 2 * words_,
              cells_.begin() + k * 2 * words_);
    f_[k] = f[idx[k]];
  }
  if (opt_.verbose)
    std::cerr << "shifted gram: " << vertices_ << " vertices, " << n << " cells in "
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << " s\n";
}

std::vector<int> ShiftedGram::cell_pattern(size_t k) const {
  std::vector<int> c;
  decode(cells_.data() + k * 2 * words_, m(), words_, c);
  return c;
}

double ShiftedGram::value(const std::vector<int>& a, const std::vector<int>& b) const {
  if (static_cast<int>(a.size()) != m() || static_cast<int>(b.size()) != m())
    throw ValidationError("shifted gram: strategy length mismatch");
  Eigen::VectorXd sc = Eigen::VectorXd::Zero(d()), se = Eigen::VectorXd::Zero(d());
  int nc = 0;
  for (int i = 0; i < m(); ++i) {
    if (a[i] == b[i]) {
      sc += a[i] * a_.row(i).transpose();
      ++nc;
    } else {
      se += a[i] * a_.row(i).transpose();
    }
  }
  return sc.squaredNorm() - se.squaredNorm() - lambda_ * (nc - (m() - nc));
}

uint64_t ShiftedGram::for_each_pair_above(
    double t,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) const {
  const int m = this->m(), d = this->d();
  const double te = t - 1e-9 * (1 + std::abs(t));
  const Eigen::VectorXd norms = a_.rowwise().norm();
  PatternSet seen(2 * words_);
  std::vector<uint64_t> key(2 * words_);
  uint64_t pairs = 0, candidates = 0;
  std::vector<int> w, c, a(m), b(m), e_idx;
  std::vector<double> e_rest;

  struct Move {
    int i;
    int v;
    double cost;
  };
  std::vector<std::vector<Move>> options;

  // Sign choices on E with |S_E|^2 <= budget.
  std::function<void(size_t, const Eigen::VectorXd&, double)> signs =
      [&](size_t j, const Eigen::VectorXd& p, double budget) {
        if (j == e_idx.size()) {
          if (p.squaredNorm() <= budget) {
            if (++pairs > opt_.max_pairs)
              throw ResourceError("shifted gram: near-optimal pair limit exceeded");
            for (int i = 0; i < m; ++i) b[i] = c[i] ? c[i] : -a[i];
            fn(a, b);
          }
          return;
        }
        const double reach = p.norm() - e_rest[j];
        if (reach > 0 && reach * reach > budget) return;
        const int i = e_idx[j];
        for (int s : {1, -1}) {
          a[i] = s;
          signs(j + 1, p + s * a_.row(i).transpose(), budget);
        }
      };

  auto visit = [&]() {
    encode(c, words_, key.data());
    if (!seen.insert(key.data())) return;
    ++candidates;
    const double fc = f_of(a_, lambda_, c);
    if (fc < te) return;
    e_idx.clear();
    for (int i = 0; i < m; ++i) {
      if (c[i]) a[i] = c[i];
      else e_idx.push_back(i);
    }
    e_rest.assign(e_idx.size() + 1, 0.0);
    for (size_t j = e_idx.size(); j-- > 0;) e_rest[j] = e_rest[j + 1] + norms[e_idx[j]];
    signs(0, Eigen::VectorXd::Zero(d), fc - te);
  };

  std::function<void(size_t, double, double)> moves = [&](size_t j, double spent, double budget) {
    if (j == options.size()) {
      visit();
      return;
    }
    moves(j + 1, spent, budget);
    for (const Move& mv : options[j]) {
      if (spent + mv.cost > budget) continue;
      const int old = c[mv.i];
      c[mv.i] = mv.v;
      moves(j + 1, spent + mv.cost, budget);
      c[mv.i] = old;
    }
  };

  for (size_t k = 0; k < f_.size() && f_[k] >= te; ++k) {
    decode(cells_.data() + k * 2 * words_, m, words_, w);
    // The mirror cell yields the negated pairs.
    const auto nz = std::find_if(w.begin(), w.end(), [](int x) { return x != 0; });
    if (nz != w.end() && *nz < 0) continue;
    const double budget = f_[k] - te;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < m; ++i)
      if (w[i]) x += w[i] * a_.row(i).transpose();
    x /= lambda_;
    const double rad = std::sqrt(budget) / lambda_;
    options.clear();
    bool empty = false;
    for (int i = 0; i < m && !empty; ++i) {
      const double uc = a_.row(i).dot(x);
      double lo = uc - norms[i] * rad - 1e-9, hi = uc + norms[i] * rad + 1e-9;
      if (w[i] > 0) lo = std::max(lo, 1.0);
      if (w[i] < 0) hi = std::min(hi, -1.0);
      if (w[i] == 0) {
        lo = std::max(lo, -1.0);
        hi = std::min(hi, 1.0);
      }
      if (lo > hi) {
        empty = true;
        break;
      }
      std::vector<Move> opt;
      for (int v = -1; v <= 1; ++v) {
        if (v == w[i]) continue;
        // Loss of moving c_i from w to v at A_i . y = u, linear in u.
        const auto loss = [&](double u) {
          return (w[i] - v) * u - (std::abs(w[i]) - std::abs(v));
        };
        const double cost = 2 * lambda_ * std::max(0.0, std::min(loss(lo), loss(hi)));
        if (cost <= budget) opt.push_back({i, v, cost});
      }
      if (!opt.empty()) options.push_back(std::move(opt));
    }
    if (empty) continue;
    c = w;
    moves(0, 0.0, budget);
  }
  if (opt_.verbose)
    std::cerr << "shifted gram: threshold " << t << ", " << candidates << " candidates, "
              << pairs << " pairs\n";
  return pairs;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> ShiftedGram::seeds(
    size_t count) const {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (size_t k = 0; k < f_.size() && out.size() < count; ++k) {
    const std::vector<int> c = cell_pattern(k);
    std::vector<int> a(m()), b(m());
    Eigen::VectorXd p = Eigen::VectorXd::Zero(d());
    for (int i = 0; i < m(); ++i) {
      if (c[i]) {
        a[i] = b[i] = c[i];
        continue;
      }
      const int s = p.dot(a_.row(i)) > 0 ? -1 : 1;
      p += s * a_.row(i).transpose();
      a[i] = s;
      b[i] = -s;
    }
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

ShiftedGram::RealResult ShiftedGram::local_bound() const {
  RealResult r;
  r.value = -std::numeric_limits<double>::infinity();
  for (auto& [a, b] : seeds(1000)) {
    const double v = value(a, b);
    if (v > r.value) {
      r.value = v;
      r.witness_a = a;
      r.witness_b = b;
    }
  }
  r.pairs = for_each_pair_above(r.value, [&](const std::vector<int>& a, const std::vector<int>& b) {
    const double v = value(a, b);
    if (v > r.value) {
      r.value = v;
      r.witness_a = a;
      r.witness_b = b;
    }
  });
  return r;
}

IntBoundResult ShiftedGram::local_bound_int(const IntMatrix& mi, int64_t scale,
                                            double slack) const {
  if (mi.rows() != m() || mi.cols() != m())
    throw ValidationError("shifted gram: integer matrix has the wrong shape");
  if (scale < 1 || !(slack >= 0)) throw ValidationError("shifted gram: bad scale or slack");
  const auto t0 = std::chrono::steady_clock::now();
  IntBoundResult r;
  r.value = INT64_MIN;
  auto score = [&](const std::vector<int>& a, const std::vector<int>& b) {
    const int64_t v = int_value(mi, a, b);
    if (v > r.value) {
      r.value = v;
      r.witness_a = a;
      r.witness_b = b;
    }
  };
  for (auto& [a, b] : seeds(1000)) score(a, b);
  // Any pair beating the seed has scale * M(a, b) >= value - slack.
  const double t = (static_cast<double>(r.value) - slack) / static_cast<double>(scale);
  r.nodes = for_each_pair_above(t, score);
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

BoundBracket ShiftedGram::bracket(const Eigen::MatrixXd& m, int64_t scale) const {
  if (m.rows() != this->m() || m.cols() != this->m())
    throw ValidationError("shifted gram: matrix has the wrong shape");
  const Eigen::MatrixXd g =
      a_ * a_.transpose() - lambda_ * Eigen::MatrixXd::Identity(this->m(), this->m());
  const double dev = (m - g).cwiseAbs().sum();
  if (dev > 1e-9 * (1 + g.cwiseAbs().sum()))
    throw ValidationError("shifted gram: matrix is not A A^T - lambda I");
  BoundBracket br;
  br.scale = fit_scale(m, scale);
  const IntMatrix mi = floor_scaled(m, br.scale, &br.delta_sum);
  const double s = static_cast<double>(br.scale);
  double slack = s * dev;
  for (int i = 0; i < mi.rows(); ++i)
    for (int j = 0; j < mi.cols(); ++j) slack += std::abs(s * m(i, j) - mi(i, j));
  const IntBoundResult r = local_bound_int(mi, br.scale, slack);
  br.int_value = r.value;
  br.nodes = r.nodes;
  br.witness_a = r.witness_a;
  br.witness_b = r.witness_b;
  br.upper = (static_cast<double>(r.value) + br.delta_sum) / s;
  br.lower = Eigen::Map<const Eigen::VectorXi>(r.witness_a.data(), this->m())
                 .cast<double>()
                 .dot(m * Eigen::Map<const Eigen::VectorXi>(r.witness_b.data(), this->m())
                              .cast<double>());
  br.upper = std::max(br.upper, br.lower);
  return br;
}

}  // namespace platobell
