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

#include "platobell/geomstrat.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <iostream>
#include <mutex>
#include <numbers>
#include <random>

#include "parallel.hpp"
#include "platobell/errors.hpp"

namespace platobell {

// ---------------------------------------------------------------------------
// StrategySet

StrategySet::StrategySet(int m) : m_(m), words_((m + 63) / 64) {}

SignStrategy StrategySet::strategy(size_t k) const {
  SignStrategy s(m_);
  for (int i = 0; i < m_; ++i) s[i] = sign(k, i);
  return s;
}

void StrategySet::push_canonical(const uint64_t* w) {
  const size_t at = bits_.size();
  bits_.insert(bits_.end(), w, w + words_);
  if (bits_[at] & 1) {
    for (int k = 0; k < words_; ++k) bits_[at + k] = ~bits_[at + k];
    const int tail = m_ & 63;
    if (tail) bits_[at + words_ - 1] &= (uint64_t{1} << tail) - 1;
  }
}

void StrategySet::push(const SignStrategy& s) {
  if (static_cast<int>(s.size()) != m_)
    throw ValidationError("StrategySet::push: length mismatch");
  std::vector<uint64_t> w(words_, 0);
  for (int i = 0; i < m_; ++i)
    if (s[i] < 0) w[i >> 6] |= uint64_t{1} << (i & 63);
  push_canonical(w.data());
}

void StrategySet::sort_unique() {
  const size_t n = size();
  std::vector<size_t> idx(n);
  for (size_t k = 0; k < n; ++k) idx[k] = k;
  auto less = [&](size_t a, size_t b) {
    return std::lexicographical_compare(row(a), row(a) + words_, row(b),
                                        row(b) + words_);
  };
  std::sort(idx.begin(), idx.end(), less);
  std::vector<uint64_t> out;
  out.reserve(bits_.size());
  for (size_t k = 0; k < n; ++k) {
    if (k > 0 && std::equal(row(idx[k]), row(idx[k]) + words_,
                            row(idx[k - 1])))
      continue;
    out.insert(out.end(), row(idx[k]), row(idx[k]) + words_);
  }
  bits_.swap(out);
}

// ---------------------------------------------------------------------------
// Realizability: distance from the origin to conv{s_i V_i / |V_i|} by
// Wolfe's minimum-norm-point iteration.

bool is_realizable(const Eigen::MatrixXd& rows, const SignStrategy& s,
                   double tol) {
  const int m = static_cast<int>(rows.rows());
  const int d = static_cast<int>(rows.cols());
  Eigen::MatrixXd p(m, d);
  for (int i = 0; i < m; ++i) p.row(i) = s[i] * rows.row(i).normalized();

  // Quick accept with the strategy vector itself.
  {
    const Eigen::VectorXd q = p.colwise().sum().transpose();
    if (q.norm() > tol && (p * q).minCoeff() > tol * q.norm()) return true;
  }

  std::vector<int> corral = {0};
  std::vector<double> lam = {1.0};
  Eigen::VectorXd x = p.row(0).transpose();
  for (int iter = 0; iter < 200 + 20 * m; ++iter) {
    const double xn = x.norm();
    if (xn < tol) return false;
    Eigen::VectorXd dots = p * x;
    Eigen::Index j;
    const double mind = dots.minCoeff(&j);
    if (mind > tol * xn) return true;
    if (mind >= x.squaredNorm() - 1e-15) return xn > tol;
    if (std::find(corral.begin(), corral.end(), static_cast<int>(j)) !=
        corral.end())
      return xn > tol;
    corral.push_back(static_cast<int>(j));
    lam.push_back(0.0);
    for (int inner = 0; inner < 2 * (d + 2); ++inner) {
      const int k = static_cast<int>(corral.size());
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k + 1, k + 1);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) a(r, c) = p.row(corral[r]).dot(p.row(corral[c]));
        a(r, k) = 1.0;
        a(k, r) = 1.0;
      }
      rhs[k] = 1.0;
      const Eigen::VectorXd sol = a.completeOrthogonalDecomposition().solve(rhs);
      bool positive = true;
      for (int r = 0; r < k; ++r)
        if (sol[r] <= 1e-14) positive = false;
      if (positive) {
        for (int r = 0; r < k; ++r) lam[r] = sol[r];
        break;
      }
      double theta = 1.0;
      for (int r = 0; r < k; ++r)
        if (sol[r] <= 1e-14 && lam[r] - sol[r] > 0)
          theta = std::min(theta, lam[r] / (lam[r] - sol[r]));
      for (int r = 0; r < k; ++r) lam[r] += theta * (sol[r] - lam[r]);
      std::vector<int> nc;
      std::vector<double> nl;
      for (int r = 0; r < k; ++r)
        if (lam[r] > 1e-14) {
          nc.push_back(corral[r]);
          nl.push_back(lam[r]);
        }
      corral.swap(nc);
      lam.swap(nl);
      if (corral.empty()) return false;
    }
    double total = 0;
    for (double l : lam) total += l;
    x.setZero();
    for (size_t r = 0; r < corral.size(); ++r)
      x += (lam[r] / total) * p.row(corral[r]).transpose();
  }
  return x.norm() > tol;
}

// ---------------------------------------------------------------------------

VertexSet merge_antipodal(const VertexSet& v) {
  const int m = v.m();
  const Eigen::MatrixXd w = v.weighted();
  std::vector<int> partner(m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (partner[i] < 0 && partner[j] < 0 &&
          (w.row(i) + w.row(j)).norm() <= 1e-9)
        partner[i] = j, partner[j] = i;
  std::vector<int> keep;
  for (int i = 0; i < m; ++i) {
    const int j = partner[i];
    if (j < 0) {
      keep.push_back(i);
      continue;
    }
    // Lexicographically larger representative.
    bool larger = false;
    for (int k = 0; k < v.d; ++k) {
      const double a = v.vectors(i, k), b = v.vectors(j, k);
      if (std::abs(a - b) > 1e-12) {
        larger = a > b;
        break;
      }
    }
    if (larger) keep.push_back(i);
  }
  VertexSet r;
  r.name = v.name;
  r.d = v.d;
  r.vectors.resize(static_cast<Eigen::Index>(keep.size()), v.d);
  r.weights.resize(static_cast<Eigen::Index>(keep.size()));
  for (size_t k = 0; k < keep.size(); ++k) {
    const int i = keep[k];
    r.vectors.row(k) = v.vectors.row(i);
    r.weights[k] = v.weights[i] + (partner[i] >= 0 ? v.weights[partner[i]] : 0.0);
  }
  r.centrally_symmetric = false;
  return r;
}

uint64_t region_count(int m, int d) {
  if (m < 1 || d < 1) throw ValidationError("region_count: bad arguments");
  unsigned __int128 total = 0, binom = 1;  // C(m-1, k)
  for (int k = 0; k < d && k <= m - 1; ++k) {
    if (k > 0) binom = binom * (m - k) / k;
    total += binom;
    if (total > (static_cast<unsigned __int128>(1) << 62))
      throw ResourceError("region_count: overflow");
  }
  return static_cast<uint64_t>(2 * total);
}

// ---------------------------------------------------------------------------
// Corner enumeration.

namespace {

uint64_t mix(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

// Open-addressing set of packed canonical keys. Word 0 of a canonical key
// has bit 0 clear, so an all-ones word 0 marks an empty slot.
class KeyTable {
 public:
  KeyTable(int words, size_t expected) : w_(words) {
    size_t cap = 1024;
    while (cap < expected * 2) cap <<= 1;
    resize(cap);
  }

  size_t size() const { return count_; }
  size_t capacity() const { return mask_ + 1; }

  void insert(const uint64_t* k) {
    if ((count_ + 1) * 10 > capacity() * 7) grow();
    size_t at = find(k);
    if (empty(at)) {
      std::copy(k, k + w_, slots_.data() + at * w_);
      ++count_;
    }
  }

  void mark(const uint64_t* k, uint8_t bit) {
    const size_t at = find(k);
    if (!empty(at)) seen_[at] |= bit;
  }

  template <typename Fn>
  void for_each(uint8_t required, Fn&& fn) const {
    for (size_t s = 0; s <= mask_; ++s)
      if (!empty(s) && (seen_[s] & required) == required)
        fn(slots_.data() + s * w_);
  }

 private:
  bool empty(size_t s) const { return slots_[s * w_] == ~uint64_t{0}; }

  size_t find(const uint64_t* k) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < w_; ++i) h = mix(h ^ k[i]);
    size_t s = h & mask_;
    while (!empty(s) && !std::equal(k, k + w_, slots_.data() + s * w_))
      s = (s + 1) & mask_;
    return s;
  }

  void resize(size_t cap) {
    mask_ = cap - 1;
    slots_.assign(cap * w_, 0);
    for (size_t s = 0; s < cap; ++s) slots_[s * w_] = ~uint64_t{0};
    seen_.assign(cap, 0);
  }

  void grow() {
    std::vector<uint64_t> old = std::move(slots_);
    std::vector<uint8_t> old_seen = std::move(seen_);
    const size_t old_cap = mask_ + 1;
    resize(old_cap * 2);
    for (size_t s = 0; s < old_cap; ++s) {
      if (old[s * w_] == ~uint64_t{0}) continue;
      const size_t at = find(old.data() + s * w_);
      std::copy(old.data() + s * w_, old.data() + (s + 1) * w_,
                slots_.data() + at * w_);
      seen_[at] = old_seen[s];
    }
  }

  int w_;
  size_t mask_ = 0;
  size_t count_ = 0;
  std::vector<uint64_t> slots_;
  std::vector<uint8_t> seen_;
};

struct Degenerate {};

// Null vector of a (d-1) x d matrix by signed cofactors.
void cross_product(const long double* rows, int d, long double* q) {
  if (d == 2) {
    q[0] = -rows[1];
    q[1] = rows[0];
    return;
  }
  if (d == 3) {
    const long double *a = rows, *b = rows + 3;
    q[0] = a[1] * b[2] - a[2] * b[1];
    q[1] = a[2] * b[0] - a[0] * b[2];
    q[2] = a[0] * b[1] - a[1] * b[0];
    return;
  }
  const int k = d - 1;
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> minor(k, k);
  for (int j = 0; j < d; ++j) {
    for (int r = 0; r < k; ++r)
      for (int c = 0, cc = 0; c < d; ++c)
        if (c != j) minor(r, cc++) = rows[r * d + c];
    const long double det = minor.determinant();
    q[j] = ((j + k) % 2 == 0) ? det : -det;
  }
}

void flip_canonical(uint64_t* w, int words, int m) {
  if (!(w[0] & 1)) return;
  for (int k = 0; k < words; ++k) w[k] = ~w[k];
  const int tail = m & 63;
  if (tail) w[words - 1] &= (uint64_t{1} << tail) - 1;
}

// One perturbed run: feeds every canonical candidate to `sink` in batches.
void corner_run(const Eigen::MatrixXd& dirs, double eps, uint64_t seed,
                int threads, bool verbose,
                const std::function<void(const std::vector<uint64_t>&)>& sink) {
  const int m = static_cast<int>(dirs.rows());
  const int d = static_cast<int>(dirs.cols());
  const int k = d - 1;
  const int words = (m + 63) / 64;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> noise(-eps, eps);
  std::vector<long double> p(static_cast<size_t>(m) * d);
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < d; ++c) p[i * d + c] = dirs(i, c) + noise(rng);

  std::atomic<int> next_first{0};
  std::atomic<bool> degenerate{false};
  std::mutex sink_mutex;
  std::atomic<long long> done{0};

  detail::parallel_for(static_cast<size_t>(detail::resolve_threads(threads)),
                       threads, [&](size_t, size_t, int) {
    std::vector<uint64_t> buf;
    std::vector<long double> sub(static_cast<size_t>(k) * d), q(d);
    std::vector<uint64_t> base(words);
    std::vector<int> comb(k), free_rows;
    for (;;) {
      const int first = next_first.fetch_add(1);
      if (first > m - k || degenerate) break;
      // All combinations with smallest element `first`.
      comb[0] = first;
      for (int r = 1; r < k; ++r) comb[r] = first + r;
      for (;;) {
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < d; ++c) sub[r * d + c] = p[comb[r] * d + c];
        cross_product(sub.data(), d, q.data());
        long double qn = 0;
        for (int c = 0; c < d; ++c) qn += q[c] * q[c];
        qn = std::sqrt(qn);
        if (qn < 1e-9L) {
          degenerate = true;
          break;
        }
        std::fill(base.begin(), base.end(), 0);
        // Rows too close to the corner plane to trust the sign get both.
        free_rows.assign(comb.begin(), comb.end());
        int r = 0;
        for (int i = 0; i < m; ++i) {
          if (r < k && comb[r] == i) {
            ++r;
            continue;
          }
          long double dot = 0;
          for (int c = 0; c < d; ++c) dot += p[i * d + c] * q[c];
          if (std::abs(dot) < 1e-15L * qn) {
            free_rows.push_back(i);
            continue;
          }
          if (dot < 0) base[i >> 6] |= uint64_t{1} << (i & 63);
        }
        if (free_rows.size() > 12) {
          degenerate = true;
          break;
        }
        const int nfree = static_cast<int>(free_rows.size());
        for (int mask = 0; mask < (1 << nfree); ++mask) {
          const size_t at = buf.size();
          buf.insert(buf.end(), base.begin(), base.end());
          for (int b = 0; b < nfree; ++b)
            if ((mask >> b) & 1)
              buf[at + (free_rows[b] >> 6)] |= uint64_t{1} << (free_rows[b] & 63);
          flip_canonical(buf.data() + at, words, m);
        }
        if (buf.size() > (1u << 20)) {
          std::lock_guard<std::mutex> lock(sink_mutex);
          sink(buf);
          buf.clear();
        }
        // Advance to the next combination keeping comb[0] fixed.
        int pos = k - 1;
        while (pos >= 1 && comb[pos] == m - k + pos) --pos;
        if (pos < 1) break;
        ++comb[pos];
        for (int t = pos + 1; t < k; ++t) comb[t] = comb[t - 1] + 1;
      }
      const long long n = ++done;
      if (verbose && n % 50 == 0)
        std::cerr << "  corners: first index " << n << "/" << (m - k + 1)
                  << "\n";
    }
    std::lock_guard<std::mutex> lock(sink_mutex);
    if (!buf.empty()) sink(buf);
  });
  if (degenerate) throw Degenerate{};
}

StrategySet enumerate_2d(const Eigen::MatrixXd& dirs) {
  const int m = static_cast<int>(dirs.rows());
  std::vector<double> crit;
  for (int i = 0; i < m; ++i) {
    const double t = std::atan2(dirs(i, 1), dirs(i, 0));
    for (double c : {t + std::numbers::pi / 2, t - std::numbers::pi / 2}) {
      double a = std::fmod(c, 2 * std::numbers::pi);
      if (a < 0) a += 2 * std::numbers::pi;
      crit.push_back(a);
    }
  }
  std::sort(crit.begin(), crit.end());
  StrategySet out(m);
  for (size_t k = 0; k < crit.size(); ++k) {
    const double a = crit[k];
    const double b = (k + 1 < crit.size()) ? crit[k + 1]
                                           : crit[0] + 2 * std::numbers::pi;
    if (b - a < 1e-12) continue;
    const double t = 0.5 * (a + b);
    const Eigen::Vector2d q(std::cos(t), std::sin(t));
    SignStrategy s(m);
    for (int i = 0; i < m; ++i) s[i] = dirs.row(i).dot(q) > 0 ? 1 : -1;
    out.push(s);
  }
  out.sort_unique();
  return out;
}

StrategySet enumerate_exhaustive(const Eigen::MatrixXd& dirs) {
  const int m = static_cast<int>(dirs.rows());
  if (m - 1 > 26) throw ResourceError("exhaustive enumeration too large");
  StrategySet out(m);
  SignStrategy s(m);
  for (uint64_t code = 0; code < (uint64_t{1} << (m - 1)); ++code) {
    s[0] = 1;
    for (int i = 1; i < m; ++i) s[i] = ((code >> (i - 1)) & 1) ? -1 : 1;
    if (is_realizable(dirs, s)) out.push(s);
  }
  out.sort_unique();
  return out;
}

}  // namespace

StrategySet enumerate_strategies(const VertexSet& v,
                                 const EnumerateOptions& opt) {
  const int m = v.m();
  const int d = v.d;
  if (m < 2) throw ValidationError("enumerate_strategies: need m >= 2");
  if (opt.runs < 1 || opt.runs > 8)
    throw ValidationError("enumerate_strategies: runs must be in 1..8");
  Eigen::MatrixXd dirs(m, d);
  for (int i = 0; i < m; ++i) dirs.row(i) = v.vectors.row(i).normalized();

  if (d == 2) return enumerate_2d(dirs);
  if (m - 1 <= 20 || m <= d) return enumerate_exhaustive(dirs);

  const int words = (m + 63) / 64;
  KeyTable table(words, region_count(m, d) / 2);
  for (int run = 0; run < opt.runs; ++run) {
    bool ok = false;
    for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
      const uint64_t seed = mix(opt.seed * 0x100000001b3ULL + run * 131 + attempt);
      if (opt.verbose)
        std::cerr << "enumerate_strategies: run " << run + 1 << "/" << opt.runs
                  << " (m=" << m << ", d=" << d << ")\n";
      try {
        if (run == 0) {
          KeyTable fresh(words, region_count(m, d) / 2);
          corner_run(dirs, opt.eps, seed, opt.threads, opt.verbose,
                     [&](const std::vector<uint64_t>& buf) {
                       for (size_t at = 0; at < buf.size(); at += words)
                         fresh.insert(buf.data() + at);
                     });
          table = std::move(fresh);
        } else {
          const uint8_t bit = static_cast<uint8_t>(1u << run);
          corner_run(dirs, opt.eps, seed, opt.threads, opt.verbose,
                     [&](const std::vector<uint64_t>& buf) {
                       for (size_t at = 0; at < buf.size(); at += words)
                         table.mark(buf.data() + at, bit);
                     });
        }
        ok = true;
      } catch (const Degenerate&) {
        if (opt.verbose)
          std::cerr << "  degenerate perturbation, retrying\n";
      }
    }
    if (!ok)
      throw ValidationError(
          "enumerate_strategies: perturbation failed to dissolve degeneracies");
  }

  uint8_t required = 0;
  for (int run = 1; run < opt.runs; ++run) required |= uint8_t(1u << run);
  StrategySet raw(m);
  table.for_each(required, [&](const uint64_t* k) { raw.push_canonical(k); });
  raw.sort_unique();
  if (!opt.exact_filter) return raw;

  if (opt.verbose)
    std::cerr << "enumerate_strategies: filtering " << raw.size()
              << " candidates\n";
  std::vector<char> keep(raw.size(), 0);
  detail::parallel_for(raw.size(), opt.threads, [&](size_t b, size_t e, int) {
    for (size_t k = b; k < e; ++k)
      keep[k] = is_realizable(dirs, raw.strategy(k)) ? 1 : 0;
  });
  StrategySet out(m);
  for (size_t k = 0; k < raw.size(); ++k)
    if (keep[k]) out.push_canonical(raw.row(k));
  return out;
}

// ---------------------------------------------------------------------------

StrategyVectorSet strategy_vectors(const VertexSet& v, const StrategySet& s,
                                   bool include_antipodes, double rel_tol) {
  if (s.m() != v.m())
    throw ValidationError("strategy_vectors: strategy length mismatch");
  const Eigen::MatrixXd w = v.weighted();
  const long long n = static_cast<long long>(s.size());
  StrategyVectorSet out;
  out.d = v.d;
  out.include_antipodes = include_antipodes;
  out.vectors.resize(include_antipodes ? 2 * n : n, v.d);
  const Eigen::RowVectorXd total = w.colwise().sum();
  for (long long k = 0; k < n; ++k) {
    // Sum with all +1 minus twice the rows flipped to -1.
    Eigen::RowVectorXd acc = total;
    const uint64_t* row = s.row(k);
    for (int word = 0; word < s.words(); ++word) {
      uint64_t bits = row[word];
      while (bits) {
        const int i = word * 64 + __builtin_ctzll(bits);
        acc -= 2.0 * w.row(i);
        bits &= bits - 1;
      }
    }
    out.vectors.row(k) = acc;
    if (include_antipodes) out.vectors.row(n + k) = -acc;
  }
  std::vector<double> len(out.vectors.rows());
  for (Eigen::Index k = 0; k < out.vectors.rows(); ++k)
    len[k] = out.vectors.row(k).norm();
  std::sort(len.begin(), len.end(), std::greater<>());
  for (double l : len) {
    if (!out.groups.empty() &&
        out.groups.back().length - l <= rel_tol * out.groups.back().length) {
      ++out.groups.back().count;
    } else {
      out.groups.push_back({l, 1});
    }
  }
  return out;
}

BodyStrategies body_strategies(const VertexSet& v, const EnumerateOptions& opt) {
  BodyStrategies b;
  b.merged = merge_antipodal(v);
  b.strategies = enumerate_strategies(b.merged, opt);
  b.vectors = strategy_vectors(b.merged, b.strategies, false);
  return b;
}

double local_bound(const VertexSet& a, const StrategyVectorSet& sb,
                   const Eigen::MatrixXd& o, int threads) {
  if (a.d != sb.d || o.rows() != a.d || o.cols() != a.d)
    throw ValidationError("local_bound: dimension mismatch");
  const Eigen::MatrixXd aw = a.weighted();
  const Eigen::MatrixXd rotated = sb.vectors * o.transpose();
  const size_t n = static_cast<size_t>(rotated.rows());
  const int workers = detail::resolve_threads(threads);
  std::vector<double> best(workers, 0.0);
  detail::parallel_for(n, threads, [&](size_t b, size_t e, int t) {
    constexpr size_t kChunk = 2048;
    for (size_t c = b; c < e; c += kChunk) {
      const size_t len = std::min(kChunk, e - c);
      const Eigen::MatrixXd prod =
          aw * rotated.middleRows(static_cast<Eigen::Index>(c),
                                  static_cast<Eigen::Index>(len))
                   .transpose();
      best[t] = std::max(best[t], prod.cwiseAbs().colwise().sum().maxCoeff());
    }
  });
  return *std::max_element(best.begin(), best.end());
}

double local_bound_pairwise(const StrategyVectorSet& sa,
                            const StrategyVectorSet& sb,
                            const Eigen::MatrixXd& o, int threads) {
  if (sa.d != sb.d || o.rows() != sa.d || o.cols() != sa.d)
    throw ValidationError("local_bound_pairwise: dimension mismatch");
  const Eigen::MatrixXd rotated = sb.vectors * o.transpose();
  const size_t n = static_cast<size_t>(rotated.rows());
  const int workers = detail::resolve_threads(threads);
  std::vector<double> best(workers, 0.0);
  detail::parallel_for(n, threads, [&](size_t b, size_t e, int t) {
    constexpr size_t kChunk = 2048;
    for (size_t c = b; c < e; c += kChunk) {
      const size_t len = std::min(kChunk, e - c);
      const Eigen::MatrixXd prod =
          sa.vectors * rotated.middleRows(static_cast<Eigen::Index>(c),
                                          static_cast<Eigen::Index>(len))
                           .transpose();
      best[t] = std::max(best[t], prod.cwiseAbs().maxCoeff());
    }
  });
  return *std::max_element(best.begin(), best.end());
}

}  // namespace platobell
