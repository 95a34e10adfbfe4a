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

#include "platobell/text_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "platobell/errors.hpp"

namespace platobell {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

template <typename T>
T read_value(std::istream& is, const char* what) {
  T x;
  if (!(is >> x)) throw ValidationError(std::string("could not read ") + what);
  return x;
}

void read_shape(std::istream& is, long long& r, long long& c) {
  r = read_value<long long>(is, "header");
  c = read_value<long long>(is, "header");
  if (r < 0 || c < 0 || r > (1LL << 28) || c > (1LL << 20))
    throw ValidationError("bad header dimensions");
}

void write_rows(std::ostream& os, const Eigen::MatrixXd& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << format_real(m(i, j));
    os << '\n';
  }
}

}  // namespace

void write_vertex_set(std::ostream& os, const VertexSet& v) {
  write_rows(os, v.weighted());
}

VertexSet read_vertex_set(std::istream& is, const std::string& name) {
  const Eigen::MatrixXd rows = read_matrix(is);
  if (rows.rows() == 0 || rows.cols() == 0)
    throw ValidationError("vertex set is empty");
  return make_vertex_set(name, rows);
}

void write_matrix(std::ostream& os, const Eigen::MatrixXd& m) { write_rows(os, m); }

Eigen::MatrixXd read_matrix(std::istream& is) {
  long long r, c;
  read_shape(is, r, c);
  Eigen::MatrixXd m(r, c);
  for (long long i = 0; i < r; ++i)
    for (long long j = 0; j < c; ++j) m(i, j) = read_value<double>(is, "matrix entry");
  return m;
}

void write_int_matrix(std::ostream& os, const IntMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
}

IntMatrix read_int_matrix(std::istream& is) {
  long long r, c;
  read_shape(is, r, c);
  std::vector<int64_t> e;
  e.reserve(static_cast<size_t>(r * c));
  for (long long k = 0; k < r * c; ++k)
    e.push_back(read_value<long long>(is, "integer matrix entry"));
  return IntMatrix(static_cast<int>(r), static_cast<int>(c), std::move(e));
}

void write_strategies_text(std::ostream& os, const StrategySet& s) {
  for (size_t k = 0; k < s.size(); ++k) {
    for (int i = 0; i < s.m(); ++i) os << (i ? " " : "") << (s.sign(k, i) > 0 ? "+1" : "-1");
    os << '\n';
  }
}

StrategySet read_strategies_text(std::istream& is) {
  std::vector<SignStrategy> rows;
  std::string line;
  size_t m = 0;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    SignStrategy s;
    int x;
    while (ls >> x) {
      if (x != 1 && x != -1) throw ValidationError("strategy entry is not +-1");
      s.push_back(x);
    }
    if (s.empty()) continue;
    if (m == 0) m = s.size();
    if (s.size() != m) throw ValidationError("strategy rows differ in length");
    rows.push_back(std::move(s));
  }
  StrategySet out(static_cast<int>(m));
  for (const auto& s : rows) out.push(s);
  return out;
}

void write_strategies_binary(std::ostream& os, const StrategySet& s) {
  auto put = [&os](uint64_t x, int bytes) {
    for (int b = 0; b < bytes; ++b) os.put(static_cast<char>((x >> (8 * b)) & 0xff));
  };
  put(s.size(), 8);
  put(static_cast<uint64_t>(s.m()), 4);
  const int nbytes = (s.m() + 7) / 8;
  for (size_t k = 0; k < s.size(); ++k) {
    const uint64_t* w = s.row(k);
    for (int b = 0; b < nbytes; ++b)
      os.put(static_cast<char>((w[b / 8] >> (8 * (b % 8))) & 0xff));
  }
}

StrategySet read_strategies_binary(std::istream& is) {
  auto get = [&is](int bytes) {
    uint64_t x = 0;
    for (int b = 0; b < bytes; ++b) {
      const int c = is.get();
      if (c == EOF) throw ValidationError("truncated strategy file");
      x |= static_cast<uint64_t>(c & 0xff) << (8 * b);
    }
    return x;
  };
  const uint64_t n = get(8);
  const uint64_t m = get(4);
  if (m == 0 || m > (1u << 20)) throw ValidationError("bad strategy length");
  StrategySet out(static_cast<int>(m));
  const int nbytes = static_cast<int>((m + 7) / 8);
  std::vector<uint64_t> w(out.words());
  for (uint64_t k = 0; k < n; ++k) {
    std::fill(w.begin(), w.end(), 0);
    for (int b = 0; b < nbytes; ++b) w[b / 8] |= get(1) << (8 * (b % 8));
    out.push_canonical(w.data());
  }
  return out;
}

void write_group_csv(std::ostream& os, const StrategyVectorSet& s) {
  os << "length,multiplicity\n";
  for (const auto& g : s.groups) os << format_real(g.length) << ',' << g.count << '\n';
}

void write_strategy_vectors(std::ostream& os, const StrategyVectorSet& s) {
  write_rows(os, s.vectors);
}

VertexSet load_vertex_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  return read_vertex_set(in, std::filesystem::path(path).stem().string());
}

void save_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << content;
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace platobell
