#pragma once

// Shared fixtures and independent oracles. The oracles reimplement the
// checked quantities by direct dense linear algebra so they never share a
// code path with the library's iterative solvers.

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "qhrank/graph.hpp"

namespace qhtest {

using Dense = std::vector<std::vector<double>>;

// The 6-node hierarchical example network: edges 1->5, 2->4, 4->5, 5->3, 6->1.
inline qhrank::WeightedDigraph fig1() {
  const std::vector<qhrank::Edge> edges{
      {1, 5, 1.0}, {2, 4, 1.0}, {4, 5, 1.0}, {5, 3, 1.0}, {6, 1, 1.0}};
  return qhrank::WeightedDigraph(6, edges);
}

inline Dense weight_matrix(const qhrank::WeightedDigraph& g, double alpha) {
  const int n = g.node_count();
  Dense w(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) w[e.src - 1][e.dst - 1] = std::pow(e.weight, alpha);
  return w;
}

inline Dense transpose(const Dense& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  Dense t(cols, std::vector<double>(rows, 0.0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = a[r][c];
  return t;
}

inline Dense matmul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  Dense out(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline std::vector<double> matvec(const Dense& a, const std::vector<double>& x) {
  std::vector<double> out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  return out;
}

inline void normalize_l1(std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  if (sum <= 0.0) return;
  for (double& x : v) x /= sum;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Plain power steps on a gram matrix from the all-ones vector, normalized
// per step. The fixed point is the L1-normalized dominant eigenvector.
inline std::vector<double> gram_power(const Dense& gram, int steps) {
  std::vector<double> v(gram.size(), 1.0);
  for (int s = 0; s < steps; ++s) {
    v = matvec(gram, v);
    normalize_l1(v);
  }
  return v;
}

// Cyclic Jacobi for symmetric matrices; eigenvalues sorted descending.
inline std::vector<double> sym_eigenvalues(Dense a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

// Gaussian elimination with partial pivoting: solves a x = b in place.
inline std::vector<double> solve_linear(Dense a, std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

// Stationary solve of the standard PageRank system with uniform dangling
// redistribution and uniform out-link split:
//   x = (1-d)/n * 1 + d * M x,  M[v][u] = 1/outdeg(u) (1/n for dangling u).
inline std::vector<double> pagerank_solve(const qhrank::WeightedDigraph& g, double d) {
  const int n = g.node_count();
  Dense m(n, std::vector<double>(n, 0.0));
  std::vector<int> outdeg(n, 0);
  for (const auto& e : g.edges()) ++outdeg[e.src - 1];
  for (const auto& e : g.edges()) m[e.dst - 1][e.src - 1] = 1.0 / outdeg[e.src - 1];
  for (int u = 0; u < n; ++u)
    if (outdeg[u] == 0)
      for (int v = 0; v < n; ++v) m[v][u] = 1.0 / n;

  Dense system(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) system[i][j] = (i == j ? 1.0 : 0.0) - d * m[i][j];
  std::vector<double> rhs(n, (1.0 - d) / n);
  std::vector<double> x = solve_linear(std::move(system), std::move(rhs));
  normalize_l1(x);
  return x;
}

inline qhrank::WeightedDigraph random_graph(std::mt19937_64& eng, int n, double edge_prob,
                                            double weight_lo, double weight_hi) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_real_distribution<double> weight(weight_lo, weight_hi);
  std::vector<qhrank::Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v) continue;
      if (coin(eng) < edge_prob) edges.push_back({u, v, weight(eng)});
    }
  return qhrank::WeightedDigraph(n, edges);
}

// Random graph made strongly connected by overlaying the full cycle 1->2->...->n->1.
inline qhrank::WeightedDigraph random_strongly_connected(std::mt19937_64& eng, int n,
                                                         double edge_prob) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<qhrank::Edge> edges;
  for (int u = 1; u <= n; ++u) edges.push_back({u, u % n + 1, 1.0});
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      if (u == v || v == u % n + 1) continue;
      if (coin(eng) < edge_prob) edges.push_back({u, v, 1.0});
    }
  return qhrank::WeightedDigraph(n, edges);
}

inline qhrank::WeightedDigraph binarized(const qhrank::WeightedDigraph& g) {
  std::vector<qhrank::Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({e.src, e.dst, 1.0});
  return qhrank::WeightedDigraph(g.node_count(), edges);
}

}  // namespace qhtest
