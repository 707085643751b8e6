#pragma once

// Slow reference implementations used to cross-check the engine. Nothing here
// calls into the engine's sign or determinant machinery.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "griffiths/exterior.hpp"
#include "griffiths/linalg.hpp"
#include "griffiths/polynomial.hpp"
#include "griffiths/riemann.hpp"

namespace oracle {

using griffiths::ExteriorForm;
using griffiths::MultiIndex;
using griffiths::Polynomial;
using griffiths::Rational;
using griffiths::RiemannTensor;
using griffiths::Scalar;
using griffiths::ScalarMatrix;

inline int perm_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) ++inversions;
    }
  return inversions % 2 == 0 ? 1 : -1;
}

// Dense form: sorted index tuple -> rational coefficient.
using Dense = std::map<std::vector<int>, Rational>;

inline Dense dense(const ExteriorForm& f) {
  Dense out;
  for (const auto& [idx, c] : f.terms()) out[idx.indices()] = c.exact();
  return out;
}

inline void add_term(Dense& d, std::vector<int> idx, const Rational& c) {
  const int sign = perm_sign(idx);
  if (sign == 0 || c == 0) return;
  std::sort(idx.begin(), idx.end());
  Rational& slot = d[idx];
  slot += sign * c;
  if (slot == 0) d.erase(idx);
}

// Builds an engine form from unsorted index lists, sorting with the inversion count.
inline ExteriorForm form(int dim, int degree, const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
  Dense d;
  for (const auto& [idx, c] : terms) add_term(d, idx, c);
  ExteriorForm f(dim, degree);
  for (const auto& [idx, c] : d) f.accumulate(MultiIndex(idx), Scalar(c));
  return f;
}

inline Dense wedge(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ia, ca] : a)
    for (const auto& [ib, cb] : b) {
      std::vector<int> joined = ia;
      joined.insert(joined.end(), ib.begin(), ib.end());
      add_term(out, joined, ca * cb);
    }
  return out;
}

inline Dense hodge(const Dense& a, int dim) {
  Dense out;
  for (const auto& [idx, c] : a) {
    std::vector<int> full = idx;
    std::vector<int> rest;
    for (int j = 0; j < dim; ++j)
      if (!std::binary_search(idx.begin(), idx.end(), j)) rest.push_back(j);
    full.insert(full.end(), rest.begin(), rest.end());
    out[rest] += perm_sign(full) * c;
  }
  return out;
}

inline Dense interior(int j, const Dense& a) {
  Dense out;
  for (const auto& [idx, c] : a) {
    auto it = std::find(idx.begin(), idx.end(), j);
    if (it == idx.end()) continue;
    const int pos = static_cast<int>(it - idx.begin());
    std::vector<int> rest = idx;
    rest.erase(rest.begin() + pos);
    add_term(out, rest, (pos % 2 == 0 ? 1 : -1) * c);
  }
  return out;
}

inline Rational leibniz_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Rational term = perm_sign(perm);
    for (std::size_t r = 0; r < n && term != 0; ++r) term *= m[r][static_cast<std::size_t>(perm[r])];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Polynomial leibniz_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total;
  do {
    Polynomial term = Polynomial::constant(perm_sign(perm));
    for (std::size_t r = 0; r < n; ++r) term = term * m[r][static_cast<std::size_t>(perm[r])];
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<Rational>> to_rows(const ScalarMatrix& A) {
  std::vector<std::vector<Rational>> rows(A.rows(), std::vector<Rational>(A.cols()));
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) rows[r][c] = A(r, c).exact();
  return rows;
}

// Sum of i x i principal minors, each by Leibniz.
inline Rational sigma(int i, const ScalarMatrix& A) {
  const int n = static_cast<int>(A.rows());
  if (i == 0) return 1;
  auto full = to_rows(A);
  Rational total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    std::vector<int> pick;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1u) pick.push_back(j);
    std::vector<std::vector<Rational>> sub(pick.size(), std::vector<Rational>(pick.size()));
    for (std::size_t r = 0; r < pick.size(); ++r)
      for (std::size_t c = 0; c < pick.size(); ++c) sub[r][c] = full[pick[r]][pick[c]];
    total += leibniz_det(sub);
  }
  return total;
}

// Symbolic tridiagonal matrix of the symmetry problem, determinant by Leibniz.
inline Polynomial symmetry_det(int n, const Rational& eps) {
  const auto m = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<Polynomial>> L(m, std::vector<Polynomial>(m));
  for (int j = 0; j <= n; ++j) {
    L[j][j] = Polynomial::monomial(-1, 1);
    if (j < n) L[j][j + 1] = Polynomial::constant(n - j);
    if (j < n) L[j + 1][j] = Polynomial::constant(-(j + 1) * eps);
  }
  return leibniz_det(L);
}

// R_{ijpq} = k (d_iq d_jp - d_ip d_jq).
inline Rational csc_component(const Rational& k, int i, int j, int p, int q) {
  return k * (Rational((i == q) * (j == p)) - Rational((i == p) * (j == q)));
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

inline Rational factorial(int n) {
  Rational r = 1;
  for (int j = 2; j <= n; ++j) r *= j;
  return r;
}

inline ScalarMatrix random_symmetric(std::mt19937_64& gen, int n) {
  ScalarMatrix A(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      Scalar v = Scalar::rational(num(gen), den(gen));
      A(r, c) = v;
      A(c, r) = v;
    }
  return A;
}

inline ExteriorForm random_form(std::mt19937_64& gen, int dim, int degree, int terms) {
  ExteriorForm f(dim, degree);
  std::uniform_int_distribution<int> coef(-4, 4), leg(0, dim - 1);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx;
    while (static_cast<int>(idx.size()) < degree) {
      int j = leg(gen);
      if (std::find(idx.begin(), idx.end(), j) == idx.end()) idx.push_back(j);
    }
    std::sort(idx.begin(), idx.end());
    f.accumulate(MultiIndex(idx), Scalar(coef(gen)));
  }
  return f;
}

}  // namespace oracle
