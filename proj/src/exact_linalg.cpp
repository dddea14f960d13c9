// Copyright 2026 The Authors.
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

#include "cellforest/exact_linalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cellforest {
namespace {

template <class T>
T abs_of(const T& x) {
  if (x < 0) return -x;
  return x;
}

// Runs `small` on the int64 image of `a` when every entry fits, falling back
// to `big` on overflow.
template <class R, class Small, class Big>
R with_fast_path(const IntMatrix& a, Small small, Big big) {
  if (auto s = to_small(a)) {
    try {
      return small(*s);
    } catch (const ArithmeticOverflow&) {
    }
  }
  return big(a);
}

IntMatrix big_of(const IntMatrix& m) { return m; }
IntMatrix big_of(const SmallMatrix& m) { return to_big(m); }

// ---------------------------------------------------------------------------
// Smith normal form.

template <class T>
struct SnfState {
  Matrix<T> a;
  Matrix<T> u;
  Matrix<T> v;
  bool track;
};

template <class T>
void snf_run(SnfState<T>& s) {
  Matrix<T>& a = s.a;
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    // Pivot of least absolute value in the trailing block.
    std::size_t pi = m, pj = n;
    T best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        T av = abs_of(a(i, j));
        if (pi == m || av < best) {
          best = av;
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;
    a.swap_rows(t, pi);
    a.swap_cols(t, pj);
    if (s.track) {
      s.u.swap_rows(t, pi);
      s.v.swap_cols(t, pj);
    }

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        T q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        if (s.track) s.u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        T q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        if (s.track) s.v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t into the pivot.
        std::size_t bi = t, bj = t;
        T b = abs_of(a(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs_of(a(i, t)) < b) b = abs_of(a(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs_of(a(t, j)) < b) b = abs_of(a(t, j)), bi = t, bj = j;
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);
        if (s.track) {
          s.u.swap_rows(t, bi);
          s.v.swap_cols(t, bj);
        }
        continue;
      }
      // Divisibility: an entry not divisible by the pivot is pulled into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, T(1));
            if (s.track) s.u.add_row_multiple(t, i, T(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      if (s.track) s.u.negate_row(t);
    }
  }
}

template <class T>
SmithDecomposition snf_typed(const Matrix<T>& a, bool track) {
  SnfState<T> s{a, track ? Matrix<T>::identity(a.rows()) : Matrix<T>(),
                track ? Matrix<T>::identity(a.cols()) : Matrix<T>(), track};
  snf_run(s);
  return {big_of(s.u), big_of(s.a), big_of(s.v)};
}

// ---------------------------------------------------------------------------
// Column echelon (Hermite) form with optional transform tracking.

template <class T>
struct ColumnEchelon {
  Matrix<T> h;  // a * v
  Matrix<T> v;
  std::size_t rank = 0;
};

template <class T>
ColumnEchelon<T> column_echelon(const Matrix<T>& a, bool track, bool reduce) {
  ColumnEchelon<T> e{a, track ? Matrix<T>::identity(a.cols()) : Matrix<T>(), 0};
  Matrix<T>& h = e.h;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t i = 0; i < m && r < n; ++i) {
    // Euclid across columns r..n-1 in row i.
    for (std::size_t j = r + 1; j < n; ++j) {
      while (h(i, j) != 0) {
        T q = h(i, r) / h(i, j);
        h.add_col_multiple(r, j, -q);
        h.swap_cols(r, j);
        if (track) {
          e.v.add_col_multiple(r, j, -q);
          e.v.swap_cols(r, j);
        }
      }
    }
    if (h(i, r) == 0) continue;
    if (h(i, r) < 0) {
      h.negate_col(r);
      if (track) e.v.negate_col(r);
    }
    if (reduce) {
      for (std::size_t j = 0; j < r; ++j) {
        T q = floor_div(h(i, j), h(i, r));
        h.add_col_multiple(j, r, -q);
        if (track) e.v.add_col_multiple(j, r, -q);
      }
    }
    ++r;
  }
  e.rank = r;
  return e;
}

template <class T>
IntMatrix hermite_typed(const Matrix<T>& a) {
  auto e = column_echelon(a, false, true);
  return big_of(e.h.col_range(0, e.rank));
}

template <class T>
IntMatrix kernel_typed(const Matrix<T>& a) {
  auto e = column_echelon(a, true, false);
  Matrix<T> k = e.v.col_range(e.rank, a.cols());
  return big_of(k);
}

// ---------------------------------------------------------------------------
// Fraction-free elimination.

template <class T>
std::size_t bareiss_rank(Matrix<T> a) {
  const std::size_t m = a.rows(), n = a.cols();
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

template <class T>
T bareiss_det(Matrix<T> a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  T prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return T(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return sign < 0 ? T(-d) : d;
}

// Reduced row echelon form over Q in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = -a(i, c);
      a.add_row_multiple(i, r, f);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class T>
std::string poly_string(const Polynomial<T>& p) {
  if (p.coefficients.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.coefficients.size(); i-- > 0;) {
    const T& c = p.coefficients[i];
    if (c == 0) continue;
    T mag = c < 0 ? T(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      out << to_string(mag);
      if (i > 0) out << "*";
    }
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
  }
  return first ? "0" : out.str();
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> f;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) f.push_back(D(i, i));
  return f;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  return with_fast_path<SmithDecomposition>(
      a, [](const SmallMatrix& s) { return snf_typed(s, true); },
      [](const IntMatrix& b) { return snf_typed(b, true); });
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
  return with_fast_path<SmithDecomposition>(
             a, [](const SmallMatrix& s) { return snf_typed(s, false); },
             [](const IntMatrix& b) { return snf_typed(b, false); })
      .invariant_factors();
}

IntMatrix column_hermite_basis(const IntMatrix& a) {
  return with_fast_path<IntMatrix>(
      a, [](const SmallMatrix& s) { return hermite_typed(s); },
      [](const IntMatrix& b) { return hermite_typed(b); });
}

IntMatrix kernel_basis(const IntMatrix& a) {
  IntMatrix k = with_fast_path<IntMatrix>(
      a, [](const SmallMatrix& s) { return kernel_typed(s); },
      [](const IntMatrix& b) { return kernel_typed(b); });
  return column_hermite_basis(k);
}

IntMatrix saturation_basis(const IntMatrix& a) {
  IntMatrix orth = kernel_basis(a.transpose());
  return kernel_basis(orth.transpose());
}

std::size_t rank(const IntMatrix& a) {
  return with_fast_path<std::size_t>(
      a, [](const SmallMatrix& s) { return bareiss_rank(s); },
      [](const IntMatrix& b) { return bareiss_rank(b); });
}

std::size_t rank(const RatMatrix& a) {
  RatMatrix c = a;
  return rref(c, c.cols()).size();
}

Integer determinant(const IntMatrix& a) {
  return with_fast_path<Integer>(
      a, [](const SmallMatrix& s) { return to_integer(bareiss_det(s)); },
      [](const IntMatrix& b) { return bareiss_det(b); });
}

Rational determinant(const RatMatrix& a) {
  if (!a.square()) throw std::invalid_argument("determinant of a non-square matrix");
  RatMatrix c = a;
  const std::size_t n = c.rows();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && c(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      c.swap_rows(k, p);
      d = -d;
    }
    d *= c(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (c(i, k) == 0) continue;
      Rational f = -c(i, k) / c(k, k);
      c.add_row_multiple(i, k, f);
    }
  }
  return d;
}

Integer gram_det(const IntMatrix& b) { return determinant(b.transpose() * b); }
Rational gram_det(const RatMatrix& b) { return determinant(b.transpose() * b); }

RatMatrix inverse(const RatMatrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug = hstack(a, RatMatrix::identity(n));
  if (rref(aug, n).size() != n) throw std::domain_error("singular matrix");
  std::vector<std::size_t> right(n);
  for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
  return aug.select_cols(right);
}

RatMatrix coordinates_in(const RatMatrix& basis, const RatMatrix& vectors) {
  if (basis.rows() != vectors.rows()) throw std::invalid_argument("coordinates_in: row mismatch");
  const std::size_t k = basis.cols();
  RatMatrix aug = hstack(basis, vectors);
  auto piv = rref(aug, k);
  if (piv.size() != k) throw std::domain_error("coordinates_in: basis columns are dependent");
  for (std::size_t i = k; i < aug.rows(); ++i)
    for (std::size_t j = k; j < aug.cols(); ++j)
      if (aug(i, j) != 0) throw std::domain_error("coordinates_in: vector outside the span");
  RatMatrix x(k, vectors.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < vectors.cols(); ++j) x(i, j) = aug(i, k + j);
  return x;
}

IntMatrix integral_coordinates_in(const IntMatrix& basis, const IntMatrix& vectors) {
  return to_integer_matrix(coordinates_in(to_rational(basis), to_rational(vectors)),
                           "integral_coordinates_in");
}

std::vector<Rational> solve_unique(const RatMatrix& a, const std::vector<Rational>& b) {
  RatMatrix rhs(b.size(), 1, b);
  return coordinates_in(a, rhs).column(0);
}

std::string to_string(const IntPolynomial& p) { return poly_string(p); }
std::string to_string(const RatPolynomial& p) { return poly_string(p); }

RatPolynomial char_poly_rational(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    RatMatrix am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return {std::move(c)};
}

IntPolynomial char_poly(const RatMatrix& m) {
  RatPolynomial r = char_poly_rational(m);
  IntPolynomial p;
  for (const Rational& x : r.coefficients) p.coefficients.push_back(require_integer(x, "char_poly"));
  return p;
}

IntPolynomial char_poly(const IntMatrix& m) { return char_poly(to_rational(m)); }

namespace {

template <class M, class R, class Det>
R minor_sum(const M& m, std::size_t k, Det det) {
  if (!m.square()) throw std::invalid_argument("principal_minor_sum of a non-square matrix");
  const std::size_t n = m.rows();
  if (k > n) throw std::out_of_range("principal_minor_sum: k out of range");
  R total = 0;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    total += det(m.select(idx, idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

}  // namespace

Rational principal_minor_sum(const RatMatrix& m, std::size_t k) {
  return minor_sum<RatMatrix, Rational>(m, k, [](const RatMatrix& s) { return determinant(s); });
}

Integer principal_minor_sum(const IntMatrix& m, std::size_t k) {
  return minor_sum<IntMatrix, Integer>(m, k, [](const IntMatrix& s) { return determinant(s); });
}

}  // namespace cellforest
