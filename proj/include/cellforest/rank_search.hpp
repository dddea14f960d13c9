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

// Lexicographic enumeration of subsets of a vector configuration with a
// prescribed size and rank, using a fraction-free (Bareiss) echelon that
// supports push and pop of one vector at a time.

#ifndef CELLFOREST_RANK_SEARCH_HPP_
#define CELLFOREST_RANK_SEARCH_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "cellforest/exact_linalg.hpp"
#include "cellforest/matrix.hpp"
#include "cellforest/number.hpp"

namespace cellforest {

namespace detail {

// Exact division by a fixed nonzero int64: strip the power of two, then
// multiply by the inverse of the odd part modulo 2^64. Valid whenever the
// quotient is known to fit in an int64.
struct ExactDivisor {
  unsigned shift = 0;
  std::uint64_t inverse = 1;

  ExactDivisor() = default;
  explicit ExactDivisor(std::int64_t d) {
    shift = static_cast<unsigned>(__builtin_ctzll(static_cast<std::uint64_t>(d)));
    const auto odd = static_cast<std::uint64_t>(d >> shift);
    std::uint64_t x = odd;  // correct to 3 bits
    for (int i = 0; i < 5; ++i) x *= 2 - odd * x;
    inverse = x;
  }
};

// (p * x - c * y) / q, exact by Sylvester's identity.
inline std::int64_t bareiss_step(std::int64_t p, std::int64_t x, std::int64_t c, std::int64_t y,
                                 const ExactDivisor& q) {
  const __int128 t = static_cast<__int128>(p) * x - static_cast<__int128>(c) * y;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(t >> q.shift) * q.inverse);
}
inline Integer bareiss_step(const Integer& p, const Integer& x, const Integer& c, const Integer& y,
                            const Integer& q) {
  if (c == 0) {
    if (x == 0) return x;
    Integer t = p * x;
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
    return t;
  }
  Integer t = p * x - c * y;
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
  return t;
}
inline Integer widen(std::int64_t x) { return Integer(static_cast<long>(x)); }
inline Integer widen(const Integer& x) { return x; }

}  // namespace detail

// Row-wise Bareiss echelon over a fixed set of vectors. After pushing an
// independent family v_1..v_r, top_pivot() is an r x r minor of that family;
// when r equals the ambient dimension it is +-det.
template <class T>
class BareissTracker {
 public:
  BareissTracker(const std::vector<std::vector<T>>& vectors, std::size_t dim)
      : vectors_(vectors), dim_(dim), rows_(dim * (dim + 1)), active_(dim + 1) {
    pivots_.push_back(T(1));
    divisors_.emplace_back(T(1));
    for (std::size_t j = 0; j < dim; ++j) active_[0].push_back(j);
  }

  // Returns true when the vector raised the rank.
  bool push(std::size_t index) {
    const std::size_t r = rank();
    T* v = rows_.data() + r * dim_;
    const std::vector<T>& src = vectors_[index];
    for (std::size_t j = 0; j < dim_; ++j) v[j] = src[j];
    for (std::size_t i = 0; i < r; ++i) {
      // Earlier pivot columns are already zero in v and in row i.
      const T* ri = rows_.data() + i * dim_;
      const T c = v[cols_[i]];
      for (std::size_t j : active_[i]) {
        v[j] = detail::bareiss_step(pivots_[i + 1], v[j], c, ri[j], divisors_[i]);
      }
    }
    std::size_t col = dim_;
    for (std::size_t j : active_[r])
      if (v[j] != 0) {
        col = j;
        break;
      }
    const bool independent = col < dim_;
    if (independent) {
      cols_.push_back(col);
      pivots_.push_back(v[col]);
      divisors_.emplace_back(v[col]);
      active_[r + 1].clear();
      for (std::size_t j : active_[r])
        if (j != col) active_[r + 1].push_back(j);
    }
    frames_.push_back(independent);
    return independent;
  }

  void pop() {
    if (frames_.back()) {
      cols_.pop_back();
      pivots_.pop_back();
      divisors_.pop_back();
    }
    frames_.pop_back();
  }

  std::size_t rank() const { return cols_.size(); }
  std::size_t size() const { return frames_.size(); }
  const T& top_pivot() const { return pivots_.back(); }
  Integer abs_top_pivot() const {
    Integer p = detail::widen(pivots_.back());
    return p < 0 ? Integer(-p) : p;
  }

 private:
  const std::vector<std::vector<T>>& vectors_;
  std::size_t dim_;
  std::vector<T> rows_;
  std::vector<std::size_t> cols_;
  std::vector<T> pivots_;
  // Word-sized pivots divide by multiplication; big ones divide directly.
  using Divisor = std::conditional_t<std::is_same_v<T, std::int64_t>, detail::ExactDivisor, T>;
  std::vector<Divisor> divisors_;
  std::vector<bool> frames_;
  std::vector<std::vector<std::size_t>> active_;  // columns not yet used as pivots, per rank
};

// True when every minor of the configuration (rows of `vectors`) is below
// 2^62 in absolute value, so int64 storage with 128-bit products is exact.
inline bool fits_word_tracking(const IntMatrix& vectors) {
  std::vector<double> logs;
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    double norm2 = 0;
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
      if (!fits_small(vectors(i, j))) return false;
      const double x = vectors(i, j).get_d();
      norm2 += x * x;
    }
    logs.push_back(norm2 > 0 ? 0.5 * std::log2(norm2) : 0.0);
  }
  std::sort(logs.rbegin(), logs.rend());
  double bound = 0;
  for (std::size_t i = 0; i < logs.size() && i < vectors.cols(); ++i) bound += logs[i];
  return bound < 62.0;
}

namespace detail {

template <class T, class Visitor>
class RankSubsetSearch {
 public:
  RankSubsetSearch(const std::vector<std::vector<T>>& vectors, std::size_t dim, std::size_t size,
                   std::size_t target_rank, const std::vector<std::size_t>& suffix_rank,
                   Visitor& visit)
      : tracker_(vectors, dim),
        n_(vectors.size()),
        size_(size),
        target_(target_rank),
        suffix_rank_(suffix_rank),
        visit_(visit) {
    chosen_.reserve(size);
  }

  void run() { recurse(0); }

 private:
  void recurse(std::size_t start) {
    const std::size_t depth = chosen_.size();
    if (depth == size_) {
      if (tracker_.rank() == target_) visit_(std::span<const std::size_t>(chosen_), tracker_);
      return;
    }
    const std::size_t slots_after = size_ - depth - 1;
    for (std::size_t j = start; j + slots_after < n_; ++j) {
      tracker_.push(j);
      chosen_.push_back(j);
      const std::size_t r = tracker_.rank();
      const std::size_t dependent = depth + 1 - r;
      const std::size_t reachable = r + std::min(slots_after, suffix_rank_[j + 1]);
      if (dependent <= size_ - target_ && r <= target_ && reachable >= target_) recurse(j + 1);
      chosen_.pop_back();
      tracker_.pop();
    }
  }

  BareissTracker<T> tracker_;
  std::size_t n_, size_, target_;
  const std::vector<std::size_t>& suffix_rank_;
  Visitor& visit_;
  std::vector<std::size_t> chosen_;
};

// Pivot handed to visitors of the independent-subset search; mirrors the
// tracker accessors.
template <class T>
struct LeafPivot {
  T value;
  std::size_t rank_value;
  const T& top_pivot() const { return value; }
  Integer abs_top_pivot() const {
    Integer p = widen(value);
    return p < 0 ? Integer(-p) : p;
  }
  std::size_t rank() const { return rank_value; }
};

// Special case size == target: every chosen vector must be independent of
// the earlier ones. Each depth keeps the later candidates already reduced
// against the chosen prefix, so a choice costs one elimination step per
// candidate, candidates reduced to zero leave the whole subtree, and a leaf's
// pivot is read off directly.
template <class T, class Visitor>
class IndependentSubsetSearch {
 public:
  using Divisor = std::conditional_t<std::is_same_v<T, std::int64_t>, ExactDivisor, T>;

  IndependentSubsetSearch(const std::vector<std::vector<T>>& vectors, std::size_t dim,
                          std::size_t size, Visitor& visit)
      : dim_(dim), size_(size), levels_(size + 1), visit_(visit) {
    for (auto& level : levels_) level.data.resize(vectors.size() * dim);
    Level& first = levels_[0];
    for (std::size_t j = 0; j < dim; ++j) first.active.push_back(j);
    first.pivot = T(1);
    first.divisor = Divisor(T(1));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      bool zero = true;
      for (std::size_t j = 0; j < dim; ++j) {
        first.data[first.index.size() * dim + j] = vectors[i][j];
        zero = zero && vectors[i][j] == 0;
      }
      if (!zero) first.index.push_back(i);
    }
    chosen_.reserve(size);
  }

  void run() {
    if (size_ == 0) {
      visit_(std::span<const std::size_t>(chosen_), LeafPivot<T>{T(1), 0});
      return;
    }
    recurse(0);
  }

 private:
  struct Level {
    std::vector<std::size_t> index;  // candidate vector ids, increasing
    std::vector<T> data;             // reduced candidates, dim entries each
    std::vector<std::size_t> active;  // columns not yet used as pivots
    T pivot;                         // last pivot of the prefix
    Divisor divisor;
  };

  void recurse(std::size_t depth) {
    Level& here = levels_[depth];
    const std::size_t count = here.index.size();
    const std::size_t need = size_ - depth;
    for (std::size_t a = 0; a + need <= count; ++a) {
      const T* row = here.data.data() + a * dim_;
      std::size_t col = dim_;
      for (std::size_t j : here.active)
        if (row[j] != 0) {
          col = j;
          break;
        }
      const T p = row[col];
      chosen_.push_back(here.index[a]);
      if (need == 1) {
        visit_(std::span<const std::size_t>(chosen_), LeafPivot<T>{p, size_});
      } else {
        Level& next = levels_[depth + 1];
        next.index.clear();
        next.active.clear();
        for (std::size_t j : here.active)
          if (j != col) next.active.push_back(j);
        for (std::size_t b = a + 1; b < count; ++b) {
          const T* v = here.data.data() + b * dim_;
          T* out = next.data.data() + next.index.size() * dim_;
          const T c = v[col];
          bool zero = true;
          for (std::size_t j : next.active) {
            out[j] = bareiss_step(p, v[j], c, row[j], here.divisor);
            zero = zero && out[j] == 0;
          }
          if (!zero) next.index.push_back(here.index[b]);
        }
        if (next.index.size() + 1 >= need) {
          next.pivot = p;
          next.divisor = Divisor(p);
          recurse(depth + 1);
        }
      }
      chosen_.pop_back();
    }
  }

  std::size_t dim_, size_;
  std::vector<Level> levels_;
  Visitor& visit_;
  std::vector<std::size_t> chosen_;
};

}  // namespace detail

// Calls visit(indices, tracker) for every subset of the rows of `vectors`
// with `size` members and rank `target_rank`, in lexicographic order of row
// indices. The second argument exposes top_pivot(), abs_top_pivot() and
// rank(); its type depends on the entry size and on whether size equals
// target_rank, so `visit` should be generic. For an independent family the
// top pivot is a maximal minor, +-det when the family is square.
template <class Visitor>
void for_each_rank_subset(const IntMatrix& vectors, std::size_t size, std::size_t target_rank,
                          Visitor&& visit) {
  const std::size_t n = vectors.rows(), dim = vectors.cols();
  if (target_rank > size || size > n) return;
  auto run = [&](auto tag) {
    using T = decltype(tag);
    std::vector<std::vector<T>> rows(n, std::vector<T>(dim));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          rows[i][j] = vectors(i, j).get_si();
        } else {
          rows[i][j] = vectors(i, j);
        }
      }
    if (size == target_rank) {
      detail::IndependentSubsetSearch<T, std::remove_reference_t<Visitor>> search(rows, dim, size,
                                                                                  visit);
      search.run();
      return;
    }
    // suffix[j] = rank of rows j..n-1.
    std::vector<std::size_t> suffix(n + 1, 0);
    {
      BareissTracker<T> tail(rows, dim);
      for (std::size_t j = n; j-- > 0;) {
        tail.push(j);
        suffix[j] = tail.rank();
      }
    }
    detail::RankSubsetSearch<T, std::remove_reference_t<Visitor>> search(rows, dim, size,
                                                                         target_rank, suffix, visit);
    search.run();
  };
  if (fits_word_tracking(vectors)) {
    run(std::int64_t{});
  } else {
    run(Integer{});
  }
}

}  // namespace cellforest

#endif  // CELLFOREST_RANK_SEARCH_HPP_
