#ifndef ATWOOD_LINEAR_SMALL_HPP
#define ATWOOD_LINEAR_SMALL_HPP

#include <array>

#include "atwood/scalar_traits.hpp"

namespace atwood {

template <class T>
T zero_of() {
  return ScalarTraits<T>::from(GaussianRational());
}

template <class T>
T from_rational(const Rational& q) {
  return ScalarTraits<T>::from(GaussianRational(q));
}

// Accumulates sign * x * y, skipping structural zeros.
template <class T>
void add_product(T& acc, const T& x, const T& y, bool negate = false) {
  using Tr = ScalarTraits<T>;
  if (Tr::is_zero(x) || Tr::is_zero(y)) return;
  Tr::fma(acc, x, y, negate);
}

// Determinant of the 3x3 matrix picked from `m` by rows[] and cols[].
template <class T, std::size_t N>
T minor3(const std::array<std::array<T, N>, N>& m, const std::array<int, 3>& rows, const std::array<int, 3>& cols) {
  using Tr = ScalarTraits<T>;
  T det = zero_of<T>();
  static constexpr int kPerm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  for (int p = 0; p < 6; ++p) {
    const T& e0 = m[rows[0]][cols[kPerm[p][0]]];
    const T& e1 = m[rows[1]][cols[kPerm[p][1]]];
    const T& e2 = m[rows[2]][cols[kPerm[p][2]]];
    if (Tr::is_zero(e0) || Tr::is_zero(e1) || Tr::is_zero(e2)) continue;
    T prod = e0 * e1;
    prod = prod * e2;
    if (p < 3) {
      det += prod;
    } else {
      det -= prod;
    }
  }
  return det;
}

inline std::array<int, 3> complement3(int skip) {
  std::array<int, 3> out{};
  int n = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != skip) out[n++] = i;
  }
  return out;
}

// adj(m)[i][j] = (-1)^(i+j) * minor(m without row j, column i).
template <class T>
std::array<std::array<T, 4>, 4> adjugate4(const std::array<std::array<T, 4>, 4>& m) {
  std::array<std::array<T, 4>, 4> adj;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      T c = minor3(m, complement3(j), complement3(i));
      adj[i][j] = ((i + j) % 2 == 0) ? c : T(-c);
    }
  }
  return adj;
}

// Cofactor expansion along the first row.
template <class T>
T determinant4(const std::array<std::array<T, 4>, 4>& m) {
  T det = zero_of<T>();
  for (int j = 0; j < 4; ++j) {
    if (ScalarTraits<T>::is_zero(m[0][j])) continue;
    T c = minor3(m, complement3(0), complement3(j));
    add_product(det, m[0][j], c, j % 2 == 1);
  }
  return det;
}

}  // namespace atwood

#endif  // ATWOOD_LINEAR_SMALL_HPP
