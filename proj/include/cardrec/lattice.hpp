#ifndef CARDREC_LATTICE_HPP
#define CARDREC_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace cardrec {

using Index = std::vector<int>;  // a point of Z^n

// All lattice summations in this project run in a mandated deterministic
// order: increasing ell-infinity shell, lexicographic inside each shell.
// Every parallel loop owns whole output elements and performs this serial
// order inside, so results are independent of thread count.

inline int linf(const Index& j) {
  int r = 0;
  for (int c : j) r = std::max(r, c < 0 ? -c : c);
  return r;
}

inline int l1(const Index& j) {
  int s = 0;
  for (int c : j) s += (c < 0 ? -c : c);
  return s;
}

inline long l2sq(const Index& j) {
  long s = 0;
  for (int c : j) s += static_cast<long>(c) * c;
  return s;
}

// Number of lattice points with ||j||_inf == r in n dimensions.
inline std::uint64_t shell_count(int dim, int r) {
  if (r == 0) return 1;
  auto cube = [dim](std::uint64_t w) {
    std::uint64_t p = 1;
    for (int i = 0; i < dim; ++i) p *= w;
    return p;
  };
  return cube(2ull * r + 1) - cube(2ull * r - 1);
}

namespace detail {

// Emits shell points in lexicographic order, spending O(1) per emitted point.
// `touched` records whether some already-fixed coordinate equals +-r.
template <typename F>
void shell_rec(Index& j, std::size_t pos, int r, bool touched, F& fn) {
  const int dim = static_cast<int>(j.size());
  if (pos + 1 == j.size()) {
    if (touched) {
      for (int v = -r; v <= r; ++v) {
        j[pos] = v;
        fn(static_cast<const Index&>(j));
      }
    } else {
      j[pos] = -r;
      fn(static_cast<const Index&>(j));
      j[pos] = r;
      fn(static_cast<const Index&>(j));
    }
    return;
  }
  (void)dim;
  for (int v = -r; v <= r; ++v) {
    j[pos] = v;
    shell_rec(j, pos + 1, r, touched || v == -r || v == r, fn);
  }
}

}  // namespace detail

// Visits every j with ||j||_inf == r in lexicographic order.
template <typename F>
void for_each_on_shell(int dim, int r, F&& fn) {
  Index j(dim, 0);
  if (r == 0) {
    fn(static_cast<const Index&>(j));
    return;
  }
  if (dim == 1) {
    j[0] = -r;
    fn(static_cast<const Index&>(j));
    j[0] = r;
    fn(static_cast<const Index&>(j));
    return;
  }
  detail::shell_rec(j, 0, r, false, fn);
}

// Visits every j with ||j||_inf <= R, shell by shell, lexicographic inside.
template <typename F>
void for_each_in_ball(int dim, int R, F&& fn) {
  for (int r = 0; r <= R; ++r) for_each_on_shell(dim, r, fn);
}

// Lexicographic enumeration of the full cube {-R..R}^n (SampleArray order).
template <typename F>
void for_each_in_cube(int dim, int R, F&& fn) {
  Index j(dim, -R);
  for (;;) {
    fn(static_cast<const Index&>(j));
    int axis = dim - 1;
    while (axis >= 0 && j[axis] == R) j[axis--] = -R;
    if (axis < 0) return;
    ++j[axis];
  }
}

// Shell-then-lexicographic list of all j with ||j||_inf <= R.
inline std::vector<Index> ball_indices(int dim, int R) {
  std::vector<Index> out;
  for_each_in_ball(dim, R, [&](const Index& j) { out.push_back(j); });
  return out;
}

inline std::size_t cube_flat_index(const Index& j, int R) {
  std::size_t flat = 0;
  const std::size_t width = 2 * static_cast<std::size_t>(R) + 1;
  for (int c : j) flat = flat * width + static_cast<std::size_t>(c + R);
  return flat;
}

}  // namespace cardrec

#endif
