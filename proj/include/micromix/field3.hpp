#pragma once

#include <cstddef>
#include <vector>

namespace micromix {

// Dense 3-D array with x fastest, then y, then z. Value semantics.
template <typename T>
struct Field3 {
  int nx = 0, ny = 0, nz = 0;
  std::vector<T> data;

  Field3() = default;
  Field3(int nx_, int ny_, int nz_, T fill_value = T{})
      : nx(nx_),
        ny(ny_),
        nz(nz_),
        data(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_) *
                 static_cast<std::size_t>(nz_),
             fill_value) {}

  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * ny + j) * nx + i;
  }

  T& operator()(int i, int j, int k) { return data[index(i, j, k)]; }
  const T& operator()(int i, int j, int k) const { return data[index(i, j, k)]; }

  std::size_t size() const { return data.size(); }
  void fill(T v) { data.assign(data.size(), v); }

  bool same_shape(const Field3& other) const {
    return nx == other.nx && ny == other.ny && nz == other.nz;
  }
};

}  // namespace micromix
