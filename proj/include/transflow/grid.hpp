#ifndef TRANSFLOW_GRID_HPP
#define TRANSFLOW_GRID_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace transflow {

// Periodic transverse chart: a uniform grid on a flat m-torus, m in {2,3}.
// Nodes are ordered row-major over the used axes; index arithmetic wraps.
class ChartGrid {
 public:
  ChartGrid() = default;

  ChartGrid(int m, std::array<int, 3> dims, std::array<double, 3> periods)
      : m_(m), dims_(dims), periods_(periods) {
    if (m != 2 && m != 3) throw std::invalid_argument("ChartGrid: m must be 2 or 3");
    for (int a = m; a < 3; ++a) {
      dims_[a] = 1;
      periods_[a] = 1.0;
    }
    nodes_ = 1;
    for (int a = 0; a < m_; ++a) {
      if (dims_[a] < 8) throw std::invalid_argument("ChartGrid: dims must be >= 8");
      if (!(periods_[a] > 0.0)) throw std::invalid_argument("ChartGrid: periods must be > 0");
      spacing_[a] = periods_[a] / dims_[a];
      nodes_ *= static_cast<std::size_t>(dims_[a]);
    }
    for (int a = m_; a < 3; ++a) spacing_[a] = 1.0;
    stride_[m_ - 1] = 1;
    for (int a = m_ - 2; a >= 0; --a)
      stride_[a] = stride_[a + 1] * static_cast<std::size_t>(dims_[a + 1]);
    for (int a = m_; a < 3; ++a) stride_[a] = 0;
    cell_volume_ = 1.0;
    for (int a = 0; a < m_; ++a) cell_volume_ *= spacing_[a];
  }

  static ChartGrid square(int m, int n, double period = 1.0) {
    return ChartGrid(m, {n, n, n}, {period, period, period});
  }

  int m() const { return m_; }
  int dim(int a) const { return dims_[a]; }
  const std::array<int, 3>& dims() const { return dims_; }
  double period(int a) const { return periods_[a]; }
  const std::array<double, 3>& periods() const { return periods_; }
  double spacing(int a) const { return spacing_[a]; }
  std::size_t nodes() const { return nodes_; }
  std::size_t stride(int a) const { return stride_[a]; }
  double cell_volume() const { return cell_volume_; }

  std::size_t index(int i0, int i1, int i2 = 0) const {
    return static_cast<std::size_t>(i0) * stride_[0] +
           static_cast<std::size_t>(i1) * stride_[1] +
           (m_ == 3 ? static_cast<std::size_t>(i2) * stride_[2] : 0);
  }

  void coords(std::size_t idx, int c[3]) const {
    if (m_ == 2) {
      c[0] = static_cast<int>(idx / stride_[0]);
      c[1] = static_cast<int>(idx % stride_[0]);
      c[2] = 0;
    } else {
      c[0] = static_cast<int>(idx / stride_[0]);
      std::size_t r = idx % stride_[0];
      c[1] = static_cast<int>(r / stride_[1]);
      c[2] = static_cast<int>(r % stride_[1]);
    }
  }

  // Coordinate of node i along axis a.
  double coord(int i, int a) const { return i * spacing_[a]; }

  int wrap(int i, int a) const {
    int n = dims_[a];
    i %= n;
    return i < 0 ? i + n : i;
  }

  bool same_as(const ChartGrid& o) const {
    if (m_ != o.m_) return false;
    for (int a = 0; a < m_; ++a)
      if (dims_[a] != o.dims_[a] || periods_[a] != o.periods_[a]) return false;
    return true;
  }

 private:
  int m_ = 2;
  std::array<int, 3> dims_{8, 8, 1};
  std::array<double, 3> periods_{1.0, 1.0, 1.0};
  std::array<double, 3> spacing_{};
  std::array<std::size_t, 3> stride_{};
  std::size_t nodes_ = 0;
  double cell_volume_ = 1.0;
};

// Thread cap from TRANSFLOW_THREADS (default 1: fully sequential).
inline int max_threads() {
  static const int cap = [] {
    const char* env = std::getenv("TRANSFLOW_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) return 1;
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw > 0 && v > hw ? hw : v;
  }();
  return cap;
}

// Data-parallel map over [0, n): each worker writes disjoint output slots,
// so results do not depend on the thread count. Reductions stay sequential.
template <class Fn>
inline void parallel_for(std::size_t n, Fn&& fn) {
  int nt = max_threads();
  if (nt <= 1 || n < 4096) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::size_t chunk = (n + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    std::size_t lo = t * chunk, hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace transflow

#endif
