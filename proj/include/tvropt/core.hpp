#ifndef TVROPT_CORE_HPP
#define TVROPT_CORE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace tvropt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Deterministic random stream. All randomness in the library flows through
/// this wrapper so that identical seeds reproduce identical runs end-to-end.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw on [0, 1).
  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via inverse-CDF of a single uniform draw; one engine
  /// advance per variate keeps streams easy to reason about.
  double normal();

  /// Integer in [0, n).
  std::int64_t uniform_int(std::int64_t n) {
    return std::uniform_int_distribution<std::int64_t>(0, n - 1)(engine_);
  }

  /// Gamma(shape, rate) draw.
  double gamma(double shape, double rate) {
    return std::gamma_distribution<double>(shape, 1.0 / rate)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Sub-seed for replication trial `trial` of a benchmark seeded with `seed`.
/// Fixed contract: seed * 10^6 + trial, so parallel trials never share a stream.
inline std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return seed * 1000000ULL + static_cast<std::uint64_t>(trial);
}

/// Internal stream derivation (splitmix64 of seed and a stream tag). Used to
/// give every iteration of a run its own reproducible stream, which is what
/// makes ask() side-effect free.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng seeded_rng(std::uint64_t seed) { return Rng(seed); }

/// Axis-aligned box bounds for a search space.
struct Bounds {
  Vector lo;
  Vector hi;

  Bounds() = default;
  Bounds(Vector lo_, Vector hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo.size() != hi.size()) throw std::invalid_argument("bounds: lo/hi size mismatch");
    for (int j = 0; j < lo.size(); ++j)
      if (!(lo[j] < hi[j])) throw std::invalid_argument("bounds: lo must be < hi");
  }

  static Bounds cube(int dim, double lo, double hi) {
    return Bounds(Vector::Constant(dim, lo), Vector::Constant(dim, hi));
  }
  static Bounds unit(int dim) { return cube(dim, 0.0, 1.0); }

  int dim() const { return static_cast<int>(lo.size()); }
  Vector width() const { return hi - lo; }

  Vector clamp(const Vector& v) const {
    if (v.size() != lo.size()) throw std::invalid_argument("clamp: dimension mismatch");
    return v.cwiseMax(lo).cwiseMin(hi);
  }

  bool contains(const Vector& v, double tol = 0.0) const {
    if (v.size() != lo.size()) return false;
    for (int j = 0; j < v.size(); ++j)
      if (v[j] < lo[j] - tol || v[j] > hi[j] + tol) return false;
    return true;
  }

  /// Concatenate two boxes (e.g. control box with a latent box).
  Bounds joined(const Bounds& other) const {
    Vector l(lo.size() + other.lo.size()), h(l.size());
    l << lo, other.lo;
    h << hi, other.hi;
    return Bounds(std::move(l), std::move(h));
  }

  /// k copies of this box stacked, for batch searches.
  Bounds tiled(int k) const {
    Vector l(k * lo.size()), h(l.size());
    for (int i = 0; i < k; ++i) {
      l.segment(i * lo.size(), lo.size()) = lo;
      h.segment(i * hi.size(), hi.size()) = hi;
    }
    return Bounds(std::move(l), std::move(h));
  }
};

/// Projection of an arbitrary vector onto box bounds.
inline Vector clamp_to_bounds(const Vector& v, const Bounds& bounds) {
  return bounds.clamp(v);
}

struct ControlPoint {
  Vector coords;
};

/// A noise-parameter value. For continuous specifications both the natural
/// coordinates theta and the latent standard-normal coordinates z are kept in
/// sync (theta = T(z)); for discrete specifications z is absent.
struct NoisePoint {
  Vector theta;
  Vector z;
  bool has_latent = false;

  static NoisePoint discrete(Vector theta_) {
    return NoisePoint{std::move(theta_), Vector(), false};
  }
  static NoisePoint continuous(Vector theta_, Vector z_) {
    return NoisePoint{std::move(theta_), std::move(z_), true};
  }
};

/// Evaluated design: rows of (x, theta[, z]) with simulator outputs f.
struct Dataset {
  Matrix X;      // n x d control inputs, natural units
  Matrix Theta;  // n x q noise inputs, natural units
  Matrix Z;      // n x q latent coordinates, or 0 x 0 for discrete noise
  Vector f;      // outputs, internal (maximize) sign

  int n() const { return static_cast<int>(X.rows()); }
  int d() const { return static_cast<int>(X.cols()); }
  int q() const { return static_cast<int>(Theta.cols()); }

  static Dataset empty(int d, int q, bool with_latent) {
    Dataset ds;
    ds.X = Matrix(0, d);
    ds.Theta = Matrix(0, q);
    ds.Z = with_latent ? Matrix(0, q) : Matrix(0, 0);
    ds.f = Vector(0);
    return ds;
  }

  void append(const Vector& x, const NoisePoint& np, double y) {
    if (x.size() != d() || np.theta.size() != q())
      throw std::invalid_argument("dataset: dimension mismatch on append");
    if (!std::isfinite(y)) throw std::invalid_argument("dataset: non-finite output");
    const int m = n();
    X.conservativeResize(m + 1, Eigen::NoChange);
    X.row(m) = x.transpose();
    Theta.conservativeResize(m + 1, Eigen::NoChange);
    Theta.row(m) = np.theta.transpose();
    if (Z.cols() > 0 || np.has_latent) {
      if (!np.has_latent || np.z.size() != Theta.cols())
        throw std::invalid_argument("dataset: latent coordinates required");
      Z.conservativeResize(m + 1, Theta.cols());
      Z.row(m) = np.z.transpose();
    }
    f.conservativeResize(m + 1);
    f[m] = y;
  }
};

}  // namespace tvropt

#endif  // TVROPT_CORE_HPP
