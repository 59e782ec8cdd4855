#ifndef SVAR_RNG_HPP
#define SVAR_RNG_HPP

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace svar {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// RNG stream keyed by (seed, stream id). A stream is independent of how many
// other streams exist, so draw i is identical under any parallel schedule.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(splitmix64(splitmix64(seed) ^ splitmix64(~stream))) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  double gamma(double shape, double scale) {
    std::gamma_distribution<double> g(shape, scale);
    return g(engine_);
  }
  double chi_squared(double dof) { return 2.0 * gamma(0.5 * dof, 1.0); }

  Eigen::VectorXd normal_vector(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = normal();
    return v;
  }

  Eigen::MatrixXd normal_matrix(Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal();
    return m;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Derives per-draw streams from a master seed; domain separates independent
// uses (posterior draws, rotations, narrative simulation, ...).
class RngFactory {
 public:
  explicit RngFactory(std::uint64_t master_seed) : master_(master_seed) {}

  Rng stream(std::uint64_t domain, std::uint64_t index) const {
    return Rng(splitmix64(master_ ^ splitmix64(domain)), index);
  }

  std::uint64_t master() const { return master_; }

 private:
  std::uint64_t master_;
};

}  // namespace svar

#endif
