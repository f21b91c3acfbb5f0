#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "mde/linalg.hpp"

namespace mde {

enum class DistributionFamily { Normal, Laplace, Logistic };

std::string_view to_string(DistributionFamily f);
DistributionFamily parse_family(std::string_view name);

struct ErrorDistribution {
  DistributionFamily family = DistributionFamily::Normal;
  double location = 0.0;
  double scale = 5.0;

  void validate() const;
  /// Theoretical variance: sigma^2, 2 sigma^2, sigma^2 pi^2 / 3.
  double variance() const;
};

/// Deterministic random stream. The engine is seeded from (seed, stream_id)
/// through std::seed_seq, so each replication of a campaign gets its own
/// stream independent of execution order.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform_open();
  double standard_normal();

 private:
  std::mt19937_64 engine_;
};

double laplace_quantile(double u, double location, double scale);
double logistic_quantile(double u, double location, double scale);

/// n i.i.d. draws. Laplace and logistic use their inverse CDFs on
/// uniform_open(); normal is location + scale * N(0, 1).
Vector sample_errors(const ErrorDistribution& d, Eigen::Index n, RandomStream& stream);

}  // namespace mde
