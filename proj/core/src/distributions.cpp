#include "mde/distributions.hpp"

#include <cmath>
#include <numbers>

#include "mde/error.hpp"

namespace mde {

std::string_view to_string(DistributionFamily f) {
  switch (f) {
    case DistributionFamily::Normal:
      return "normal";
    case DistributionFamily::Laplace:
      return "laplace";
    case DistributionFamily::Logistic:
      return "logistic";
  }
  return "unknown";
}

DistributionFamily parse_family(std::string_view name) {
  if (name == "normal") return DistributionFamily::Normal;
  if (name == "laplace") return DistributionFamily::Laplace;
  if (name == "logistic") return DistributionFamily::Logistic;
  throw Error(ErrorKind::InvalidArgument,
              "unknown distribution '" + std::string(name) +
                  "' (expected normal, laplace or logistic)");
}

void ErrorDistribution::validate() const {
  if (!(scale > 0.0) || !std::isfinite(scale) || !std::isfinite(location)) {
    throw Error(ErrorKind::InvalidArgument, "distribution needs a finite location and scale > 0");
  }
}

double ErrorDistribution::variance() const {
  switch (family) {
    case DistributionFamily::Normal:
      return scale * scale;
    case DistributionFamily::Laplace:
      return 2.0 * scale * scale;
    case DistributionFamily::Logistic:
      return scale * scale * std::numbers::pi * std::numbers::pi / 3.0;
  }
  return 0.0;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  engine_.seed(seq);
}

double RandomStream::uniform_open() {
  const std::uint64_t bits = engine_() >> 11;  // 53 bits
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double RandomStream::standard_normal() {
  std::normal_distribution<double> normal(0.0, 1.0);
  return normal(engine_);
}

double laplace_quantile(double u, double location, double scale) {
  const double c = u - 0.5;
  const double s = (c > 0.0) - (c < 0.0);
  return location - scale * s * std::log1p(-2.0 * std::abs(c));
}

double logistic_quantile(double u, double location, double scale) {
  return location + scale * std::log(u / (1.0 - u));
}

Vector sample_errors(const ErrorDistribution& d, Eigen::Index n, RandomStream& stream) {
  d.validate();
  Vector out(n);
  switch (d.family) {
    case DistributionFamily::Normal:
      for (Eigen::Index i = 0; i < n; ++i) out(i) = d.location + d.scale * stream.standard_normal();
      break;
    case DistributionFamily::Laplace:
      for (Eigen::Index i = 0; i < n; ++i)
        out(i) = laplace_quantile(stream.uniform_open(), d.location, d.scale);
      break;
    case DistributionFamily::Logistic:
      for (Eigen::Index i = 0; i < n; ++i)
        out(i) = logistic_quantile(stream.uniform_open(), d.location, d.scale);
      break;
  }
  return out;
}

}  // namespace mde
