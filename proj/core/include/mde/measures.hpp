#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mde {

/// Symmetric sigma-finite integrating measure selecting the distance variant.
///
/// Continuous measures are given through their primitive H (so Lebesgue is
/// H(x) = x). The point mass at zero is a tag: its distance has a separate
/// closed form and is never integrated numerically.
class IntegratingMeasure {
 public:
  struct Lebesgue {};
  struct DegenerateAtZero {};
  struct CustomContinuous {
    std::function<double(double)> h;
    std::string label;
  };

  static IntegratingMeasure lebesgue();
  static IntegratingMeasure degenerate();
  static IntegratingMeasure custom(std::function<double(double)> h,
                                   std::string label = "custom");

  bool is_continuous() const noexcept;
  bool is_degenerate() const noexcept;
  bool is_lebesgue() const noexcept;

  /// H(x). Throws Error(InvalidVariant) for the degenerate measure.
  double eval(double x) const;

  /// "lebesgue", "degenerate" or the custom label.
  std::string name() const;

  const std::variant<Lebesgue, DegenerateAtZero, CustomContinuous>& variant() const noexcept {
    return variant_;
  }

 private:
  explicit IntegratingMeasure(std::variant<Lebesgue, DegenerateAtZero, CustomContinuous> v);

  std::variant<Lebesgue, DegenerateAtZero, CustomContinuous> variant_;
};

double eval_h(const IntegratingMeasure& m, double x);

enum class MeasureViolation { NotOddSymmetric, NotMonotone };

std::string_view to_string(MeasureViolation v);

/// Probe points used by validate_measure: {±0.1, ±0.5, ±1, ±2, ±5, ±10}.
const std::vector<double>& measure_probe_grid();

/// Checks odd symmetry (within 1e-10, relative to |H(x)| when above 1) and
/// monotonicity of H on the probe grid. An empty result means valid.
/// Lebesgue and the degenerate measure always pass.
std::vector<MeasureViolation> validate_measure(const IntegratingMeasure& m);

/// Parses the CLI names "lebesgue" and "degenerate".
IntegratingMeasure parse_measure(std::string_view name);

}  // namespace mde
