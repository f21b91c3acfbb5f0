#include "mde/measures.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mde/error.hpp"

namespace mde {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kSymmetryTol = 1e-10;
}  // namespace

IntegratingMeasure::IntegratingMeasure(
    std::variant<Lebesgue, DegenerateAtZero, CustomContinuous> v)
    : variant_(std::move(v)) {}

IntegratingMeasure IntegratingMeasure::lebesgue() { return IntegratingMeasure(Lebesgue{}); }

IntegratingMeasure IntegratingMeasure::degenerate() {
  return IntegratingMeasure(DegenerateAtZero{});
}

IntegratingMeasure IntegratingMeasure::custom(std::function<double(double)> h,
                                              std::string label) {
  if (!h) throw Error(ErrorKind::InvalidArgument, "custom measure requires a function");
  return IntegratingMeasure(CustomContinuous{std::move(h), std::move(label)});
}

bool IntegratingMeasure::is_continuous() const noexcept {
  return !std::holds_alternative<DegenerateAtZero>(variant_);
}

bool IntegratingMeasure::is_degenerate() const noexcept {
  return std::holds_alternative<DegenerateAtZero>(variant_);
}

bool IntegratingMeasure::is_lebesgue() const noexcept {
  return std::holds_alternative<Lebesgue>(variant_);
}

double IntegratingMeasure::eval(double x) const {
  return std::visit(
      overloaded{
          [x](const Lebesgue&) { return x; },
          [](const DegenerateAtZero&) -> double {
            throw Error(ErrorKind::InvalidVariant,
                        "H(x) is undefined for the degenerate measure at 0");
          },
          [x](const CustomContinuous& c) { return c.h(x); },
      },
      variant_);
}

std::string IntegratingMeasure::name() const {
  return std::visit(overloaded{
                        [](const Lebesgue&) { return std::string("lebesgue"); },
                        [](const DegenerateAtZero&) { return std::string("degenerate"); },
                        [](const CustomContinuous& c) { return c.label; },
                    },
                    variant_);
}

double eval_h(const IntegratingMeasure& m, double x) { return m.eval(x); }

std::string_view to_string(MeasureViolation v) {
  switch (v) {
    case MeasureViolation::NotOddSymmetric:
      return "h(-x) != -h(x)";
    case MeasureViolation::NotMonotone:
      return "h is not nondecreasing";
  }
  return "unknown violation";
}

const std::vector<double>& measure_probe_grid() {
  static const std::vector<double> grid = {-10, -5, -2, -1, -0.5, -0.1,
                                           0.1, 0.5, 1,  2,  5,    10};
  return grid;
}

std::vector<MeasureViolation> validate_measure(const IntegratingMeasure& m) {
  std::vector<MeasureViolation> out;
  if (!m.is_continuous()) return out;

  const auto& grid = measure_probe_grid();
  std::vector<double> values;
  values.reserve(grid.size());
  for (double x : grid) values.push_back(m.eval(x));

  bool odd = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double hx = values[i];
    const double hmx = values[grid.size() - 1 - i];  // grid is symmetric
    const double scale = std::max(1.0, std::abs(hx));
    if (!(std::abs(hx + hmx) <= kSymmetryTol * scale)) odd = false;
  }
  if (!odd) out.push_back(MeasureViolation::NotOddSymmetric);

  // the grid is sorted ascending
  if (!std::is_sorted(values.begin(), values.end()) ||
      std::any_of(values.begin(), values.end(), [](double v) { return std::isnan(v); })) {
    out.push_back(MeasureViolation::NotMonotone);
  }
  return out;
}

IntegratingMeasure parse_measure(std::string_view name) {
  if (name == "lebesgue") return IntegratingMeasure::lebesgue();
  if (name == "degenerate") return IntegratingMeasure::degenerate();
  throw Error(ErrorKind::InvalidArgument,
              "unknown measure '" + std::string(name) + "' (expected lebesgue or degenerate)");
}

}  // namespace mde
