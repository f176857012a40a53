#include "optstab/maximize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace optstab {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

double golden_max(const std::function<double(double)>& f, double a, double b) {
  const double stop = 1e-13 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  double best = std::max(f1, f2);
  for (int it = 0; it < 200 && (b - a) > stop; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
      best = std::max(best, f2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
      best = std::max(best, f1);
    }
  }
  return best;
}

}  // namespace

double maximize_on_interval(const std::function<double(double)>& f, double lo, double hi,
                            std::size_t samples) {
  samples = std::max<std::size_t>(samples, 3);
  const double step = (hi - lo) / static_cast<double>(samples - 1);
  auto at = [&](std::size_t i) { return i + 1 == samples ? hi : lo + step * static_cast<double>(i); };

  std::vector<double> values(samples);
  for (std::size_t i = 0; i < samples; ++i) values[i] = f(at(i));

  double best = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < samples; ++i) {
    const bool left_ok = i == 0 || values[i] >= values[i - 1];
    const bool right_ok = i + 1 == samples || values[i] >= values[i + 1];
    if (!left_ok || !right_ok) continue;
    const double a = at(i == 0 ? 0 : i - 1);
    const double b = at(i + 1 == samples ? i : i + 1);
    if (b > a) best = std::max(best, golden_max(f, a, b));
  }
  return best;
}

}  // namespace optstab
