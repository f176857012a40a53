#pragma once

#include <cstddef>
#include <functional>

namespace optstab {

/// Maximum of f on [lo, hi]: f is sampled at `samples` equispaced points
/// (endpoints included), then every sampled local maximum is refined by
/// golden-section search over its two neighbouring cells. The result is never
/// below the best sample.
double maximize_on_interval(const std::function<double(double)>& f, double lo, double hi,
                            std::size_t samples);

}  // namespace optstab
