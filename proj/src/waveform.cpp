#include "rydsim/waveform.hpp"

#include <algorithm>
#include <stdexcept>

namespace rydsim {

Waveform Waveform::constant(double value) {
  Waveform w;
  w.value_ = value;
  return w;
}

Waveform Waveform::analytic(std::function<double(double)> f) {
  Waveform w;
  w.f_ = std::move(f);
  return w;
}

Waveform Waveform::sampled(std::vector<double> times,
                           std::vector<double> values) {
  if (times.size() != values.size() || times.empty()) {
    throw std::invalid_argument("Waveform::sampled: size mismatch or empty");
  }
  if (!std::is_sorted(times.begin(), times.end())) {
    throw std::invalid_argument("Waveform::sampled: times must be sorted");
  }
  Waveform w;
  w.times_ = std::move(times);
  w.values_ = std::move(values);
  return w;
}

double Waveform::operator()(double t) const {
  if (f_) return f_(t);
  if (times_.empty()) return value_;
  if (t <= times_.front()) return values_.front();
  if (t >= times_.back()) return values_.back();
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - times_.begin());
  const std::size_t lo = hi - 1;
  const double span = times_[hi] - times_[lo];
  if (span <= 0.0) return values_[hi];
  const double w = (t - times_[lo]) / span;
  return (1.0 - w) * values_[lo] + w * values_[hi];
}

std::vector<std::pair<double, double>> Waveform::table(double t0, double t1,
                                                       int samples) const {
  std::vector<std::pair<double, double>> out;
  if (samples < 2) samples = 2;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t1 - t0) * i / (samples - 1);
    out.emplace_back(t, (*this)(t));
  }
  return out;
}

}  // namespace rydsim
