#ifndef RYDSIM_WAVEFORM_HPP
#define RYDSIM_WAVEFORM_HPP

#include <functional>
#include <utility>
#include <vector>

namespace rydsim {

// Time-dependent scalar control. Backed either by an analytic callable or by
// a sampled table with linear interpolation (clamped outside the table).
class Waveform {
 public:
  Waveform() = default;  // identically zero

  static Waveform constant(double value);
  static Waveform analytic(std::function<double(double)> f);
  static Waveform sampled(std::vector<double> times, std::vector<double> values);

  double operator()(double t) const;

  bool is_zero() const { return !f_ && times_.empty() && value_ == 0.0; }
  bool is_constant() const { return !f_ && times_.empty(); }

  // Tabulates the waveform on a uniform grid (for CSV export and validation).
  std::vector<std::pair<double, double>> table(double t0, double t1,
                                               int samples) const;

 private:
  std::function<double(double)> f_;   // analytic form, if any
  std::vector<double> times_;         // sampled form, if any
  std::vector<double> values_;
  double value_ = 0.0;                // constant form
};

}  // namespace rydsim

#endif  // RYDSIM_WAVEFORM_HPP
