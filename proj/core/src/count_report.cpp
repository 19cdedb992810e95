#include "ffhyper/count_report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace ffhyper {

CountReport CountReport::make(BigInt observed, Rational predicted, std::optional<double> envelope) {
  CountReport r;
  r.deviation = Rational(observed) - predicted;
  r.relative_deviation = predicted == 0 ? 0.0 : static_cast<double>(r.deviation / predicted);
  r.observed = std::move(observed);
  r.predicted_main = std::move(predicted);
  r.envelope = envelope;
  return r;
}

bool CountReport::within_envelope() const {
  if (!envelope) return true;
  return static_cast<double>(abs(deviation)) <= *envelope;
}

std::string to_decimal(const Rational& r, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << static_cast<double>(r);
  return os.str();
}

nlohmann::json rational_json(const Rational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

nlohmann::json CountReport::to_json() const {
  nlohmann::json j;
  j["observed"] = observed.str();
  j["predicted_main"] = rational_json(predicted_main);
  if (envelope) {
    std::ostringstream os;
    os << std::setprecision(17) << *envelope;
    j["envelope"] = os.str();
  }
  // Exact when integral, otherwise num/den.
  j["deviation"] = denominator(deviation) == 1 ? numerator(deviation).str()
                                               : numerator(deviation).str() + "/" + denominator(deviation).str();
  j["relative_deviation"] = relative_deviation;
  return j;
}

}  // namespace ffhyper
