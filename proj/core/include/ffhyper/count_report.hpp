#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

namespace ffhyper {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An exact count next to its predicted main term.
struct CountReport {
  BigInt observed;
  Rational predicted_main;
  std::optional<double> envelope;
  Rational deviation;         // observed - predicted_main
  double relative_deviation;  // deviation / predicted_main, 0 when the prediction is 0

  static CountReport make(BigInt observed, Rational predicted, std::optional<double> envelope = std::nullopt);

  /// |deviation| <= envelope; true when there is no envelope.
  bool within_envelope() const;

  /// {observed, predicted_main: {num, den}, envelope?, deviation, relative_deviation}
  /// with big integers as decimal strings.
  nlohmann::json to_json() const;
};

std::string to_decimal(const Rational& r, int digits = 6);
nlohmann::json rational_json(const Rational& r);

}  // namespace ffhyper
