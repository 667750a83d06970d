#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "checkers/amplitude.hpp"
#include "checkers/engine.hpp"

namespace checkers {

/// One amplitude/probability row. The exact fields (g, k, prob) round-trip
/// losslessly through both text formats; the float fields are advisory.
struct AmplitudeRecord {
  int x = 0;
  int t = 0;
  std::optional<int> line;  // absent = free walk
  bool exact = true;        // float-mode records leave g/k/prob empty
  GaussianInt g;
  long long k = 0;
  double re_float = 0.0;
  double im_float = 0.0;
  DyadicRational prob;

  friend bool operator==(const AmplitudeRecord&, const AmplitudeRecord&) = default;
};

AmplitudeRecord make_amplitude_record(int x, int t, const std::optional<int>& line,
                                      const HalfPowerAmplitude& amp);

/// One series checkpoint row.
struct SeriesRow {
  int line = 0;
  long long index = 0;  // k for closed-form sums, t for engine sums
  double term = 0.0;
  double partial_sum = 0.0;
  std::optional<double> target;
  std::optional<double> tail_bound;
};

// CSV: fixed header, comma separator, LF line ends, floats with 17
// significant digits, exact integers in decimal.
std::string amplitude_csv_header();
std::string to_csv(const AmplitudeRecord& record);
AmplitudeRecord amplitude_from_csv(const std::string& row);

std::string series_csv_header();
std::string to_csv(const SeriesRow& row);

// JSON: one object per record, array wrapper handled by the caller.
nlohmann::json to_json(const AmplitudeRecord& record);
AmplitudeRecord amplitude_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SeriesRow& row);

/// 17-significant-digit shortest-faithful float formatting.
std::string format_double(double value);

/// Minimal SVG 1.1 bar chart: one labelled bar per (x, value).
std::string svg_bar_chart(const std::vector<std::pair<int, double>>& bars,
                          const std::string& title);

}  // namespace checkers
