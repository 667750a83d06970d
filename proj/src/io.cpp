#include "checkers/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace checkers {

namespace {

std::vector<std::string> split_csv(const std::string& row) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(row);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  if (!row.empty() && row.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

double clean_bar_value(double v) { return v < 0.0 || !std::isfinite(v) ? 0.0 : v; }

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

AmplitudeRecord make_amplitude_record(int x, int t, const std::optional<int>& line,
                                      const HalfPowerAmplitude& amp) {
  AmplitudeRecord record;
  record.x = x;
  record.t = t;
  record.line = line;
  record.g = amp.gauss();
  record.k = amp.half_exp();
  const auto z = amp.to_complex();
  record.re_float = z.real();
  record.im_float = z.imag();
  record.prob = amp.norm_sq();
  return record;
}

std::string amplitude_csv_header() {
  return "x,t,line,g_re,g_im,k,re_float,im_float,prob_num,prob_exp";
}

std::string to_csv(const AmplitudeRecord& r) {
  std::ostringstream out;
  out << r.x << ',' << r.t << ',';
  if (r.line) {
    out << *r.line;
  } else {
    out << "free";
  }
  out << ',';
  if (r.exact) {
    out << r.g.re.str() << ',' << r.g.im.str() << ',' << r.k;
  } else {
    out << ",,";
  }
  out << ',' << format_double(r.re_float) << ',' << format_double(r.im_float) << ',';
  if (r.exact) {
    out << r.prob.num().str() << ',' << r.prob.exp();
  } else {
    out << ',';
  }
  return out.str();
}

AmplitudeRecord amplitude_from_csv(const std::string& row) {
  const auto f = split_csv(row);
  if (f.size() != 10) {
    throw DomainError("amplitude_from_csv: expected 10 fields, got " +
                      std::to_string(f.size()));
  }
  AmplitudeRecord r;
  r.x = std::stoi(f[0]);
  r.t = std::stoi(f[1]);
  if (f[2] != "free") {
    r.line = std::stoi(f[2]);
  }
  r.exact = !f[3].empty();
  if (r.exact) {
    r.g = GaussianInt(BigInt(f[3]), BigInt(f[4]));
    r.k = std::stoll(f[5]);
    r.prob = DyadicRational(BigInt(f[8]), std::stoll(f[9]));
  }
  r.re_float = std::stod(f[6]);
  r.im_float = std::stod(f[7]);
  return r;
}

std::string series_csv_header() {
  return "line,index,term,partial_sum,target,tail_bound";
}

std::string to_csv(const SeriesRow& row) {
  std::ostringstream out;
  out << row.line << ',' << row.index << ',' << format_double(row.term) << ','
      << format_double(row.partial_sum) << ',';
  if (row.target) {
    out << format_double(*row.target);
  }
  out << ',';
  if (row.tail_bound) {
    out << format_double(*row.tail_bound);
  }
  return out.str();
}

nlohmann::json to_json(const AmplitudeRecord& r) {
  nlohmann::json j{
      {"x", r.x},
      {"t", r.t},
      {"re_float", r.re_float},
      {"im_float", r.im_float},
  };
  if (r.line) {
    j["line"] = *r.line;
  } else {
    j["line"] = nullptr;
  }
  if (r.exact) {
    j["g_re"] = r.g.re.str();
    j["g_im"] = r.g.im.str();
    j["k"] = r.k;
    j["prob_num"] = r.prob.num().str();
    j["prob_exp"] = r.prob.exp();
  }
  return j;
}

AmplitudeRecord amplitude_from_json(const nlohmann::json& j) {
  AmplitudeRecord r;
  r.x = j.at("x").get<int>();
  r.t = j.at("t").get<int>();
  if (!j.at("line").is_null()) {
    r.line = j.at("line").get<int>();
  }
  r.exact = j.contains("g_re");
  if (r.exact) {
    r.g = GaussianInt(BigInt(j.at("g_re").get<std::string>()),
                      BigInt(j.at("g_im").get<std::string>()));
    r.k = j.at("k").get<long long>();
    r.prob = DyadicRational(BigInt(j.at("prob_num").get<std::string>()),
                            j.at("prob_exp").get<long long>());
  }
  r.re_float = j.at("re_float").get<double>();
  r.im_float = j.at("im_float").get<double>();
  return r;
}

nlohmann::json to_json(const SeriesRow& row) {
  nlohmann::json j{
      {"line", row.line},
      {"index", row.index},
      {"term", row.term},
      {"partial_sum", row.partial_sum},
  };
  if (row.target) {
    j["target"] = *row.target;
  }
  if (row.tail_bound) {
    j["tail_bound"] = *row.tail_bound;
  }
  return j;
}

std::string svg_bar_chart(const std::vector<std::pair<int, double>>& bars,
                          const std::string& title) {
  constexpr int kBarWidth = 12;
  constexpr int kGap = 2;
  constexpr int kPlotHeight = 220;
  constexpr int kMarginLeft = 46;
  constexpr int kMarginTop = 34;
  constexpr int kMarginBottom = 30;
  const int n = static_cast<int>(bars.size());
  const int width = kMarginLeft + std::max(n, 1) * (kBarWidth + kGap) + 12;
  const int height = kMarginTop + kPlotHeight + kMarginBottom;

  double peak = 0.0;
  for (const auto& [x, v] : bars) {
    peak = std::max(peak, clean_bar_value(v));
  }
  if (peak == 0.0) {
    peak = 1.0;
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\">\n";
  out << "  <text x=\"" << kMarginLeft << "\" y=\"18\" font-size=\"13\" "
      << "font-family=\"monospace\">" << title << "</text>\n";
  // axes
  const int base_y = kMarginTop + kPlotHeight;
  out << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
      << kMarginLeft << "\" y2=\"" << base_y << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << base_y << "\" x2=\""
      << width - 6 << "\" y2=\"" << base_y << "\" stroke=\"black\"/>\n";
  out << "  <text x=\"4\" y=\"" << kMarginTop + 4 << "\" font-size=\"10\" "
      << "font-family=\"monospace\">" << format_double(peak) << "</text>\n";
  out << "  <text x=\"4\" y=\"" << base_y << "\" font-size=\"10\" "
      << "font-family=\"monospace\">0</text>\n";
  for (int i = 0; i < n; ++i) {
    const double v = clean_bar_value(bars[i].second);
    const int h = static_cast<int>(kPlotHeight * v / peak + 0.5);
    const int bx = kMarginLeft + kGap + i * (kBarWidth + kGap);
    out << "  <rect x=\"" << bx << "\" y=\"" << base_y - h << "\" width=\""
        << kBarWidth << "\" height=\"" << h << "\" fill=\"#4477aa\"/>\n";
    if (n <= 40 || i % ((n + 39) / 40) == 0) {
      out << "  <text x=\"" << bx << "\" y=\"" << base_y + 12
          << "\" font-size=\"8\" font-family=\"monospace\">" << bars[i].first
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace checkers
