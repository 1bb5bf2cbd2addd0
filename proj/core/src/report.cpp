#include "bandit_lab/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <locale>
#include <sstream>
#include <string_view>

#include "bandit_lab/error.hpp"

#ifndef BANDIT_LAB_VERSION
#define BANDIT_LAB_VERSION "0.0.0"
#endif

namespace bandit_lab {
namespace {

constexpr std::string_view kHeader = "t,mean_regret,sd_regret,mean_cum_reward";

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw Error(ErrorCode::ParseError, "bad number '" + std::string(text) + "'");
  return value;
}

std::uint64_t parse_uint(std::string_view text) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value,
                                       std::chars_format::general, kCsvSignificantDigits);
  return std::string(buffer, end);
}

std::string tool_version() { return BANDIT_LAB_VERSION; }

void RunManifest::add(std::string key, std::string value) {
  entries.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> RunManifest::find(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  return std::nullopt;
}

void write_regret_csv(std::ostream& sink, const RunManifest& manifest,
                      const MonteCarloResult& result) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  for (const auto& [key, value] : manifest.entries) out << "# " << key << '=' << value << '\n';
  out << kHeader << '\n';
  for (std::size_t c = 0; c < result.t.size(); ++c) {
    out << result.t[c] << ',' << format_number(result.mean_regret[c]) << ','
        << format_number(result.sd_regret[c]) << ','
        << format_number(result.mean_cumulative_reward[c]) << '\n';
  }
  out << "# summary\n";
  out << "# final_t=" << (result.t.empty() ? 0 : result.t.back()) << '\n';
  for (std::size_t i = 0; i < result.mean_plays.size(); ++i)
    out << "# mean_plays_" << (i + 1) << '=' << format_number(result.mean_plays[i]) << '\n';
  sink << out.str();
}

RegretCsv read_regret_csv(std::istream& in) {
  RegretCsv csv;
  std::string line;
  bool seen_header = false;
  bool in_summary = false;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string_view view(line);
    try {
      if (view.starts_with("# ")) {
        const std::string_view body = view.substr(2);
        if (body == "summary") {
          in_summary = true;
          continue;
        }
        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) continue;
        auto& target = in_summary ? csv.summary : csv.manifest;
        target.add(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
      } else if (!seen_header) {
        if (view != kHeader) throw Error(ErrorCode::ParseError, "unexpected column header");
        seen_header = true;
      } else {
        const auto fields = split(view, ',');
        if (fields.size() != 4) throw Error(ErrorCode::ParseError, "expected 4 columns");
        csv.rows.push_back(RegretCsvRow{parse_uint(fields[0]), parse_double(fields[1]),
                                        parse_double(fields[2]), parse_double(fields[3])});
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  if (!seen_header) throw Error(ErrorCode::ParseError, "missing column header");
  return csv;
}

void write_regret_svg(std::ostream& sink, const MonteCarloResult& result,
                      const SvgOptions& options) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  const double width = options.width;
  const double height = options.height;
  const double left = 70.0, right = 20.0, top = 30.0, bottom = 45.0;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  const auto x_of = [&](double t) { return options.log_x ? std::log10(std::max(t, 1.0)) : t; };
  double x_min = result.t.empty() ? 0.0 : x_of(static_cast<double>(result.t.front()));
  double x_max = result.t.empty() ? 1.0 : x_of(static_cast<double>(result.t.back()));
  if (!options.log_x) x_min = 0.0;
  if (x_max <= x_min) x_max = x_min + 1.0;
  double y_min = 0.0, y_max = 0.0;
  for (double r : result.mean_regret) {
    y_min = std::min(y_min, r);
    y_max = std::max(y_max, r);
  }
  if (y_max <= y_min) y_max = y_min + 1.0;

  const auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  const auto py = [&](double y) { return top + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
      << options.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty())
    out << "<text x=\"" << format_number(width / 2) << "\" y=\"18\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">" << options.title << "</text>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
      << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << top + plot_h << "\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = x_min + (x_max - x_min) * i / kTicks;
    const double fy = y_min + (y_max - y_min) * i / kTicks;
    const double label_x = options.log_x ? std::pow(10.0, fx) : fx;
    out << "<text x=\"" << format_number(px(fx)) << "\" y=\"" << format_number(top + plot_h + 16)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
        << format_number(std::round(label_x)) << "</text>\n";
    out << "<text x=\"" << format_number(left - 6) << "\" y=\"" << format_number(py(fy) + 3)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
        << format_number(std::round(fy)) << "</text>\n";
  }
  out << "<text x=\"" << format_number(left + plot_w / 2) << "\" y=\""
      << format_number(height - 8) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"12\">" << (options.log_x ? "t (log scale)" : "t") << "</text>\n";
  out << "<text x=\"14\" y=\"" << format_number(top + plot_h / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
      << "transform=\"rotate(-90 14 " << format_number(top + plot_h / 2)
      << ")\">mean regret</text>\n";

  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t c = 0; c < result.t.size(); ++c) {
    if (c) out << ' ';
    out << format_number(px(x_of(static_cast<double>(result.t[c])))) << ','
        << format_number(py(result.mean_regret[c]));
  }
  out << "\"/>\n</svg>\n";
  sink << out.str();
}

}  // namespace bandit_lab
