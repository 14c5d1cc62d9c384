#include "fwbesov/report_io.hpp"

#include "fwbesov/constants.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

namespace fwbesov {

using nlohmann::json;

ExperimentReport::ExperimentReport(std::string command)
    : command_(std::move(command)),
      measurements_(std::make_unique<json>(json::object())),
      fits_(std::make_unique<json>(json::object())) {}

ExperimentReport::~ExperimentReport() = default;
ExperimentReport::ExperimentReport(ExperimentReport&&) noexcept = default;
ExperimentReport& ExperimentReport::operator=(ExperimentReport&&) noexcept = default;

void ExperimentReport::set_config(std::string key, std::string value) {
    config_[std::move(key)] = std::move(value);
}

void ExperimentReport::set_measurement(const std::string& pointer_path, const json& value) {
    (*measurements_)[json::json_pointer(pointer_path)] = value;
}

void ExperimentReport::set_fit(const std::string& name, const json& value) {
    (*fits_)[name] = value;
}

void ExperimentReport::set_verdict(const std::string& name, bool pass, std::string detail) {
    verdicts_[name] = Verdict{pass, std::move(detail)};
}

void ExperimentReport::set_timing(const std::string& name, double seconds) {
    timings_[name] = seconds;
}

bool ExperimentReport::all_pass() const {
    return std::all_of(verdicts_.begin(), verdicts_.end(),
                       [](const auto& kv) { return kv.second.pass; });
}

json ExperimentReport::to_json() const {
    json out;
    json cfg = json::object();
    cfg["command"] = command_;
    for (const auto& [k, v] : config_) cfg[k] = v;
    out["config"] = cfg;
    out["measurements"] = *measurements_;
    out["fits"] = *fits_;
    json verd = json::object();
    for (const auto& [name, v] : verdicts_)
        verd[name] = json{{"pass", v.pass}, {"detail", v.detail}};
    out["verdicts"] = verd;
    json tm = json::object();
    for (const auto& [name, sec] : timings_) tm[name] = sec;
    out["timings"] = tm;
    out["version"] = kVersion;
    return out;
}

void ExperimentReport::write_json(const std::filesystem::path& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
    f << to_json().dump(2) << "\n";
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

void CsvTable::add_row(const std::vector<double>& values) {
    std::vector<std::string> row;
    row.reserve(values.size());
    for (double v : values) row.push_back(format_double(v));
    rows.push_back(std::move(row));
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
    for (std::size_t i = 0; i < table.header.size(); ++i)
        f << (i ? "," : "") << table.header[i];
    f << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << row[i];
        f << "\n";
    }
}

namespace {

constexpr double kWidth = 720.0, kHeight = 480.0, kMargin = 60.0;

struct AxisMap {
    double x0, x1, y0, y1;
    double px(double x) const {
        return kMargin + (x - x0) / (x1 - x0 + 1e-300) * (kWidth - 2 * kMargin);
    }
    double py(double y) const {
        return kHeight - kMargin - (y - y0) / (y1 - y0 + 1e-300) * (kHeight - 2 * kMargin);
    }
};

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

void svg_header(std::ofstream& f, const std::string& title) {
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
}

void svg_axes(std::ofstream& f, const AxisMap& m, const std::string& xlab,
              const std::string& ylab) {
    f << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\""
      << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
      << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << xlab
      << "</text>\n"
      << "<text x=\"16\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 16 " << kHeight / 2 << ")\">" << ylab << "</text>\n";
    f << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 16
      << "\" font-family=\"sans-serif\" font-size=\"10\">" << format_double(m.x0)
      << "</text>\n"
      << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 16
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
      << format_double(m.x1) << "</text>\n"
      << "<text x=\"" << kMargin - 4 << "\" y=\"" << kHeight - kMargin
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
      << format_double(m.y0) << "</text>\n"
      << "<text x=\"" << kMargin - 4 << "\" y=\"" << kMargin
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
      << format_double(m.y1) << "</text>\n";
}

} // namespace

void write_svg_lines(const std::filesystem::path& path, const std::string& title,
                     const std::vector<PlotSeries>& series) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path.string());

    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (first) {
                x0 = x1 = s.x[i];
                y0 = y1 = s.y[i];
                first = false;
            }
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    if (y0 == y1) { y0 -= 1.0; y1 += 1.0; }
    const AxisMap m{x0, x1, y0, y1};

    svg_header(f, title);
    svg_axes(f, m, "t", "value");
    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        f << "<polyline fill=\"none\" stroke=\"" << kColors[si % 6]
          << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            f << m.px(s.x[i]) << "," << m.py(s.y[i]) << " ";
        f << "\"/>\n";
        f << "<text x=\"" << kWidth - kMargin - 4 << "\" y=\"" << kMargin + 16.0 * (si + 1)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\""
          << kColors[si % 6] << "\">" << s.label << "</text>\n";
    }
    f << "</svg>\n";
}

void write_svg_loglog_fit(const std::filesystem::path& path, const std::string& title,
                          const std::vector<int>& ns, const std::vector<double>& values,
                          double exponent, double intercept) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path.string());

    std::vector<double> lx(ns.size()), ly(values.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        lx[i] = std::log10(static_cast<double>(ns[i]));
        ly[i] = std::log10(values[i]);
    }
    double x0 = *std::min_element(lx.begin(), lx.end());
    double x1 = *std::max_element(lx.begin(), lx.end());
    double y0 = *std::min_element(ly.begin(), ly.end());
    double y1 = *std::max_element(ly.begin(), ly.end());
    if (y0 == y1) { y0 -= 1.0; y1 += 1.0; }
    const AxisMap m{x0, x1, y0, y1};

    svg_header(f, title);
    svg_axes(f, m, "log10 n", "log10 value");
    for (std::size_t i = 0; i < lx.size(); ++i)
        f << "<circle cx=\"" << m.px(lx[i]) << "\" cy=\"" << m.py(ly[i])
          << "\" r=\"3.5\" fill=\"#1f77b4\"/>\n";
    // fitted line: log10 v = (b - e ln n)/ln 10
    const double lg0 = (intercept - exponent * std::log(std::pow(10.0, x0))) / std::log(10.0);
    const double lg1 = (intercept - exponent * std::log(std::pow(10.0, x1))) / std::log(10.0);
    f << "<line x1=\"" << m.px(x0) << "\" y1=\"" << m.py(lg0) << "\" x2=\"" << m.px(x1)
      << "\" y2=\"" << m.py(lg1) << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    f << "<text x=\"" << kWidth - kMargin - 4 << "\" y=\"" << kMargin + 16
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">exponent "
      << format_double(exponent) << "</text>\n";
    f << "</svg>\n";
}

} // namespace fwbesov
