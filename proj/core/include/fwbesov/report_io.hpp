#ifndef FWBESOV_REPORT_IO_HPP
#define FWBESOV_REPORT_IO_HPP

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fwbesov {

struct Verdict {
    bool pass = false;
    std::string detail;
};

/// Structured record of one harness run. Serializes to the report.json
/// schema with top-level keys config / measurements / fits / verdicts /
/// timings / version; everything except timings and the version stamp is
/// reproducible byte-for-byte from the same config.
class ExperimentReport {
public:
    explicit ExperimentReport(std::string command);
    ~ExperimentReport();
    ExperimentReport(ExperimentReport&&) noexcept;
    ExperimentReport& operator=(ExperimentReport&&) noexcept;

    const std::string& command() const { return command_; }

    void set_config(std::string key, std::string value);
    void set_measurement(const std::string& pointer_path, const nlohmann::json& value);
    void set_fit(const std::string& name, const nlohmann::json& value);
    void set_verdict(const std::string& name, bool pass, std::string detail);
    void set_timing(const std::string& name, double seconds);

    const std::map<std::string, Verdict>& verdicts() const { return verdicts_; }
    bool all_pass() const;

    nlohmann::json to_json() const;
    void write_json(const std::filesystem::path& path) const;

private:
    std::string command_;
    std::map<std::string, std::string> config_;
    std::unique_ptr<nlohmann::json> measurements_;
    std::unique_ptr<nlohmann::json> fits_;
    std::map<std::string, Verdict> verdicts_;
    std::map<std::string, double> timings_;
};

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(const std::vector<double>& values);
};

/// UTF-8, comma-separated, LF line endings, header row first.
void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Minimal SVG line plot; one polyline per series, linear axes.
struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

void write_svg_lines(const std::filesystem::path& path, const std::string& title,
                     const std::vector<PlotSeries>& series);

/// Log-log scatter of (n, value) with the fitted power law overlaid.
void write_svg_loglog_fit(const std::filesystem::path& path, const std::string& title,
                          const std::vector<int>& ns, const std::vector<double>& values,
                          double exponent, double intercept);

} // namespace fwbesov

#endif
