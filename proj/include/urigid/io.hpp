#pragma once

#include "urigid/configuration.hpp"
#include "urigid/construction.hpp"
#include "urigid/rigidity.hpp"
#include "urigid/session.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace urigid {

/// CSV ("x,y" or "x,y,z" per line, optional header line) or JSON
/// ({"dim": d, "points": [[...], ...]}); the format is sniffed from the text.
Configuration parse_points(std::string_view text);
Configuration parse_points_csv(std::string_view text);
Configuration parse_points_json(std::string_view text);

struct FrameworkFile {
  Framework framework;
  std::optional<FanDecomposition> fan;
  std::optional<RigidityReport> report;
};

/// Byte-stable JSON: fixed key order, sorted edges, shortest round-trip
/// number formatting, trailing newline.
std::string format_framework_file(const FrameworkFile& file);
FrameworkFile parse_framework_file(std::string_view text);

/// JSON object used by `analyze`: counts, verdicts and the low end of the
/// stress-matrix spectrum.
std::string format_report(const RigidityReport& report, std::size_t spectrum_head = 8);

Event parse_event(std::string_view json_line);
std::string format_event(const Event& event);
/// One event per non-blank line.
std::vector<Event> parse_events(std::string_view text);

/// {"epoch": k, "event": {...}, "added": [[a,b],...], "removed": [[a,b],...]}
std::string format_log_entry(const LogEntry& entry);
LogEntry parse_log_entry(std::string_view json_line);
std::vector<LogEntry> parse_log(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace urigid
