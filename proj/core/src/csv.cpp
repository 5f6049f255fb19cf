#include "nsiq/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "nsiq/errors.hpp"
#include "nsiq/units.hpp"

namespace nsiq {
namespace {

std::string format_optional(const std::optional<double>& v) { return v ? format_double(*v) : std::string{}; }

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

std::string sweep_text(const SweepResult& result) {
  std::string out =
      "param_khz,omega_eff_numeric_khz,omega_eff_adiabatic_khz,adiabatic_valid,"
      "omega_eff_exact_khz,max_aux_prob,xi_khz,delta_eff_residual_khz,error\n";
  for (const SweepRow& row : result.rows) {
    out += format_double(row.param_khz);
    out += ',' + format_optional(row.omega_eff_numeric_khz);
    out += ',' + format_optional(row.omega_eff_adiabatic_khz);
    out += row.adiabatic_valid ? ",1" : ",0";
    out += ',' + format_optional(row.omega_eff_exact_khz);
    out += ',' + format_optional(row.max_aux_prob);
    out += ',' + format_optional(row.xi_khz);
    out += ',' + format_optional(row.delta_eff_residual_khz);
    out += ',' + quote(row.error);
    out += '\n';
  }
  return out;
}

std::string trace_text(const PopulationTrace& trace) {
  std::string out = "time_us";
  for (BasisLabel label : trace.basis) out += ",p_" + std::string(to_string(label)) + "_prob";
  out += ",aux_total_prob\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out += format_double(s_to_us(trace.times[i]));
    for (double p : trace.populations[i]) out += ',' + format_double(p);
    out += ',' + format_double(trace.aux_total[i]);
    out += '\n';
  }
  return out;
}

std::size_t write_stream(const std::string& text, std::ostream& out) {
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("export_csv: stream write failed");
  return text.size();
}

std::size_t write_file(const std::string& text, const std::filesystem::path& destination) {
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("export_csv: cannot open '" + destination.string() + "' for writing");
  write_stream(text, file);
  file.close();
  if (!file) throw IoError("export_csv: failed to finish '" + destination.string() + "'");
  return text.size();
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw IoError("format_double: conversion failed");
  return std::string(buf.data(), end);
}

std::size_t export_csv(const SweepResult& result, std::ostream& out) { return write_stream(sweep_text(result), out); }

std::size_t export_csv(const PopulationTrace& trace, std::ostream& out) { return write_stream(trace_text(trace), out); }

std::size_t export_csv(const SweepResult& result, const std::filesystem::path& destination) {
  return write_file(sweep_text(result), destination);
}

std::size_t export_csv(const PopulationTrace& trace, const std::filesystem::path& destination) {
  return write_file(trace_text(trace), destination);
}

}  // namespace nsiq
