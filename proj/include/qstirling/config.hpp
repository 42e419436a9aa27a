#pragma once

// Runtime limits and output selection shared by the enumeration routines and
// the command line tool.

#include <stdexcept>
#include <string>

namespace qstirling {

enum class OutputFormat { text, json, csv };

struct Config {
  // Enumerations refuse words longer than this many letters (k*n).
  long max_enumeration_size = 14;
  // Default truncation order for series constructions.
  long truncation_order = 8;
  OutputFormat output_format = OutputFormat::text;
};

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + s + "' (expected text, json or csv)");
}

// Thrown when an enumeration request exceeds the configured size budget.
struct enumeration_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check_enumeration_size(long n, long k, const Config& cfg) {
  if (n < 0 || k < 1) throw std::invalid_argument("enumeration: need n >= 0 and k >= 1");
  if (k * n > cfg.max_enumeration_size)
    throw enumeration_limit_error(
        "enumeration of " + std::to_string(k * n) + " letters exceeds the configured limit of " +
        std::to_string(cfg.max_enumeration_size) + " (raise max_enumeration_size to override)");
}

}  // namespace qstirling
