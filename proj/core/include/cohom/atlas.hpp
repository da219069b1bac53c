#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cohom/catalog.hpp"

namespace cohom {

struct SpaceSpec {
  std::string source;
  std::vector<FactorSpec> factors;
};

/// Parse failure; offset is the byte position in the source text.
class SpaceParseError : public std::invalid_argument {
 public:
  SpaceParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct SpaceBounds {
  std::size_t sl_min = 2, sl_max = 8;
  std::size_t rh_min = 2, rh_max = 8;
  std::size_t ch_min = 2, ch_max = 5;
  std::size_t max_factors = 4;
};

/// spec := factor ("*" factor)*, factor := name "(" integer ")", name ∈ {sl, rh, ch}.
/// Whitespace is not allowed.
SpaceSpec parse_space(std::string_view text, const SpaceBounds& bounds = {});

enum class OutputFormat { json, markdown };

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 32;
  bool nc_search = false;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> output_path;
  bool su1n = false;
};

struct RunResult {
  Catalog catalog;
  std::string output;
  int exit_code = 0;  ///< 0 iff every identity passed
};

/// sl(k) alone uses the sl tables, products of rh/ch factors the rank one
/// tables, anything else the product assembly. Writes output_path if set.
RunResult run(const SpaceSpec& spec, const RunConfig& config);

std::string render_json(const Catalog& catalog, const SpaceSpec& spec, const RunConfig& config);
std::string render_markdown(const Catalog& catalog, const SpaceSpec& spec, const RunConfig& config);

}  // namespace cohom
