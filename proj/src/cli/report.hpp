#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cesaro/normality.hpp"
#include "cesaro/telescope.hpp"

namespace cesaro::cli {

using Json = nlohmann::ordered_json;

/// Flat rendering used by --format csv.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// One subcommand's output in every format.
struct CommandOutput {
  Json config;
  Json results;
  Table table;
  std::string pretty;
  bool passed = true;
};

Json to_json(const BigRational& value);
Json to_json(const UniPoly& p);
Json to_json(const RealPoint& point);
Json to_json(const RationalMatrix& m);
Json to_json(const IdentityReport& report);
Json to_json(const AlphaRangeReport& report);
Json to_json(const SymbolicMinorSet& set);
Json to_json(const DefectReport& report);

std::string render_csv(const Table& table);

}  // namespace cesaro::cli
