#pragma once

// Deterministic synthetic tables for size and speed measurements.
//
// Pools and ranges are fixed so that a (shape, rows, seed) triple always
// produces the same document. Randomness comes from std::mt19937_64, whose
// output sequence is fully specified; draws are reduced with `%` rather
// than a std distribution because distributions differ across standard
// libraries.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jton/value.hpp"

namespace jton {

enum class DatasetShape { Employees, Products, Metrics };

struct DatasetSpec {
  DatasetShape shape = DatasetShape::Employees;
  std::size_t rows = 100;
  std::uint64_t seed = 0;
};

namespace datasets {

// Every employee row has the same width up to 9,000 rows: 4-digit ids,
// 8-letter names, 14-letter departments and 3-digit salaries. Name and
// department pools are identifier-shaped so bare_strings applies to all.
inline constexpr std::array<std::string_view, 10> kEmployeeNames = {
    "Jennifer", "Jonathan", "Benjamin", "Victoria", "Michelle",
    "Virginia", "Margaret", "Samantha", "Theodore", "Nicholas",
};
inline constexpr std::array<std::string_view, 4> kDepartments = {
    "Administration", "Infrastructure", "Transportation", "Implementation",
};
inline constexpr std::int64_t kFirstEmployeeId = 1000;
inline constexpr std::int64_t kSalaryMin = 500;
inline constexpr std::int64_t kSalarySpan = 400;

inline constexpr std::array<std::string_view, 12> kProductNames = {
    "Widget",   "Gadget",  "Sprocket", "Gizmo",   "Bracket", "Fastener",
    "Coupling", "Adapter", "Bearing",  "Gasket",  "Spindle", "Actuator",
};
inline constexpr std::array<std::string_view, 6> kCategories = {
    "Hardware", "Electronics", "Tools", "Plumbing", "Automotive", "Garden",
};

inline constexpr std::int64_t kEpochStart = 1700000000;
inline constexpr std::int64_t kSampleInterval = 60;

}  // namespace datasets

inline std::string_view dataset_shape_name(DatasetShape s) noexcept {
  switch (s) {
    case DatasetShape::Employees: return "employees";
    case DatasetShape::Products: return "products";
    case DatasetShape::Metrics: return "metrics";
  }
  return "?";
}

inline std::optional<DatasetShape> dataset_shape_from_name(std::string_view name) noexcept {
  for (auto s : {DatasetShape::Employees, DatasetShape::Products, DatasetShape::Metrics}) {
    if (dataset_shape_name(s) == name) return s;
  }
  return std::nullopt;
}

inline Value generate_dataset(const DatasetSpec& spec) {
  using namespace datasets;
  if (spec.rows < 1) throw std::invalid_argument("generate_dataset needs rows >= 1");
  std::mt19937_64 rng(spec.seed);
  auto pick = [&rng](std::uint64_t n) { return rng() % n; };

  Value::Array rows;
  rows.reserve(spec.rows);
  for (std::size_t i = 0; i < spec.rows; ++i) {
    Value::Object row;
    const auto idx = static_cast<std::int64_t>(i);
    switch (spec.shape) {
      case DatasetShape::Employees:
        row.push_back({"id", Value(kFirstEmployeeId + idx)});
        row.push_back({"name", Value(kEmployeeNames[pick(kEmployeeNames.size())])});
        row.push_back({"dept", Value(kDepartments[pick(kDepartments.size())])});
        row.push_back({"salary", Value(kSalaryMin + static_cast<std::int64_t>(pick(kSalarySpan)))});
        break;
      case DatasetShape::Products: {
        row.push_back({"sku", Value("SKU-" + std::to_string(10000 + idx))});
        row.push_back({"name", Value(kProductNames[pick(kProductNames.size())])});
        row.push_back({"category", Value(kCategories[pick(kCategories.size())])});
        const auto cents = 199 + static_cast<std::int64_t>(pick(9800));
        row.push_back({"price", Value(static_cast<double>(cents) / 100.0)});
        row.push_back({"stock", Value(static_cast<std::int64_t>(pick(1000)))});
        break;
      }
      case DatasetShape::Metrics: {
        row.push_back({"timestamp", Value(kEpochStart + idx * kSampleInterval)});
        row.push_back({"cpu", Value(static_cast<double>(pick(1000)) / 10.0)});
        row.push_back({"memory", Value(static_cast<double>(pick(10000)) / 100.0)});
        row.push_back({"requests", Value(static_cast<std::int64_t>(pick(5000)))});
        break;
      }
    }
    rows.emplace_back(std::move(row));
  }
  return Value(std::move(rows));
}

}  // namespace jton
