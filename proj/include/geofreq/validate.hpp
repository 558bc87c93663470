#pragma once

#include <geofreq/frenet.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geofreq {

enum class Bound { AtMost, AtLeast };

struct PropertyResult {
  std::string module;
  std::string name;
  double measured = 0.0;  // worst case over the sample set
  double limit = 0.0;
  Bound bound = Bound::AtMost;
  bool passed = false;
};

struct ValidationReport {
  std::vector<PropertyResult> results;

  bool passed() const noexcept;
  /// One line per property, then a summary line.
  std::string format() const;
};

using InvariantsFn = std::function<GeomInvariants(const Jet2&, Thresholds)>;

struct ValidateOptions {
  /// Generic invariants under test; replaceable for mutation tests.
  InvariantsFn invariants = [](const Jet2& j, Thresholds eps) { return geofreq::invariants(j, eps); };
  std::uint64_t seed = 0x5eed;
  std::size_t random_jets = 1000;
};

/// geometry, frenet_core, threephase_forms, signals, numdiff, hilbert,
/// park, cli_io.
std::span<const std::string_view> validation_modules() noexcept;

/// Runs one module's suite, or every suite for scope "all".
/// Throws Error{InvalidParameter} for an unknown scope.
ValidationReport run_validation(std::string_view scope, const ValidateOptions& opts = {});

}  // namespace geofreq
