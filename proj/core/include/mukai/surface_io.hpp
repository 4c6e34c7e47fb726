#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mukai/errors.hpp"
#include "mukai/lattice.hpp"

namespace mukai {

/// A model that parsed but broke one or more invariants.
class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(ValidationReport report)
      : Error("surface model failed validation:\n" + report.to_string()),
        report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Parses the surface-model JSON schema. Unknown keys are rejected; structural
/// problems raise SchemaError naming the field. Invariants are not checked.
SurfaceModel parse_surface(std::string_view json_text);

/// parse_surface + validate_surface; throws ValidationFailed on violations.
SurfaceModel load_surface_text(std::string_view json_text);
SurfaceModel load_surface(const std::filesystem::path& path);

/// Serializes to the same schema (pretty-printed, keys in schema order).
std::string surface_to_json(const SurfaceModel& model);

/// Built-in models: A1 A2 A3 D4 E6 E7 E8 A1xA1 Pell.
SurfaceModel preset(std::string_view name);
const std::vector<std::string>& preset_names();

}  // namespace mukai
