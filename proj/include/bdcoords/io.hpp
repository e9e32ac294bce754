#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "bdcoords/bd.hpp"
#include "bdcoords/verify.hpp"

namespace bdcoords {

using Json = nlohmann::json;

/// Parsed surface file: combinatorics, shears/twists when present, and an
/// optional "slice" object {"z": {"P0.B12": ...}, "w": {"C1": ...}}.
struct SurfaceInput {
  SurfaceSpec spec;
  std::optional<SurfaceParameters> parameters;
  std::optional<SlicePoint> slice;
};

/// Throws SchemaError with the JSON path of the offending field.
SurfaceInput parse_surface(const Json& j);
SurfaceInput load_surface(const std::string& path);

Json surface_to_json(const SurfaceSpec& spec, const SurfaceParameters* params = nullptr);
Json bd_vector_to_json(const BDVector& v);
Json closed_leaf_to_json(const ClosedLeafReport& r);
Json membership_to_json(const Membership& m);
Json suite_to_json(const SuiteResult& r);
Json developed_to_json(const DevelopedSurface& ds);

/// Pretty JSON with doubles written as %.17g.
std::string dump_json(const Json& j);

/// block,object,indices,value with indices joined by ':'.
std::string bd_vector_csv(const BDVector& v);

void write_text(const std::string& path, const std::string& text);

}  // namespace bdcoords
