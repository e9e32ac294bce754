#include "bdcoords/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace bdcoords {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key + ": missing");
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path + ": expected a string");
  return j.get<std::string>();
}

long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
  return j.get<long>();
}

double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path + ": expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw SchemaError(path + ": expected a finite number");
  return x;
}

int as_sign(const Json& j, const std::string& path) {
  const long s = as_int(j, path);
  if (s != 1 && s != -1) throw SchemaError(path + ": expected +1 or -1");
  return static_cast<int>(s);
}

// Boundary keys "1".."3" or "C1".."C3" -> 0..2.
int slot_key(const std::string& key, const std::string& path) {
  const std::string digits = (key.size() == 2 && key[0] == 'C') ? key.substr(1) : key;
  if (digits == "1" || digits == "2" || digits == "3") return digits[0] - '1';
  throw SchemaError(path + ": unknown boundary '" + key + "' (use 1, 2, 3)");
}

int leaf_index(const PantsCombinatorics& comb, const std::string& name, const std::string& path) {
  for (int leaf = 0; leaf < 3; ++leaf)
    if (comb.leaf_names[leaf] == name) return leaf;
  throw SchemaError(path + ": unknown leaf '" + name + "' (expected " + comb.leaf_names[0] + ", " +
                    comb.leaf_names[1] + ", " + comb.leaf_names[2] + ")");
}

PantsSpec parse_pants(const Json& j, const std::string& path) {
  PantsSpec p;
  p.id = as_string(field(j, "id", path), path + ".id");
  const std::string type = as_string(field(j, "type", path), path + ".type");
  if (type == "I") {
    p.lamination.type = LaminationType::I;
  } else if (type == "II") {
    p.lamination.type = LaminationType::II;
    const long d = as_int(field(j, "distinguished", path), path + ".distinguished");
    if (d < 1 || d > 3) throw SchemaError(path + ".distinguished: expected 1, 2 or 3");
    p.lamination.distinguished = static_cast<int>(d - 1);
  } else {
    throw SchemaError(path + ".type: expected \"I\" or \"II\"");
  }
  if (auto it = j.find("spiral_signs"); it != j.end()) {
    if (!it->is_object()) throw SchemaError(path + ".spiral_signs: expected an object");
    for (const auto& [key, value] : it->items())
      p.lamination.spiral_signs[slot_key(key, path + ".spiral_signs")] =
          as_sign(value, path + ".spiral_signs." + key);
  }
  const PantsCombinatorics comb = combinatorics(p.lamination);
  if (auto it = j.find("leaf_orientations"); it != j.end()) {
    if (!it->is_object()) throw SchemaError(path + ".leaf_orientations: expected an object");
    for (const auto& [key, value] : it->items())
      p.lamination.leaf_orientations[leaf_index(comb, key, path + ".leaf_orientations")] =
          as_sign(value, path + ".leaf_orientations." + key);
  }
  return p;
}

CurveSpec parse_curve(const Json& j, const std::string& path) {
  CurveSpec c;
  c.id = as_string(field(j, "id", path), path + ".id");
  const Json& ends = field(j, "ends", path);
  if (!ends.is_array() || ends.size() != 2) throw SchemaError(path + ".ends: expected two [pants, slot] pairs");
  for (int side = 0; side < 2; ++side) {
    const std::string ep = path + ".ends[" + std::to_string(side) + "]";
    const Json& e = ends[side];
    if (!e.is_array() || e.size() != 2) throw SchemaError(ep + ": expected [pants, slot]");
    c.ends[side].pants = as_string(e[0], ep + "[0]");
    const long slot = as_int(e[1], ep + "[1]");
    if (slot < 1 || slot > 3) throw SchemaError(ep + "[1]: slot " + std::to_string(slot) + " is not 1, 2 or 3");
    c.ends[side].slot = static_cast<int>(slot - 1);
  }
  if (auto it = j.find("short_arc"); it != j.end()) {
    const std::string sp = path + ".short_arc";
    if (!it->is_object()) throw SchemaError(sp + ": expected an object");
    if (it->contains("left_triangle")) c.short_arc.left_triangle = as_string((*it)["left_triangle"], sp + ".left_triangle");
    if (it->contains("right_triangle"))
      c.short_arc.right_triangle = as_string((*it)["right_triangle"], sp + ".right_triangle");
    if (it->contains("left_corner"))
      c.short_arc.left_corner = static_cast<int>(as_int((*it)["left_corner"], sp + ".left_corner"));
    if (it->contains("right_corner"))
      c.short_arc.right_corner = static_cast<int>(as_int((*it)["right_corner"], sp + ".right_corner"));
  }
  return c;
}

void write_json(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << inner << Json(key).dump() << ": ";
        write_json(out, value, indent + 2);
      }
      out << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << inner;
        write_json(out, j[i], indent + 2);
      }
      out << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x)) {
        out << format_double(x);
      } else {
        out << "null";
      }
      return;
    }
    default:
      out << j.dump();
  }
}

Json point_json(const ProjPoint& p) {
  const ProjPoint u = unit(p);
  return Json::array({u.a().to_double(), u.b().to_double()});
}

Json quadruple_json(const LeafQuadruple& q) {
  return Json{{"x", point_json(q.x)}, {"y", point_json(q.y)}, {"zl", point_json(q.zl)}, {"zr", point_json(q.zr)}};
}

Json mobius_json(const Mobius& m) {
  return Json::array({Json::array({m.a().to_double(), m.b().to_double()}),
                      Json::array({m.c().to_double(), m.d().to_double()})});
}

}  // namespace

SurfaceInput parse_surface(const Json& j) {
  SurfaceInput in;
  const std::string root = "$";
  in.spec.genus = static_cast<int>(as_int(field(j, "genus", root), "$.genus"));
  const Json& pants = field(j, "pants", root);
  if (!pants.is_array()) throw SchemaError("$.pants: expected an array");
  for (std::size_t i = 0; i < pants.size(); ++i)
    in.spec.pants.push_back(parse_pants(pants[i], "$.pants[" + std::to_string(i) + "]"));
  const Json& curves = field(j, "curves", root);
  if (!curves.is_array()) throw SchemaError("$.curves: expected an array");
  for (std::size_t i = 0; i < curves.size(); ++i)
    in.spec.curves.push_back(parse_curve(curves[i], "$.curves[" + std::to_string(i) + "]"));
  validate_spec(in.spec);

  if (auto it = j.find("shears"); it != j.end()) {
    if (!it->is_object()) throw SchemaError("$.shears: expected an object");
    SurfaceParameters params;
    for (const auto& p : in.spec.pants) {
      const std::string path = "$.shears." + p.id;
      auto pj = it->find(p.id);
      if (pj == it->end()) throw SchemaError(path + ": missing");
      if (!pj->is_object()) throw SchemaError(path + ": expected an object");
      const PantsCombinatorics comb = combinatorics(p.lamination);
      PantsShearing s;
      std::array<bool, 3> seen{false, false, false};
      for (const auto& [key, value] : pj->items()) {
        const int leaf = leaf_index(comb, key, path);
        s.x[leaf] = as_number(value, path + "." + key);
        seen[leaf] = true;
      }
      for (int leaf = 0; leaf < 3; ++leaf)
        if (!seen[leaf]) throw SchemaError(path + "." + comb.leaf_names[leaf] + ": missing");
      params.shears.push_back(s);
    }
    params.twists.assign(in.spec.curves.size(), 0.0);
    if (auto tw = j.find("twists"); tw != j.end()) {
      if (!tw->is_object()) throw SchemaError("$.twists: expected an object");
      for (const auto& [key, value] : tw->items()) {
        int ci = -1;
        try {
          ci = in.spec.curve_index(key);
        } catch (const SchemaError&) {
          throw SchemaError("$.twists." + key + ": unknown curve");
        }
        params.twists[ci] = as_number(value, "$.twists." + key);
      }
    }
    in.parameters = params;
  }

  if (auto it = j.find("slice"); it != j.end()) {
    SlicePoint sp;
    const Json& z = field(*it, "z", "$.slice");
    const Json& w = field(*it, "w", "$.slice");
    if (!z.is_object() || !w.is_object()) throw SchemaError("$.slice: z and w must be objects");
    for (const auto& [key, value] : z.items()) sp.z[key] = as_number(value, "$.slice.z." + key);
    for (const auto& [key, value] : w.items()) sp.w[key] = as_number(value, "$.slice.w." + key);
    in.slice = sp;
  }
  return in;
}

SurfaceInput load_surface(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SchemaError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return parse_surface(j);
}

Json surface_to_json(const SurfaceSpec& spec, const SurfaceParameters* params) {
  Json j;
  j["genus"] = spec.genus;
  j["pants"] = Json::array();
  for (std::size_t i = 0; i < spec.pants.size(); ++i) {
    const PantsSpec& p = spec.pants[i];
    const PantsCombinatorics comb = combinatorics(p.lamination);
    Json pj{{"id", p.id}, {"type", p.lamination.type == LaminationType::I ? "I" : "II"}};
    if (p.lamination.type == LaminationType::II) pj["distinguished"] = p.lamination.distinguished + 1;
    for (int s = 0; s < 3; ++s) pj["spiral_signs"][std::to_string(s + 1)] = p.lamination.spiral_signs[s];
    for (int l = 0; l < 3; ++l) pj["leaf_orientations"][comb.leaf_names[l]] = p.lamination.leaf_orientations[l];
    j["pants"].push_back(pj);
    if (params)
      for (int l = 0; l < 3; ++l) j["shears"][p.id][comb.leaf_names[l]] = params->shears[i].x[l];
  }
  j["curves"] = Json::array();
  for (std::size_t i = 0; i < spec.curves.size(); ++i) {
    const CurveSpec& c = spec.curves[i];
    Json arc{{"left_triangle", c.short_arc.left_triangle}, {"right_triangle", c.short_arc.right_triangle}};
    if (c.short_arc.left_corner) arc["left_corner"] = *c.short_arc.left_corner;
    if (c.short_arc.right_corner) arc["right_corner"] = *c.short_arc.right_corner;
    j["curves"].push_back(Json{{"id", c.id},
                               {"ends", Json::array({Json::array({c.ends[0].pants, c.ends[0].slot + 1}),
                                                     Json::array({c.ends[1].pants, c.ends[1].slot + 1})})},
                               {"short_arc", arc}});
    if (params) j["twists"][c.id] = params->twists[i];
  }
  return j;
}

Json bd_vector_to_json(const BDVector& v) {
  Json j;
  j["n"] = v.layout.n();
  j["size"] = v.layout.size();
  j["blocks"] = Json{{"tau", v.layout.tau_count()}, {"sigma", v.layout.sigma_count()}, {"theta", v.layout.theta_count()}};
  j["entries"] = Json::array();
  for (std::size_t i = 0; i < v.layout.size(); ++i) {
    const BDEntry& e = v.layout.entries()[i];
    j["entries"].push_back(
        Json{{"block", block_name(e.block)}, {"object", e.object}, {"indices", e.indices}, {"value", v.values[i]}});
  }
  return j;
}

Json closed_leaf_to_json(const ClosedLeafReport& r) {
  Json j;
  j["max_gap"] = r.max_gap;
  j["entries"] = Json::array();
  for (const auto& e : r.entries) {
    Json ej{{"curve", e.curve}, {"p", e.p}, {"R", e.R}, {"L", e.L}, {"R_minus_L", e.R - e.L}};
    if (std::isfinite(e.l)) ej["l"] = e.l;
    j["entries"].push_back(ej);
  }
  return j;
}

Json membership_to_json(const Membership& m) { return Json{{"member", m.member}, {"diagnostics", m.diagnostics}}; }

Json suite_to_json(const SuiteResult& r) {
  return Json{{"suite", r.name},
              {"pass", r.pass},
              {"cases", r.cases},
              {"failures", r.failures},
              {"worst_deviation", r.worst_deviation},
              {"sign_mismatches", r.sign_mismatches},
              {"note", r.note}};
}

Json developed_to_json(const DevelopedSurface& ds) {
  const SurfaceSpec& spec = ds.spec();
  Json j;
  j["pants"] = Json::object();
  for (std::size_t pi = 0; pi < spec.pants.size(); ++pi) {
    const int p = static_cast<int>(pi);
    const PantsCombinatorics& comb = ds.pants()[pi].comb;
    Json pj;
    for (int t = 0; t < 2; ++t) {
      const auto tri = ds.triangle(p, t);
      pj["triangles"][triangle_names()[t]] = Json::array({point_json(tri[0]), point_json(tri[1]), point_json(tri[2])});
    }
    for (int l = 0; l < 3; ++l) pj["leaves"][comb.leaf_names[l]] = quadruple_json(ds.leaf(p, l));
    for (int s = 0; s < 3; ++s) pj["boundary_holonomy"]["C" + std::to_string(s + 1)] = mobius_json(ds.boundary_holonomy(p, s));
    pj["placement"] = mobius_json(ds.placements()[pi]);
    j["pants"][spec.pants[pi].id] = pj;
  }
  j["curves"] = Json::object();
  for (std::size_t ci = 0; ci < spec.curves.size(); ++ci) {
    const int c = static_cast<int>(ci);
    const CurveGluing& g = ds.curves()[ci];
    j["curves"][spec.curves[ci].id] = Json{{"length", g.length},
                                           {"twist", g.twist},
                                           {"tree_edge", g.tree_edge},
                                           {"gluing_quadruple", quadruple_json(ds.gluing_quadruple(c))},
                                           {"gluing_cross_ratio", gluing_cross_ratio(ds, c)},
                                           {"holonomy", mobius_json(ds.curve_holonomy(c))}};
  }
  return j;
}

std::string dump_json(const Json& j) {
  std::ostringstream out;
  write_json(out, j, 0);
  out << "\n";
  return out.str();
}

std::string bd_vector_csv(const BDVector& v) {
  std::ostringstream out;
  out << "block,object,indices,value\n";
  for (std::size_t i = 0; i < v.layout.size(); ++i) {
    const BDEntry& e = v.layout.entries()[i];
    out << block_name(e.block) << "," << e.object << ",";
    for (std::size_t k = 0; k < e.indices.size(); ++k) out << (k ? ":" : "") << e.indices[k];
    out << "," << format_double(v.values[i]) << "\n";
  }
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SchemaError("cannot write " + path);
  f << text;
}

}  // namespace bdcoords
