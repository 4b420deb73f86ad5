#include "lfw/io.hpp"

#include <fstream>
#include <sstream>

#include "lfw/transform.hpp"

namespace lfw {

namespace {

const Json& require_field(const Json& j, const char* key, const char* where) {
  if (!j.contains(key))
    throw ParseError(std::string(where) + ": missing field '" + key + "'");
  return j.at(key);
}

int require_int(const Json& j, const char* key, const char* where) {
  const Json& v = require_field(j, key, where);
  if (!v.is_number_integer())
    throw ParseError(std::string(where) + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Json field_to_json(const FieldRef& f) {
  return Json{{"p", f->p()}, {"c", f->c()}, {"reduction", f->reduction()}};
}

FieldRef field_from_json(const Json& j) {
  const int p = require_int(j, "p", "field");
  const int c = require_int(j, "c", "field");
  const Json& red = require_field(j, "reduction", "field");
  if (!red.is_array())
    throw ParseError("field: field 'reduction' must be a coefficient array");
  std::vector<int> coeffs;
  for (const Json& x : red) {
    if (!x.is_number_integer())
      throw ParseError("field: field 'reduction' must hold integers");
    coeffs.push_back(x.get<int>());
  }
  try {
    return FieldParams::make(p, c, std::move(coeffs));
  } catch (const ParamError& e) {
    throw ParseError(std::string("field: ") + e.what());
  }
}

Json function_to_json(const TestFunction& f, const Json& meta) {
  Json values = Json::array();
  for (const Cplx& v : f.values()) values.push_back(Json::array({v.real(), v.imag()}));
  Json j{{"format_version", kFormatVersion},
         {"field", field_to_json(f.field())},
         {"side", f.side() == Side::Point ? "point" : "frequency"},
         {"window", Json{{"M", f.window().m}, {"N", f.window().n}}},
         {"values", std::move(values)}};
  if (!meta.is_null()) j["meta"] = meta;
  return j;
}

TestFunction function_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("function: top level must be an object");
  const int version = require_int(j, "format_version", "function");
  if (version != kFormatVersion)
    throw ParseError("function: unsupported format_version " + std::to_string(version));
  const FieldRef f = field_from_json(require_field(j, "field", "function"));
  const Json& side_j = require_field(j, "side", "function");
  if (!side_j.is_string() || (side_j != "point" && side_j != "frequency"))
    throw ParseError("function: field 'side' must be \"point\" or \"frequency\"");
  const Side side = side_j == "point" ? Side::Point : Side::Frequency;
  const Json& wj = require_field(j, "window", "function");
  const Window w{require_int(wj, "M", "window"), require_int(wj, "N", "window")};
  if (w.m < 0 || w.n < 0) throw ParseError("window: fields 'M' and 'N' must be >= 0");
  const Json& vals = require_field(j, "values", "function");
  if (!vals.is_array()) throw ParseError("function: field 'values' must be an array");
  std::vector<Cplx> values;
  values.reserve(vals.size());
  for (const Json& v : vals) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
      throw ParseError("function: field 'values' entries must be [re, im] pairs");
    values.emplace_back(v[0].get<double>(), v[1].get<double>());
  }
  try {
    return TestFunction(f, side, w, std::move(values));
  } catch (const Error& e) {
    throw ParseError(std::string("function: field 'values': ") + e.what());
  }
}

void write_function_file(const std::filesystem::path& path, const TestFunction& f,
                         const Json& meta) {
  write_text_file(path, function_to_json(f, meta).dump(2) + "\n");
}

TestFunction read_function_file(const std::filesystem::path& path) {
  return function_from_json(read_json_file(path));
}

WaveletFamily family_from_files(const std::vector<std::filesystem::path>& paths) {
  std::vector<TestFunction> members;
  members.reserve(paths.size());
  for (const auto& p : paths) {
    TestFunction f = read_function_file(p);
    members.push_back(f.side() == Side::Frequency ? std::move(f) : fourier_fast(f));
  }
  return WaveletFamily(std::move(members));
}

Json laurent_to_json(const Laurent& x) {
  const int c = x.field()->c();
  Json terms = Json::array();
  for (const auto& [e, a] : x.terms()) {
    Json coeffs = Json::array();
    const auto co = x.field()->gf_coeffs(a);
    for (int mu = 0; mu < c; ++mu) coeffs.push_back(co[mu]);
    terms.push_back(Json::array({e, std::move(coeffs)}));
  }
  return terms;
}

Json cell_to_json(const FieldRef& f, const FrequencyCell& cell) {
  return Json{{"support_exp", cell.support_exp},
              {"resolution", cell.resolution},
              {"index", cell.index},
              {"representative", cell.representative(f).to_string()}};
}

Json check_to_json(const FieldRef& f, const CheckReport& rep) {
  Json j{{"name", rep.name},
         {"max_residual", rep.max_residual},
         {"status", to_string(rep.status)},
         {"worst_cell", cell_to_json(f, rep.worst_cell)},
         {"cellwise_exact", rep.cellwise_exact},
         {"resolution", rep.resolution}};
  if (rep.jmax >= 0) j["jmax"] = rep.jmax;
  if (rep.smax > 0) j["smax"] = rep.smax;
  if (rep.worst_j >= 0) j["worst_j"] = rep.worst_j;
  if (rep.worst_l >= 0) j["worst_member"] = rep.worst_l + 1;
  if (rep.worst_m >= 0) j["worst_member_2"] = rep.worst_m + 1;
  if (rep.worst_s >= 0) j["worst_s"] = rep.worst_s;
  return j;
}

Json verdict_to_json(const FieldRef& f, const VerdictReport& v) {
  Json checks = Json::array();
  checks.push_back(check_to_json(f, v.orthonormality));
  checks.push_back(check_to_json(f, v.calderon));
  checks.push_back(check_to_json(f, v.cross_correlation));
  checks.push_back(Json{{"name", "norm_integral"},
                        {"value", v.norm_integral.value},
                        {"target", v.norm_integral.target},
                        {"max_residual", v.norm_integral.residual},
                        {"status", to_string(v.norm_integral.status)}});
  Json j{{"format_version", kFormatVersion},
         {"field", field_to_json(f)},
         {"family_size", v.family_size},
         {"member_norms", v.member_norms},
         {"norms_max_residual", v.norms_max_residual},
         {"checks", std::move(checks)},
         {"flags",
          Json{{"orthonormal_system", v.orthonormal_system},
               {"tight_frame_constant_1", v.tight_frame_constant_1},
               {"orthonormal_basis", v.orthonormal_basis}}},
         {"routes",
          Json{{"frame_route", v.wavelet_by_frame_route},
               {"ortho_route", v.wavelet_by_ortho_route},
               {"agree", v.routes_agree}}},
         {"conclusive", v.conclusive}};
  if (v.vanish_level.has_value()) j["vanish_level"] = *v.vanish_level;
  return j;
}

Json gramian_to_json(const FieldRef& f, const std::vector<GramianSlice>& slices) {
  Json arr = Json::array();
  for (const GramianSlice& s : slices) {
    Json rows = Json::array();
    const std::uint64_t d = s.dim();
    for (std::uint64_t a = 0; a < d; ++a) {
      Json row = Json::array();
      for (std::uint64_t b = 0; b < d; ++b) {
        const Cplx v = s.at(a, b);
        row.push_back(Json::array({v.real(), v.imag()}));
      }
      rows.push_back(std::move(row));
    }
    arr.push_back(Json{{"cell", cell_to_json(f, s.cell)},
                       {"size_exp", s.size_exp},
                       {"hermitian_residual", s.hermitian_residual()},
                       {"entries", std::move(rows)}});
  }
  return Json{{"format_version", kFormatVersion},
              {"field", field_to_json(f)},
              {"slices", std::move(arr)}};
}

Json frame_bounds_to_json(const FieldRef& f, const FrameBounds& fb) {
  return Json{{"format_version", kFormatVersion},
              {"field", field_to_json(f)},
              {"size_exp", fb.size_exp},
              {"resolution", fb.resolution},
              {"truncated", true},
              {"lower", fb.lower},
              {"upper", fb.upper},
              {"argmin_cell", cell_to_json(f, fb.argmin_cell)},
              {"argmax_cell", cell_to_json(f, fb.argmax_cell)}};
}

Json scaling_recovery_to_json(const FieldRef& f, const ScalingRecovery& rec) {
  Json prov = Json::array();
  for (const CellProvenance& p : rec.provenance)
    prov.push_back(Json{{"cell", p.cell}, {"j", p.j}, {"member", p.l}, {"norm", p.norm}});
  return Json{{"format_version", kFormatVersion},
              {"field", field_to_json(f)},
              {"resolution", rec.resolution},
              {"shift_orthonormality_residual", rec.shift_orthonormality_residual},
              {"l2_norm", rec.l2_norm},
              {"provenance", std::move(prov)}};
}

std::string dimension_map_to_csv(const FieldRef& f, const DimensionMap& map) {
  std::ostringstream os;
  os << "format_version," << kFormatVersion << "\n";
  os << "cell_index,grid_point,value\n";
  os.precision(17);
  for (std::uint64_t idx = 0; idx < map.values.size(); ++idx) {
    const Laurent pt = grid_point(f, Window{0, map.resolution}, idx);
    os << idx << ",\"" << pt.to_string() << "\"," << map.values[idx] << "\n";
  }
  return os.str();
}

std::string verdict_to_csv(const VerdictReport& v) {
  std::ostringstream os;
  os << "format_version," << kFormatVersion << "\n";
  os << "check,max_residual,status\n";
  os.precision(17);
  for (const CheckReport* rep :
       {&v.orthonormality, &v.calderon, &v.cross_correlation})
    os << rep->name << "," << rep->max_residual << "," << to_string(rep->status) << "\n";
  os << "norm_integral," << v.norm_integral.residual << ","
     << to_string(v.norm_integral.status) << "\n";
  os << "member_norms," << v.norms_max_residual << ","
     << to_string(ResidualThresholds{}.judge(v.norms_max_residual)) << "\n";
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out << text;
  if (!out.good()) throw Error("write failed: " + path.string());
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open: " + path.string());
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw ParseError(path.string() + ": invalid JSON syntax");
  return j;
}

}  // namespace lfw
