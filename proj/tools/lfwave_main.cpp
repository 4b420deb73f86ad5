// Command-line front end: fixture generation, transforms, characterization
// runs, dimension maps, Gramian dumps, frame bounds, MRA recovery.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage or parse error, 3 contract or certificate violation.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <vector>

#include "lfw/bench.hpp"
#include "lfw/families.hpp"
#include "lfw/io.hpp"
#include "lfw/transform.hpp"

namespace fs = std::filesystem;
using lfw::Json;

namespace {

struct GlobalOpts {
  int p = 2;
  int c = 1;
  std::string reduction;  // comma-separated override
  double tol = 1e-9;
  std::uint64_t seed = 20240901;
  std::string out_dir;
  std::string format = "json";
};

lfw::FieldRef make_field(const GlobalOpts& g) {
  if (g.reduction.empty()) return lfw::FieldParams::make(g.p, g.c);
  std::vector<int> coeffs;
  std::stringstream ss(g.reduction);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(std::stoi(item));
  return lfw::FieldParams::make(g.p, g.c, std::move(coeffs));
}

fs::path out_path(const GlobalOpts& g, const std::string& name) {
  fs::path dir = g.out_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("LFWAVE_OUT_DIR")) dir = env;
  }
  if (dir.empty()) dir = ".";
  fs::create_directories(dir);
  return dir / name;
}

lfw::ResidualThresholds thresholds(const GlobalOpts& g) {
  return {g.tol, std::max(g.tol * 1000.0, 1e-6)};
}

std::string check_table_csv(const lfw::FieldRef& f, const lfw::CheckReport& rep) {
  std::ostringstream os;
  os << "format_version," << lfw::kFormatVersion << "\n";
  os << "cell_index,representative,residual\n";
  os.precision(17);
  for (const auto& [idx, r] : rep.cell_residuals) {
    const lfw::FrequencyCell cell{rep.worst_cell.support_exp, rep.resolution, idx};
    os << idx << ",\"" << cell.representative(f).to_string() << "\"," << r << "\n";
  }
  return os.str();
}

int cmd_family(const GlobalOpts& g, const std::string& kind,
               const std::vector<std::string>& inputs, std::string prefix) {
  if (kind == "file") {
    if (inputs.empty()) {
      std::cerr << "family --kind file requires --in paths\n";
      return 2;
    }
    for (const std::string& in : inputs) {
      const lfw::TestFunction fn = lfw::read_function_file(in);
      const fs::path dst = out_path(g, fs::path(in).filename().string());
      lfw::write_function_file(dst, fn);
      std::cout << dst.string() << "\n";
    }
    return 0;
  }

  const lfw::FieldRef field = make_field(g);
  if (prefix.empty())
    prefix = kind + "_p" + std::to_string(field->p()) + "c" + std::to_string(field->c());

  if (kind == "haar") {
    const lfw::HaarPair pair = lfw::haar_family(field);
    const fs::path sp = out_path(g, prefix + "_scaling.json");
    lfw::write_function_file(sp, pair.scaling, Json{{"fixture", "haar_scaling"}});
    std::cout << sp.string() << "\n";
    for (int l = 0; l < pair.wavelets.size(); ++l) {
      const fs::path wp = out_path(g, prefix + "_wavelet" + std::to_string(l + 1) + ".json");
      lfw::write_function_file(wp, pair.wavelets.member_hat(l),
                               Json{{"fixture", "haar_wavelet"}, {"member", l + 1}});
      std::cout << wp.string() << "\n";
    }
    return 0;
  }
  if (kind == "annulus") {
    const lfw::WaveletFamily fam = lfw::annulus_control(field);
    const fs::path wp = out_path(g, prefix + "_wavelet1.json");
    lfw::write_function_file(
        wp, fam.member_hat(0),
        Json{{"fixture", "annulus_control"},
             {"tight_frame", false},
             {"note", "Calderon sum holds but the shift correlation does not vanish"}});
    std::cout << wp.string() << "\n";
    return 0;
  }
  std::cerr << "unknown family kind '" << kind << "' (expected haar|annulus|file)\n";
  return 2;
}

int cmd_transform(const std::string& in, const std::string& out, bool naive) {
  const lfw::TestFunction f = lfw::read_function_file(in);
  const lfw::TestFunction g = lfw::fourier(f, !naive);
  lfw::write_function_file(out, g);
  std::cout << out << "\n";
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::vector<std::string>& inputs, int jmax,
               std::uint64_t smax, int res, const std::string& out) {
  std::vector<fs::path> paths(inputs.begin(), inputs.end());
  const lfw::WaveletFamily fam = lfw::family_from_files(paths);
  lfw::ClassifyOptions opts;
  opts.jmax = jmax;
  opts.smax = smax;
  opts.resolution = res;
  opts.thresholds = thresholds(g);
  const lfw::VerdictReport verdict = lfw::classify(fam, opts);

  const fs::path report = out.empty() ? out_path(g, "verdict.json") : fs::path(out);
  lfw::write_text_file(report, lfw::verdict_to_json(fam.field(), verdict).dump(2) + "\n");
  std::cout << report.string() << "\n";
  if (g.format == "csv") {
    const fs::path stem = report.parent_path() / report.stem();
    lfw::write_text_file(fs::path(stem.string() + "_summary.csv"),
                         lfw::verdict_to_csv(verdict));
    for (const lfw::CheckReport* rep :
         {&verdict.orthonormality, &verdict.calderon, &verdict.cross_correlation}) {
      lfw::write_text_file(fs::path(stem.string() + "_" + rep->name + ".csv"),
                           check_table_csv(fam.field(), *rep));
    }
  }
  return verdict.orthonormal_basis ? 0 : 1;
}

int cmd_dimension(const GlobalOpts& g, const std::vector<std::string>& inputs, int res,
                  const std::string& out) {
  std::vector<fs::path> paths(inputs.begin(), inputs.end());
  const lfw::WaveletFamily fam = lfw::family_from_files(paths);
  const lfw::DimensionMap map = lfw::dimension_map(fam, res);
  const fs::path dst = out.empty() ? out_path(g, "dimension.csv") : fs::path(out);
  lfw::write_text_file(dst, lfw::dimension_map_to_csv(fam.field(), map));
  std::cout << dst.string() << "\n";
  return 0;
}

int cmd_gramian(const GlobalOpts& g, const std::vector<std::string>& inputs, int S,
                int res, const std::string& out) {
  std::vector<fs::path> paths(inputs.begin(), inputs.end());
  const lfw::WaveletFamily fam = lfw::family_from_files(paths);
  if (res < 0) res = std::max(fam.max_const_exp(), 1);
  std::uint64_t cells = 1;
  for (int i = 0; i < res; ++i) cells *= static_cast<std::uint64_t>(fam.field()->q());
  std::vector<lfw::GramianSlice> slices;
  slices.reserve(cells);
  for (std::uint64_t idx = 0; idx < cells; ++idx)
    slices.push_back(lfw::gramian_matrix(fam, {0, res, idx}, S));
  const fs::path dst = out.empty() ? out_path(g, "gramian.json") : fs::path(out);
  lfw::write_text_file(dst, lfw::gramian_to_json(fam.field(), slices).dump(2) + "\n");
  std::cout << dst.string() << "\n";
  return 0;
}

int cmd_frame_bounds(const GlobalOpts& g, const std::vector<std::string>& inputs, int S,
                     int res, int bessel_trials, int bessel_J, const std::string& out) {
  std::vector<fs::path> paths(inputs.begin(), inputs.end());
  const lfw::WaveletFamily fam = lfw::family_from_files(paths);
  const lfw::FrameBounds fb = lfw::frame_bounds_estimate(fam, S, res);
  Json j = lfw::frame_bounds_to_json(fam.field(), fb);
  if (bessel_trials > 0) {
    const double affine = lfw::bessel_bound_estimate(
        fam, lfw::SystemFlavor::Affine, bessel_trials, bessel_J, g.seed);
    const double quasi = lfw::bessel_bound_estimate(
        fam, lfw::SystemFlavor::QuasiAffine, bessel_trials, bessel_J, g.seed);
    j["bessel_estimate"] = Json{{"trials", bessel_trials},
                                {"scale_cap", bessel_J},
                                {"seed", g.seed},
                                {"affine", affine},
                                {"quasi_affine", quasi},
                                {"note", "Monte-Carlo lower estimates of the true bounds"}};
  }
  const fs::path dst = out.empty() ? out_path(g, "frame_bounds.json") : fs::path(out);
  lfw::write_text_file(dst, j.dump(2) + "\n");
  std::cout << dst.string() << "\n";
  return 0;
}

int cmd_mra(const GlobalOpts& g, const std::vector<std::string>& inputs,
            std::string prefix) {
  std::vector<fs::path> paths(inputs.begin(), inputs.end());
  const lfw::WaveletFamily fam = lfw::family_from_files(paths);
  if (prefix.empty()) prefix = "mra";

  const lfw::MraVerdict verdict = lfw::is_mra_wavelet(fam);
  if (!verdict.expected_member_count)
    std::cerr << "warning: family has " << fam.size() << " members, expected q-1 = "
              << fam.field()->q() - 1 << "\n";

  Json j{{"format_version", lfw::kFormatVersion},
         {"field", lfw::field_to_json(fam.field())},
         {"is_mra", verdict.is_mra},
         {"dimension_max_deviation", verdict.max_deviation}};

  bool self_checks_ok = verdict.is_mra;
  if (verdict.is_mra && verdict.expected_member_count) {
    const lfw::ScalingRecovery rec = lfw::construct_scaling(fam);
    const fs::path sp = out_path(g, prefix + "_scaling.json");
    lfw::write_function_file(sp, rec.phi_hat, Json{{"recovered", true}});
    std::cout << sp.string() << "\n";

    const lfw::ScalingFunctionChecks sc = lfw::scaling_checks(rec.phi_hat);
    const lfw::ModulationMatrix mm = lfw::modulation_worst(rec.phi_hat, fam);
    const lfw::ScaleRatioReport sr = lfw::scale_ratio_check(rec.phi_hat, fam);

    j["recovery"] = lfw::scaling_recovery_to_json(fam.field(), rec);
    j["scaling_checks"] = Json{
        {"shift_orthonormality_residual", sc.shift_orthonormality_residual},
        {"limit_modulus_residual", sc.limit_modulus_residual},
        {"stabilization_scale", sc.stabilization_scale},
        {"refinement_residual", sc.refinement_residual},
        {"refinement_undefined_cells", sc.refinement_undefined_cells}};
    j["modulation_unitarity_residual"] = mm.unitarity_residual;
    j["scale_ratio"] = Json{{"jmax", sr.jmax},
                            {"norm_identity_residual", sr.norm_identity_residual},
                            {"proportionality_residual", sr.proportionality_residual},
                            {"undefined_cells", sr.undefined_cells}};

    const double tol = g.tol;
    self_checks_ok = rec.shift_orthonormality_residual < tol &&
                     std::abs(rec.l2_norm - 1.0) < tol &&
                     sc.shift_orthonormality_residual < tol &&
                     sc.limit_modulus_residual < tol && sc.refinement_residual < tol &&
                     mm.unitarity_residual >= 0 && mm.unitarity_residual < 1e-8 &&
                     sr.norm_identity_residual < 1e-8 &&
                     sr.proportionality_residual < 1e-8;
    j["self_checks_pass"] = self_checks_ok;
  }

  const fs::path rp = out_path(g, prefix + "_report.json");
  lfw::write_text_file(rp, j.dump(2) + "\n");
  std::cout << rp.string() << "\n";
  return verdict.is_mra && self_checks_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fourier analysis and wavelet verification on local fields "
               "of positive characteristic"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--p", g.p, "field characteristic (prime <= 7)");
  app.add_option("--c", g.c, "extension degree (<= 3)");
  app.add_option("--reduction", g.reduction,
                 "reduction polynomial override, comma-separated low-to-high");
  app.add_option("--tol", g.tol, "pass threshold for residual checks");
  app.add_option("--seed", g.seed, "seed for randomized estimates");
  app.add_option("--out", g.out_dir, "output directory (default $LFWAVE_OUT_DIR or .)");
  app.add_option("--format", g.format, "report format: json or csv (csv adds tables)")
      ->check(CLI::IsMember({"json", "csv"}));

  // family
  auto* fam_cmd = app.add_subcommand("family", "generate fixture families");
  std::string kind = "haar", prefix;
  std::vector<std::string> fam_inputs;
  fam_cmd->add_option("--kind", kind, "haar | annulus | file");
  fam_cmd->add_option("--prefix", prefix, "output file prefix");
  fam_cmd->add_option("--in", fam_inputs, "input files for --kind file");

  // transform
  auto* tr_cmd = app.add_subcommand("transform", "Fourier transform a function file");
  std::string tr_in, tr_out;
  bool tr_naive = false, tr_fast = false;
  tr_cmd->add_option("--in", tr_in, "input function file")->required();
  tr_cmd->add_option("--output", tr_out, "output function file")->required();
  tr_cmd->add_flag("--naive", tr_naive, "use the serial reference path");
  tr_cmd->add_flag("--fast", tr_fast, "use the staged kernel (default)");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "run the characterization battery");
  std::vector<std::string> ver_inputs;
  int ver_jmax = -1, ver_res = -1;
  std::uint64_t ver_smax = 0;
  std::string ver_out;
  ver_cmd->add_option("files", ver_inputs, "family member function files")->required();
  ver_cmd->add_option("--jmax", ver_jmax, "orthonormality scale cap");
  ver_cmd->add_option("--smax", ver_smax, "shift cap for the correlation check");
  ver_cmd->add_option("--res", ver_res, "cell resolution override");
  ver_cmd->add_option("--report", ver_out, "report path (default verdict.json)");

  // dimension
  auto* dim_cmd = app.add_subcommand("dimension", "per-cell dimension function table");
  std::vector<std::string> dim_inputs;
  int dim_res = -1;
  std::string dim_out;
  dim_cmd->add_option("files", dim_inputs, "family member function files")->required();
  dim_cmd->add_option("--res", dim_res, "cell resolution override");
  dim_cmd->add_option("--output", dim_out, "CSV path (default dimension.csv)");

  // gramian
  auto* gr_cmd = app.add_subcommand("gramian", "truncated dual Gramian dump");
  std::vector<std::string> gr_inputs;
  int gr_S = 3, gr_res = -1;
  std::string gr_out;
  gr_cmd->add_option("files", gr_inputs, "family member function files")->required();
  gr_cmd->add_option("--S", gr_S, "truncation exponent (matrix dim q^S)");
  gr_cmd->add_option("--res", gr_res, "cell resolution override");
  gr_cmd->add_option("--output", gr_out, "JSON path (default gramian.json)");

  // frame-bounds
  auto* fb_cmd = app.add_subcommand("frame-bounds", "spectral frame bound estimates");
  std::vector<std::string> fb_inputs;
  int fb_S = 3, fb_res = -1, fb_trials = 0, fb_J = 4;
  std::string fb_out;
  fb_cmd->add_option("files", fb_inputs, "family member function files")->required();
  fb_cmd->add_option("--S", fb_S, "truncation exponent");
  fb_cmd->add_option("--res", fb_res, "cell resolution override");
  fb_cmd->add_option("--bessel-trials", fb_trials,
                     "also run Monte-Carlo Bessel estimates with this many trials");
  fb_cmd->add_option("--bessel-J", fb_J, "scale/translation cap for the estimates");
  fb_cmd->add_option("--output", fb_out, "JSON path (default frame_bounds.json)");

  // mra
  auto* mra_cmd = app.add_subcommand("mra", "dimension gate + scaling recovery");
  std::vector<std::string> mra_inputs;
  std::string mra_prefix;
  mra_cmd->add_option("files", mra_inputs, "family member function files")->required();
  mra_cmd->add_option("--prefix", mra_prefix, "output prefix (default mra)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    if (fam_cmd->parsed()) return cmd_family(g, kind, fam_inputs, prefix);
    if (tr_cmd->parsed()) return cmd_transform(tr_in, tr_out, tr_naive && !tr_fast);
    if (ver_cmd->parsed())
      return cmd_verify(g, ver_inputs, ver_jmax, ver_smax, ver_res, ver_out);
    if (dim_cmd->parsed()) return cmd_dimension(g, dim_inputs, dim_res, dim_out);
    if (gr_cmd->parsed()) return cmd_gramian(g, gr_inputs, gr_S, gr_res, gr_out);
    if (fb_cmd->parsed())
      return cmd_frame_bounds(g, fb_inputs, fb_S, fb_res, fb_trials, fb_J, fb_out);
    if (mra_cmd->parsed()) return cmd_mra(g, mra_inputs, mra_prefix);
  } catch (const lfw::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const lfw::CertificateError& e) {
    std::cerr << "certificate error: " << e.what() << "\n";
    return 3;
  } catch (const lfw::ContractError& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return 3;
  } catch (const lfw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
