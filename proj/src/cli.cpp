#include "limitmult/cli.hpp"

#include "limitmult/congruence.hpp"
#include "limitmult/cusp_dimensions.hpp"
#include "limitmult/errors.hpp"
#include "limitmult/plancherel.hpp"
#include "limitmult/serialization.hpp"
#include "limitmult/tower.hpp"
#include "limitmult/vn_dimension.hpp"
#include "limitmult/window_spec.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace limitmult {

namespace {

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw InvalidInputError("unknown format '" + text + "' (expected text, csv or json)");
}

std::string default_format() {
  const char* env = std::getenv("LIMITMULT_FORMAT");
  return env ? env : "text";
}

std::vector<Int> parse_tower(const std::string& text) {
  std::vector<Int> levels;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    levels.push_back(parse_integer(item));
  }
  if (levels.empty()) throw InvalidInputError("tower must contain at least one level");
  return levels;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

// CSV cells for an ExactScalar: num, den, pi_exp.
std::string csv_exact(const ExactScalar& x) {
  return numerator(x.coeff()).str() + "," + denominator(x.coeff()).str() + "," +
         std::to_string(x.pi_exp());
}

// CSV cells for a MeasureValue: kind,num,den,pi_exp,value,err.
std::string csv_measure(const MeasureValue& m) {
  if (m.is_exact()) return "exact," + csv_exact(m.exact_value()) + ",,";
  ApproxValue v = m.to_approx();
  return "approx,,,," + format_double(v.value) + "," + format_double(v.err_bound);
}

struct CommonFlags {
  std::string format = default_format();
};

void add_format_flag(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format: text, csv or json")
      ->capture_default_str();
}

// ---- subcommand runners ----------------------------------------------

void run_index(std::ostream& out, Format format, const std::string& ambient_text,
               const std::string& level_text) {
  LatticeDescriptor lat = lattice(parse_ambient(ambient_text), parse_integer(level_text));
  switch (format) {
    case Format::Json: {
      Json doc = to_json(lat);
      doc["command"] = "index";
      emit_json(out, doc);
      break;
    }
    case Format::Csv:
      out << "level,ambient,index,covol_num,covol_den,covol_piexp\n"
          << lat.level.value.str() << "," << to_string(lat.ambient) << ","
          << lat.index.str() << "," << csv_exact(lat.covolume) << "\n";
      break;
    case Format::Text:
      out << "level     " << lat.level.value.str() << "\n"
          << "ambient   " << to_string(lat.ambient) << "\n"
          << "index     " << lat.index.str() << "\n"
          << "covolume  " << to_string(lat.covolume) << "\n";
      break;
  }
}

void run_curve(std::ostream& out, Format format, const std::string& level_text) {
  CurveInvariants inv = curve_invariants(parse_integer(level_text));
  switch (format) {
    case Format::Json: {
      Json doc = to_json(inv);
      doc["command"] = "curve";
      emit_json(out, doc);
      break;
    }
    case Format::Csv:
      out << "level,psl_index,cusps,genus,elliptic2,elliptic3\n"
          << inv.level.value.str() << "," << inv.psl_index.str() << ","
          << inv.num_cusps.str() << "," << inv.genus.str() << "," << inv.elliptic2
          << "," << inv.elliptic3 << "\n";
      break;
    case Format::Text:
      out << "level      " << inv.level.value.str() << "\n"
          << "psl_index  " << inv.psl_index.str() << "\n"
          << "cusps      " << inv.num_cusps.str() << "\n"
          << "genus      " << inv.genus.str() << "\n"
          << "elliptic2  " << inv.elliptic2 << "\n"
          << "elliptic3  " << inv.elliptic3 << "\n";
      break;
  }
}

int run_tower_validate(std::ostream& out, Format format, const std::string& tower_text) {
  std::vector<Int> levels = parse_tower(tower_text);
  TowerReport report = validate_tower(levels);
  switch (format) {
    case Format::Json: {
      Json doc;
      doc["command"] = "tower-validate";
      Json json_levels = Json::array();
      for (const Int& n : levels) json_levels.push_back(n.str());
      doc["levels"] = json_levels;
      doc["valid"] = report.valid;
      if (!report.valid) {
        doc["first_violation"] = report.first_violation;
        doc["reason"] = report.reason;
      }
      emit_json(out, doc);
      break;
    }
    case Format::Csv:
      out << "valid,first_violation,reason\n";
      if (report.valid) {
        out << "true,,\n";
      } else {
        out << "false," << report.first_violation << "," << report.reason << "\n";
      }
      break;
    case Format::Text:
      if (report.valid) {
        out << "valid\n";
      } else {
        out << "invalid at position " << report.first_violation << ": " << report.reason
            << "\n";
      }
      break;
  }
  return report.valid ? 0 : 2;
}

int run_cusp_dim(std::ostream& out, Format format, const std::string& level_text,
                 int weight, const std::string& method) {
  WeightLevel wl = weight_level(weight, parse_integer(level_text));
  const bool closed_in_regime = wl.level.value > 2 && wl.weight >= 3;
  static const char* kRegimeNote = "closed-form route requires N > 2 and k >= 3";

  std::optional<Rational> closed;
  std::optional<Rational> geometric;
  std::string note;
  if (method == "closed") {
    closed = dim_cusp_closed(wl);  // throws UnsupportedRegime outside N>2, k>=3
  } else if (method == "geometric") {
    geometric = dim_cusp_geometric(wl);
  } else if (method == "both") {
    geometric = dim_cusp_geometric(wl);
    if (closed_in_regime) {
      closed = dim_cusp_closed(wl);
      if (*closed != *geometric) {
        throw Error("dimension routes disagree: closed " + to_string(*closed) +
                    " vs geometric " + to_string(*geometric));
      }
    } else {
      note = kRegimeNote;
    }
  } else {
    throw InvalidInputError("unknown method '" + method +
                            "' (expected closed, geometric or both)");
  }

  switch (format) {
    case Format::Json: {
      Json doc;
      doc["command"] = "cusp-dim";
      doc["level"] = wl.level.value.str();
      doc["weight"] = weight;
      doc["method"] = method;
      doc["closed"] = closed ? Json(to_string(*closed)) : Json(nullptr);
      doc["geometric"] = geometric ? Json(to_string(*geometric)) : Json(nullptr);
      if (!note.empty()) doc["note"] = note;
      emit_json(out, doc);
      break;
    }
    case Format::Csv:
      out << "level,weight,closed,geometric\n"
          << wl.level.value.str() << "," << weight << ","
          << (closed ? to_string(*closed) : "") << ","
          << (geometric ? to_string(*geometric) : "") << "\n";
      break;
    case Format::Text:
      if (closed) out << "closed     " << to_string(*closed) << "\n";
      if (geometric) out << "geometric  " << to_string(*geometric) << "\n";
      if (!note.empty()) out << "note: " << note << "\n";
      break;
  }
  return 0;
}

void emit_measure(std::ostream& out, Format format, const char* command,
                  const char* value_key, Json context, const MeasureValue& value) {
  switch (format) {
    case Format::Json: {
      Json doc = std::move(context);
      doc["command"] = command;
      doc[value_key] = to_json(value);
      emit_json(out, doc);
      break;
    }
    case Format::Csv:
      out << "kind,num,den,pi_exp,value,err\n" << csv_measure(value) << "\n";
      break;
    case Format::Text:
      out << value_key << " " << to_string(value) << "\n";
      break;
  }
}

void run_plancherel(std::ostream& out, Format format, const std::string& ambient_text,
                    const std::string& window_text, double quad_tol) {
  Ambient ambient = parse_ambient(ambient_text);
  SpectralWindow window = parse_window_spec(window_text);
  PlancherelModel model = PlancherelModel::standard(ambient, quad_tol);
  MeasureValue measure = plancherel_measure(model, window);
  Json context{{"ambient", to_string(ambient)}, {"window", to_json(window)}};
  emit_measure(out, format, "plancherel", "measure", std::move(context), measure);
}

void run_vndim(std::ostream& out, Format format, const std::string& ambient_text,
               const std::string& level_text, const std::string& window_text,
               const std::string& scale_text, double quad_tol) {
  Ambient ambient = parse_ambient(ambient_text);
  LatticeDescriptor lat = lattice(ambient, parse_integer(level_text));
  SpectralWindow window = parse_window_spec(window_text);
  PlancherelModel model = PlancherelModel::standard(ambient, quad_tol);

  MeasureValue dim = scale_text.empty()
                         ? vn_dimension(lat, model, window)
                         : vn_dimension_scaled(lat, model, window,
                                               HaarScaling{parse_rational(scale_text)});
  Json context{{"ambient", to_string(ambient)},
               {"level", lat.level.value.str()},
               {"window", to_json(window)},
               {"scale", scale_text.empty() ? Json(nullptr) : Json(scale_text)}};
  emit_measure(out, format, "vndim", "dimension", std::move(context), dim);
}

void run_ratio(std::ostream& out, Format format, int weight,
               const std::string& tower_text, const std::string& window_text) {
  SpectralWindow window;
  if (!window_text.empty()) {
    window = parse_window_spec(window_text);
  } else {
    if (weight == 0) throw InvalidInputError("ratio needs --weight or --window");
    window.add_atom({weight, Sign::Plus});
  }
  std::vector<RatioRow> rows = ratio_table(parse_tower(tower_text), window);

  switch (format) {
    case Format::Json: {
      Json doc;
      doc["command"] = "ratio";
      doc["window"] = to_json(window);
      Json json_rows = Json::array();
      for (const RatioRow& row : rows) json_rows.push_back(to_json(row));
      doc["rows"] = json_rows;
      emit_json(out, doc);
      break;
    }
    case Format::Csv:
      out << "level,index,multiplicity,vndim_num,vndim_den,ratio_num,ratio_den,"
             "gap_num,gap_den\n";
      for (const RatioRow& row : rows) {
        out << row.level.str() << "," << row.index.str() << ","
            << row.multiplicity.str() << "," << numerator(row.vn_dim).str() << ","
            << denominator(row.vn_dim).str() << "," << numerator(row.ratio).str()
            << "," << denominator(row.ratio).str() << "," << numerator(row.gap).str()
            << "," << denominator(row.gap).str() << "\n";
      }
      break;
    case Format::Text:
      out << "level  index  multiplicity  vndim  ratio  gap\n";
      for (const RatioRow& row : rows) {
        out << row.level.str() << "  " << row.index.str() << "  "
            << row.multiplicity.str() << "  " << to_string(row.vn_dim) << "  "
            << to_string(row.ratio) << "  " << to_string(row.gap) << "\n";
      }
      break;
  }
}

void run_threshold(std::ostream& out, Format format, int weight,
                   const std::string& eps_text) {
  Rational eps = parse_rational(eps_text);
  Int level = threshold_level(weight, eps);
  switch (format) {
    case Format::Json: {
      Json doc;
      doc["command"] = "threshold";
      doc["weight"] = weight;
      doc["epsilon"] = to_string(eps);
      doc["level"] = level.str();
      emit_json(out, doc);
      break;
    }
    case Format::Csv:
      out << "weight,epsilon,level\n"
          << weight << "," << to_string(eps) << "," << level.str() << "\n";
      break;
    case Format::Text:
      out << level.str() << "\n";
      break;
  }
}

void run_numeas(std::ostream& out, Format format, const std::string& tower_text,
                const std::string& window_text) {
  SpectralWindow window = parse_window_spec(window_text);
  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);
  std::vector<EmpiricalMeasureRow> rows =
      empirical_measure_table(parse_tower(tower_text), window, model);

  switch (format) {
    case Format::Json: {
      Json doc;
      doc["command"] = "numeas";
      doc["window"] = to_json(window);
      Json json_rows = Json::array();
      for (const EmpiricalMeasureRow& row : rows) json_rows.push_back(to_json(row));
      doc["rows"] = json_rows;
      emit_json(out, doc);
      break;
    }
    case Format::Csv:
      out << "level,index,multiplicity,nuemp_num,nuemp_den,nuemp_piexp,"
             "nulimit_num,nulimit_den,nulimit_piexp,gap_num,gap_den,gap_piexp\n";
      for (const EmpiricalMeasureRow& row : rows) {
        out << row.level.str() << "," << row.index.str() << ","
            << row.multiplicity.str() << "," << csv_exact(row.empirical) << ","
            << csv_exact(row.limit) << "," << csv_exact(row.gap.exact_value()) << "\n";
      }
      break;
    case Format::Text:
      out << "level  multiplicity  empirical  limit  gap\n";
      for (const EmpiricalMeasureRow& row : rows) {
        out << row.level.str() << "  " << row.multiplicity.str() << "  "
            << to_string(row.empirical) << "  " << to_string(row.limit) << "  "
            << to_string(row.gap) << "\n";
      }
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiplicities, von Neumann dimensions and limit ratios "
               "for congruence subgroups of SL(2,R)"};
  app.require_subcommand(1);

  // index
  CommonFlags index_flags;
  std::string index_ambient = "sl2";
  std::string index_level;
  CLI::App* index_cmd =
      app.add_subcommand("index", "Index and covolume of Gamma(N)");
  index_cmd->add_option("--level", index_level, "Level N >= 1")->required();
  index_cmd->add_option("--ambient", index_ambient, "sl2 or psl2")
      ->capture_default_str();
  add_format_flag(index_cmd, index_flags);

  // curve
  CommonFlags curve_flags;
  std::string curve_level;
  CLI::App* curve_cmd =
      app.add_subcommand("curve", "Genus and cusp data of the modular curve X(N)");
  curve_cmd->add_option("--level", curve_level, "Level N >= 1")->required();
  add_format_flag(curve_cmd, curve_flags);

  // tower-validate
  CommonFlags tv_flags;
  std::string tv_tower;
  CLI::App* tv_cmd = app.add_subcommand(
      "tower-validate", "Check a level chain for nesting (divisibility)");
  tv_cmd->add_option("--tower", tv_tower, "Comma-separated levels, e.g. 3,6,12")
      ->required();
  add_format_flag(tv_cmd, tv_flags);

  // cusp-dim
  CommonFlags cd_flags;
  std::string cd_level;
  std::string cd_method = "both";
  int cd_weight = 0;
  CLI::App* cd_cmd =
      app.add_subcommand("cusp-dim", "dim S_k(Gamma(N)) by one or both routes");
  cd_cmd->add_option("--level", cd_level, "Level N >= 1")->required();
  cd_cmd->add_option("--weight", cd_weight, "Weight k >= 2")->required();
  cd_cmd->add_option("--method", cd_method, "closed, geometric or both")
      ->capture_default_str();
  add_format_flag(cd_cmd, cd_flags);

  // plancherel
  CommonFlags pl_flags;
  std::string pl_ambient = "sl2";
  std::string pl_window;
  double pl_tol = 1e-10;
  CLI::App* pl_cmd =
      app.add_subcommand("plancherel", "Plancherel measure of a spectral window");
  pl_cmd->add_option("--window", pl_window, "Window spec, e.g. 'DS(12)+PS(even,0..2)'")
      ->required();
  pl_cmd->add_option("--ambient", pl_ambient, "sl2 or psl2")->capture_default_str();
  pl_cmd->add_option("--quad-tol", pl_tol, "Quadrature tolerance")
      ->capture_default_str();
  add_format_flag(pl_cmd, pl_flags);

  // vndim
  CommonFlags vn_flags;
  std::string vn_ambient = "sl2";
  std::string vn_level;
  std::string vn_window;
  std::string vn_scale;
  double vn_tol = 1e-10;
  CLI::App* vn_cmd = app.add_subcommand(
      "vndim", "von Neumann dimension of a window module over L(Gamma(N))");
  vn_cmd->add_option("--level", vn_level, "Level N >= 1")->required();
  vn_cmd->add_option("--window", vn_window, "Window spec")->required();
  vn_cmd->add_option("--ambient", vn_ambient, "sl2 or psl2")->capture_default_str();
  vn_cmd->add_option("--scale", vn_scale, "Haar scaling factor p/q (sanity check)");
  vn_cmd->add_option("--quad-tol", vn_tol, "Quadrature tolerance")
      ->capture_default_str();
  add_format_flag(vn_cmd, vn_flags);

  // ratio
  CommonFlags ratio_flags;
  int ratio_weight = 0;
  std::string ratio_tower;
  std::string ratio_window;
  CLI::App* ratio_cmd = app.add_subcommand(
      "ratio", "multiplicity / vN-dimension table along a tower");
  ratio_cmd->add_option("--weight", ratio_weight, "Weight k >= 3");
  ratio_cmd->add_option("--tower", ratio_tower, "Comma-separated levels")->required();
  ratio_cmd->add_option("--window", ratio_window,
                        "Atomic window spec (defaults to DS(weight))");
  add_format_flag(ratio_cmd, ratio_flags);

  // threshold
  CommonFlags th_flags;
  int th_weight = 0;
  std::string th_eps;
  CLI::App* th_cmd = app.add_subcommand(
      "threshold", "Smallest level with ratio gap below epsilon");
  th_cmd->add_option("--weight", th_weight, "Weight k >= 3")->required();
  th_cmd->add_option("--epsilon", th_eps, "Positive rational p/q")->required();
  add_format_flag(th_cmd, th_flags);

  // numeas
  CommonFlags nm_flags;
  std::string nm_tower;
  std::string nm_window;
  CLI::App* nm_cmd = app.add_subcommand(
      "numeas", "Empirical spectral measure vs Plancherel limit along a tower");
  nm_cmd->add_option("--tower", nm_tower, "Comma-separated levels")->required();
  nm_cmd->add_option("--window", nm_window, "Atomic window spec")->required();
  add_format_flag(nm_cmd, nm_flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (index_cmd->parsed()) {
      run_index(out, parse_format(index_flags.format), index_ambient, index_level);
    } else if (curve_cmd->parsed()) {
      run_curve(out, parse_format(curve_flags.format), curve_level);
    } else if (tv_cmd->parsed()) {
      return run_tower_validate(out, parse_format(tv_flags.format), tv_tower);
    } else if (cd_cmd->parsed()) {
      return run_cusp_dim(out, parse_format(cd_flags.format), cd_level, cd_weight,
                          cd_method);
    } else if (pl_cmd->parsed()) {
      run_plancherel(out, parse_format(pl_flags.format), pl_ambient, pl_window, pl_tol);
    } else if (vn_cmd->parsed()) {
      run_vndim(out, parse_format(vn_flags.format), vn_ambient, vn_level, vn_window,
                vn_scale, vn_tol);
    } else if (ratio_cmd->parsed()) {
      run_ratio(out, parse_format(ratio_flags.format), ratio_weight, ratio_tower,
                ratio_window);
    } else if (th_cmd->parsed()) {
      run_threshold(out, parse_format(th_flags.format), th_weight, th_eps);
    } else if (nm_cmd->parsed()) {
      run_numeas(out, parse_format(nm_flags.format), nm_tower, nm_window);
    }
  } catch (const UnsupportedRegimeError& e) {
    err << "unsupported regime: " << e.what() << "\n";
    return 3;
  } catch (const InvalidInputError& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace limitmult
