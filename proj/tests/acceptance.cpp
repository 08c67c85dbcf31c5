// Acceptance suite: runs every contract-level criterion at its stated
// tolerance and prints one PASS/FAIL line per criterion. The CLI binary
// path must be passed as argv[1] (criterion 10 executes it).

#include "limitmult/cli.hpp"
#include "limitmult/congruence.hpp"
#include "limitmult/cusp_dimensions.hpp"
#include "limitmult/errors.hpp"
#include "limitmult/plancherel.hpp"
#include "limitmult/serialization.hpp"
#include "limitmult/tower.hpp"
#include "limitmult/vn_dimension.hpp"
#include "limitmult/window_spec.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace limitmult;

namespace {

std::string g_cli_path;

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

SpectralWindow atom_window(int weight, Sign sign = Sign::Plus) {
  SpectralWindow w;
  w.add_atom({weight, sign});
  return w;
}

// --- criterion 1: closed formula == valence-formula route -----------------

void check_dimension_routes() {
  for (int n = 3; n <= 60; ++n) {
    for (int k = 3; k <= 24; ++k) {
      WeightLevel wl = weight_level(k, n);
      Rational closed = dim_cusp_closed(wl);
      Rational geometric = dim_cusp_geometric(wl);
      require(closed == geometric,
              "route mismatch at N=" + std::to_string(n) + " k=" + std::to_string(k) +
                  ": " + to_string(closed) + " vs " + to_string(geometric));
    }
  }
  require(dim_cusp_closed(weight_level(3, 7)) == Rational(16),
          "dim S_3(Gamma(7)) != 16");
  require(dim_cusp_closed(weight_level(12, 3)) == Rational(9),
          "dim S_12(Gamma(3)) != 9");
  require(dim_cusp_closed(weight_level(4, 4)) == Rational(3),
          "dim S_4(Gamma(4)) != 3");
}

// --- criterion 2: index vs brute-force |SL(2,Z/N)| -------------------------

void check_index_oracle() {
  for (int n = 1; n <= 30; ++n) {
    std::int64_t count = 0;
    if (n == 1) {
      count = 1;
    } else {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) {
            for (int d = 0; d < n; ++d) {
              if (((a * d - b * c) % n + n) % n == 1) ++count;
            }
          }
        }
      }
    }
    Int formula = lattice(Ambient::SL2R, n).index;
    require(formula == Int(count), "index mismatch at N=" + std::to_string(n) + ": " +
                                       formula.str() + " vs brute " +
                                       std::to_string(count));
  }
}

// --- criterion 3: vN dimension formula and GHJ anchors ---------------------

void check_vn_formula() {
  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);
  for (int n = 3; n <= 60; ++n) {
    LatticeDescriptor lat = lattice(Ambient::SL2R, n);
    for (int k = 2; k <= 24; ++k) {
      MeasureValue dim = vn_dimension(lat, model, atom_window(k));
      Rational expected = Rational(k - 1, 24) * Rational(lat.index);
      require(dim.is_exact() && dim.exact_value() == ExactScalar(expected, 0),
              "vn dimension mismatch at N=" + std::to_string(n) +
                  " k=" + std::to_string(k));
    }
  }
  MeasureValue psl = vn_dimension(lattice(Ambient::PSL2R, 1),
                                  PlancherelModel::standard(Ambient::PSL2R),
                                  atom_window(12));
  require(psl.exact_value() == ExactScalar(Rational(11, 12), 0),
          "dim over L(PSL(2,Z)) at k=12 is not 11/12");
  MeasureValue sl = vn_dimension(lattice(Ambient::SL2R, 1), model, atom_window(12));
  require(sl.exact_value() == ExactScalar(Rational(11, 24), 0),
          "dim over L(SL(2,Z)) at k=12 is not 11/24");
}

// --- criterion 4: exact ratio, gap law, threshold --------------------------

void check_ratio_law() {
  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);
  for (int n = 3; n <= 60; ++n) {
    LatticeDescriptor lat = lattice(Ambient::SL2R, n);
    for (int k = 3; k <= 24; ++k) {
      Rational formula = ratio_exact(n, k);
      Rational expected =
          (Rational(k - 1) - Rational(6, n)) / Rational(k - 1);
      require(formula == expected, "ratio_exact formula mismatch");

      Int m = multiplicity_atom(weight_level(k, n));
      MeasureValue dim = vn_dimension(lat, model, atom_window(k));
      require(Rational(m) / dim.exact_value().coeff() == formula,
              "ratio quotient mismatch at N=" + std::to_string(n) +
                  " k=" + std::to_string(k));
      require(Rational(1) - formula == Rational(6, Int(n) * (k - 1)),
              "gap law mismatch");
    }
  }
  require(threshold_level(12, Rational(1, 1000)) == 546,
          "threshold_level(12, 1/1000) != 546");
}

// --- criterion 5: gaps strictly decrease and end below 1e-2 ----------------

void check_tower_decay() {
  const std::vector<std::vector<Int>> towers = {{3, 6, 12, 24, 48, 96}, {5, 25, 125}};
  for (const auto& tower : towers) {
    for (int k = 12; k <= 24; ++k) {
      std::vector<RatioRow> rows = ratio_table(tower, atom_window(k));
      for (std::size_t i = 1; i < rows.size(); ++i) {
        require(rows[i].gap < rows[i - 1].gap,
                "gap not strictly decreasing at k=" + std::to_string(k));
      }
      require(rows.back().gap < Rational(1, 100),
              "final gap not below 1/100 at k=" + std::to_string(k));
    }
  }
}

// --- criterion 6: empirical-measure gap (3/(2N))/pi, k-independent ---------

void check_empirical_gap() {
  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);
  const std::vector<Int> tower = {3, 6, 12, 24, 48, 96};
  for (int k = 3; k <= 24; ++k) {
    std::vector<EmpiricalMeasureRow> rows =
        empirical_measure_table(tower, atom_window(k), model);
    Rational previous_gap;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const EmpiricalMeasureRow& row = rows[i];
      require(row.gap.is_exact(), "empirical gap is not exact");
      require(row.gap.exact_value() == ExactScalar(Rational(3, 2 * row.level), -1),
              "empirical gap != 3/(2N pi) at N=" + row.level.str() +
                  " k=" + std::to_string(k));
      if (i > 0) {
        require(row.gap.exact_value().coeff() < previous_gap,
                "empirical gap not decreasing along the tower");
      }
      previous_gap = row.gap.exact_value().coeff();
    }
  }
}

// --- criterion 7: Haar-scaling invariance ----------------------------------

void check_haar_invariance() {
  std::mt19937_64 rng(0xacce55);
  std::uniform_int_distribution<int> num(1, 400);
  std::uniform_int_distribution<int> den(1, 400);
  std::uniform_int_distribution<int> weight(2, 24);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> level(1, 20);

  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);
  for (int trial = 0; trial < 100; ++trial) {
    LatticeDescriptor lat = lattice(Ambient::SL2R, level(rng));
    SpectralWindow window;
    int atoms = count(rng);
    for (int i = 0; i < atoms; ++i) {
      window.add_atom({weight(rng), sign(rng) == 0 ? Sign::Plus : Sign::Minus});
    }
    HaarScaling s{Rational(num(rng), den(rng))};
    MeasureValue plain = vn_dimension(lat, model, window);
    MeasureValue scaled = vn_dimension_scaled(lat, model, window, s);
    require(plain.is_exact() && scaled.is_exact() &&
                plain.exact_value() == scaled.exact_value(),
            "scaled dimension differs at trial " + std::to_string(trial));
  }
}

// --- criterion 8: additivity over partitions -------------------------------

void check_additivity() {
  std::mt19937_64 rng(0xadd1717);
  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);
  LatticeDescriptor lat = lattice(Ambient::SL2R, 6);

  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> parts_count(1, 5);
    int parts_n = parts_count(rng);
    std::uniform_int_distribution<int> which(0, parts_n - 1);
    std::vector<SpectralWindow> parts(parts_n);
    for (int k = 3; k <= 20; ++k) {
      parts[which(rng)].add_atom({k, Sign::Plus});
    }
    require(vn_additivity_check(lat, model, parts),
            "atomic additivity failed at trial " + std::to_string(trial));

    // Exact cross-check of the same partition, done directly.
    MeasureValue whole = vn_dimension(lat, model, [&] {
      SpectralWindow all;
      for (int k = 3; k <= 20; ++k) all.add_atom({k, Sign::Plus});
      return all;
    }());
    MeasureValue sum = MeasureValue::exact(ExactScalar());
    for (const SpectralWindow& part : parts) {
      sum = sum + vn_dimension(lat, model, part);
    }
    require(whole.exact_value() == sum.exact_value(),
            "partition sum differs from whole at trial " + std::to_string(trial));

    // One continuous interval added: additivity within summed bounds.
    std::uniform_real_distribution<double> cut(0.5, 3.5);
    double mid = cut(rng);
    std::vector<SpectralWindow> with_interval = parts;
    with_interval[0].add_interval({SeriesType::Even, 0.0, mid});
    with_interval.push_back({});
    with_interval.back().add_interval({SeriesType::Even, mid, 4.0});
    require(vn_additivity_check(lat, model, with_interval),
            "mixed additivity failed at trial " + std::to_string(trial));
  }
}

// --- criterion 9: quadrature stability across tolerances -------------------

void check_quadrature_tolerances() {
  std::mt19937_64 rng(0x9ad7a7);
  std::uniform_real_distribution<double> lo(0.0, 5.0);
  std::uniform_real_distribution<double> len(0.2, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    double a = lo(rng);
    double b = a + len(rng);
    SpectralWindow window;
    window.add_interval({SeriesType::Even, a, b});
    MeasureValue coarse =
        plancherel_measure(PlancherelModel::standard(Ambient::SL2R, 1e-6), window);
    MeasureValue fine =
        plancherel_measure(PlancherelModel::standard(Ambient::SL2R, 1e-10), window);
    double diff = std::abs(coarse.to_approx().value - fine.to_approx().value);
    require(diff <= 1e-6, "tolerance drift " + std::to_string(diff) + " on [" +
                              std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

// --- criterion 10: CLI determinism and JSON round-trip ---------------------

std::string run_binary(const std::string& args) {
  std::string command = "'" + g_cli_path + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  require(pipe != nullptr, "failed to launch " + command);
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    output.append(buffer, got);
  }
  int status = pclose(pipe);
  require(status == 0, "nonzero exit from: " + command);
  return output;
}

void check_cli_roundtrip() {
  require(!g_cli_path.empty(), "CLI binary path missing (pass it as argv[1])");

  const std::vector<std::string> invocations = {
      "index --level 12 --format json",
      "index --level 12 --ambient psl2 --format json",
      "curve --level 7 --format json",
      "tower-validate --tower 3,6,12 --format json",
      "cusp-dim --level 7 --weight 3 --format json",
      "plancherel --window 'DS(12)' --format json",
      "plancherel --window 'DS(3..6:all) + PS(even,0..2)' --format json",
      "vndim --level 3 --window 'DS(4)' --format json",
      "vndim --ambient psl2 --level 1 --window 'DS(12)' --scale 7/2 --format json",
      "ratio --weight 12 --tower 3,6,12,24 --format json",
      "ratio --weight 12 --tower 3,6,12,24 --format csv",
      "threshold --weight 12 --epsilon 1/1000 --format json",
      "numeas --tower 3,6,12 --window 'DS(12)' --format json",
  };
  for (const std::string& args : invocations) {
    std::string first = run_binary(args);
    std::string second = run_binary(args);
    require(!first.empty(), "empty output from: " + args);
    require(first == second, "nondeterministic output for: " + args);
  }

  // Re-parse emitted JSON and re-evaluate against the library.
  {
    Json doc = Json::parse(run_binary("index --level 12 --format json"));
    LatticeDescriptor lat = lattice(Ambient::SL2R, 12);
    require(doc.at("index").get<std::string>() == lat.index.str(), "index mismatch");
    require(exact_scalar_from_json(doc.at("covolume")) == lat.covolume,
            "covolume round-trip mismatch");
  }
  {
    Json doc = Json::parse(run_binary("curve --level 7 --format json"));
    CurveInvariants inv = curve_invariants(7);
    require(doc.at("genus").get<std::string>() == inv.genus.str(), "genus mismatch");
    require(doc.at("cusps").get<std::string>() == inv.num_cusps.str(), "cusp mismatch");
  }
  {
    Json doc = Json::parse(run_binary("tower-validate --tower 3,6,12 --format json"));
    require(doc.at("valid").get<bool>() == validate_tower({3, 6, 12}).valid,
            "tower verdict mismatch");
  }
  {
    Json doc = Json::parse(run_binary("cusp-dim --level 7 --weight 3 --format json"));
    require(doc.at("closed").get<std::string>() ==
                to_string(dim_cusp_closed(weight_level(3, 7))),
            "closed dim mismatch");
    require(doc.at("geometric").get<std::string>() ==
                to_string(dim_cusp_geometric(weight_level(3, 7))),
            "geometric dim mismatch");
  }
  {
    Json doc = Json::parse(run_binary("plancherel --window 'DS(12)' --format json"));
    MeasureValue nu = plancherel_measure(PlancherelModel::standard(Ambient::SL2R),
                                         parse_window_spec("DS(12)"));
    require(measure_value_from_json(doc.at("measure")).exact_value() ==
                nu.exact_value(),
            "plancherel round-trip mismatch");
  }
  {
    Json doc = Json::parse(
        run_binary("plancherel --window 'DS(3..6:all) + PS(even,0..2)' --format json"));
    MeasureValue nu =
        plancherel_measure(PlancherelModel::standard(Ambient::SL2R),
                           parse_window_spec("DS(3..6:all) + PS(even,0..2)"));
    MeasureValue parsed = measure_value_from_json(doc.at("measure"));
    require(!parsed.is_exact() && !nu.is_exact(), "expected approximate measures");
    require(parsed.to_approx().value == nu.to_approx().value,
            "approximate value failed bit-exact round-trip");
  }
  {
    Json doc = Json::parse(run_binary(
        "vndim --ambient psl2 --level 1 --window 'DS(12)' --scale 7/2 --format json"));
    require(measure_value_from_json(doc.at("dimension")).exact_value() ==
                ExactScalar(Rational(11, 12), 0),
            "vndim round-trip mismatch");
  }
  {
    Json doc = Json::parse(run_binary("ratio --weight 12 --tower 3,6,12,24 --format json"));
    std::vector<RatioRow> rows = ratio_table({3, 6, 12, 24}, atom_window(12));
    const Json& json_rows = doc.at("rows");
    require(json_rows.size() == rows.size(), "ratio row count mismatch");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(parse_rational(json_rows[i].at("ratio").get<std::string>()) ==
                  rows[i].ratio,
              "ratio row mismatch at " + std::to_string(i));
      require(parse_rational(json_rows[i].at("gap").get<std::string>()) == rows[i].gap,
              "gap row mismatch at " + std::to_string(i));
    }
  }
  {
    Json doc = Json::parse(run_binary("threshold --weight 12 --epsilon 1/1000 --format json"));
    require(doc.at("level").get<std::string>() == "546", "threshold mismatch");
  }
  {
    Json doc = Json::parse(run_binary("numeas --tower 3,6,12 --window 'DS(12)' --format json"));
    std::vector<EmpiricalMeasureRow> rows = empirical_measure_table(
        {3, 6, 12}, atom_window(12), PlancherelModel::standard(Ambient::SL2R));
    const Json& json_rows = doc.at("rows");
    require(json_rows.size() == rows.size(), "numeas row count mismatch");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(exact_scalar_from_json(json_rows[i].at("empirical")) == rows[i].empirical,
              "empirical measure mismatch at " + std::to_string(i));
      require(measure_value_from_json(json_rows[i].at("gap")).exact_value() ==
                  rows[i].gap.exact_value(),
              "numeas gap mismatch at " + std::to_string(i));
    }
  }
}

struct Criterion {
  const char* label;
  std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  const std::vector<Criterion> criteria = {
      {"dimension formula reproduction: closed == geometric for N in [3,60], "
       "k in [3,24], with frozen spot values",
       check_dimension_routes},
      {"index oracle: formula == brute-force |SL(2,Z/N)| for N <= 30",
       check_index_oracle},
      {"vN dimension formula: covol * nu == (k-1)/24 * index for N in [3,60], "
       "k in [2,24]; anchors 11/12 and 11/24",
       check_vn_formula},
      {"exact ratio (k-1-6/N)/(k-1) == multiplicity/vN quotient; gap law; "
       "threshold(12, 1/1000) = 546",
       check_ratio_law},
      {"towers [3,6,12,24,48,96] and [5,25,125]: gaps strictly decrease, "
       "final gap < 1/100 for k >= 12",
       check_tower_decay},
      {"empirical-measure gap == (3/(2N))/pi exactly, k-independent, "
       "decreasing along towers",
       check_empirical_gap},
      {"Haar-scaling invariance over 100 randomized scalings and windows",
       check_haar_invariance},
      {"additivity over random partitions of DS(3..20), also with a "
       "continuous interval at tol 1e-10",
       check_additivity},
      {"quadrature values at tol 1e-6 and 1e-10 differ by <= 1e-6",
       check_quadrature_tolerances},
      {"CLI determinism (byte-identical re-runs) and JSON re-parse equality",
       check_cli_roundtrip},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i].body();
      std::printf("PASS  %2zu. %s\n", i + 1, criteria[i].label);
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL  %2zu. %s\n      %s\n", i + 1, criteria[i].label, e.what());
    }
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
