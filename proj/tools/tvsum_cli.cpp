// Command-line front end: quantum special functions, spines, coloring
// enumeration and the convergence reports, as JSON or CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "tvsum/coloring.hpp"
#include "tvsum/errors.hpp"
#include "tvsum/exact.hpp"
#include "tvsum/qalgebra.hpp"
#include "tvsum/spine.hpp"
#include "tvsum/statesum.hpp"
#include "tvsum/surfaces.hpp"
#include "tvsum/triangulation.hpp"

namespace {

using tvsum::Real;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNonConvergence = 3;
constexpr int kExitInternal = 4;

constexpr int kDigits = 25;  // significant digits in reports

struct CommonOpts {
  std::string t = "1/2";
  unsigned precision_bits = 128;
  std::string format = "json";
  std::string tol = "1e-9";
  int threads = 1;
};

std::string num(const Real& v) { return v.str(kDigits); }

json banded(const Real& value, const Real& band) {
  return json{{"value", num(value)}, {"band", num(band)}};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw tvsum::InvalidInput("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<long> parse_longs(const std::string& csv, size_t expect) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw tvsum::InvalidInput("not an integer list: " + csv);
    }
  }
  if (expect != 0 && out.size() != expect) {
    throw tvsum::InvalidInput("expected " + std::to_string(expect) + " integers, got " +
                              std::to_string(out.size()));
  }
  return out;
}

tvsum::TetLabels parse_labels(const std::string& csv) {
  const auto v = parse_longs(csv, 6);
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

/// Triangulation JSON (object with "tetrahedra") or spine JSON.
tvsum::AbstractSpine load_any_spine(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw tvsum::InvalidInput(std::string("malformed JSON input: ") + e.what());
  }
  if (j.is_object() && j.contains("tetrahedra")) {
    return tvsum::dual_spine(tvsum::Triangulation::parse(text));
  }
  return tvsum::load_spine(text);
}

void emit(const json& j, const std::string& format, const std::vector<std::string>& csv_cols) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // CSV: one header line, one row, columns a fixed subset of the JSON keys.
  std::string header, row;
  for (const auto& c : csv_cols) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += c;
    const json* node = &j;
    std::string key = c;
    if (auto dot = c.find('.'); dot != std::string::npos) {
      node = &j.at(c.substr(0, dot));
      key = c.substr(dot + 1);
    }
    const auto& v = node->at(key);
    row += v.is_string() ? v.get<std::string>() : v.dump();
  }
  std::cout << header << "\n" << row << "\n";
}

json sector_json(const tvsum::VertexSector& s) {
  std::string canon;
  for (int i : s.canonical) canon += static_cast<char>('0' + i);
  int compat = 0;
  for (int b = 0; b < 6; ++b) {
    if (s.compatible_mask & (1 << b)) ++compat;
  }
  return json{{"canonical", canon}, {"compatible_count", compat}};
}

json invariants_json(const tvsum::SurfaceInvariants& s) {
  json j;
  j["q"] = s.q;
  j["peel_index"] = s.peel;
  j["normal"] = s.normal;
  j["max_color"] = s.max_color;
  j["m_even"] = s.m_even;
  if (s.euler_char.has_value()) {
    j["euler_char"] = *s.euler_char;
  } else {
    j["euler_char"] = nullptr;
  }
  j["vertices"] = json::array();
  for (const auto& v : s.vertices) {
    json jv;
    jv["column_sums"] = v.column_sums;
    jv["circles"] = v.circles;
    if (v.curve.has_value()) {
      jv["curve_type"] = json{{"a", v.curve->a}, {"b", v.curve->b}, {"mult", v.curve->multiplicity}};
    } else {
      jv["curve_type"] = nullptr;
    }
    jv["sector"] = sector_json(v.sector);
    j["vertices"].push_back(jv);
  }
  return j;
}

json report_json(const tvsum::QContext& ctx, const tvsum::SumReport& r) {
  json j;
  j["schema"] = 1;
  j["command"] = "sum";
  j["t"] = num(ctx.t());
  j["precision_bits"] = ctx.precision_bits();
  j["case"] = tvsum::case_name(r.theorem_case);
  j["n"] = r.n;
  j["color_bound"] = r.color_bound;
  j["partial_sum"] = num(r.partial_sum);
  j["abs_partial_sum"] = num(r.abs_partial_sum);
  j["renormalized"] = banded(r.renormalized, r.renormalized_band);
  j["series"] = banded(r.series_value, r.series_band);
  j["series_color_bound"] = r.series_color_bound;
  j["tail_bound"] = num(r.tail_bound);
  j["n0"] = r.n0;
  j["converged"] = r.converged;
  j["cauchy_deltas"] = json::array();
  for (size_t i = 0; i < r.cauchy_deltas.size(); ++i) {
    j["cauchy_deltas"].push_back(json{{"n", r.delta_indices[i]}, {"delta", num(r.cauchy_deltas[i])}});
  }
  return j;
}

int fail(const std::string& kind, const std::string& message, int code) {
  json j;
  j["schema"] = 1;
  j["error"] = json{{"kind", kind}, {"message", message}};
  std::cout << j.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"State sums over ideal triangulations at real 0 < t < 1"};
  app.require_subcommand(1);

  CommonOpts opt;
  if (const char* env = std::getenv("TVSUM_PRECISION_BITS")) {
    opt.precision_bits = static_cast<unsigned>(std::atoi(env));
  }
  app.add_option("--t", opt.t, "parameter t in (0,1): rational like 1/2, or decimal");
  app.add_option("--precision-bits", opt.precision_bits, "working mantissa bits (>= 64)");
  app.add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--tol", opt.tol, "tolerance for limits and series truncation");
  app.add_option("--threads", opt.threads, "worker threads (0 = hardware)");

  std::string labels_csv, triple_csv, input_path, coloring_csv, case_name = "auto";
  long max_color = 0, tail_n = 0, tail_k = 0, tail_ceiling = -1;

  auto* c_sixj = app.add_subcommand("sixj", "unitary 6j symbol with its universal bound");
  c_sixj->add_option("--labels", labels_csv, "a,b,e,c,d,f")->required();
  auto* c_theta = app.add_subcommand("theta", "theta coefficient of an admissible triple");
  c_theta->add_option("--triple", triple_csv, "a,b,c")->required();
  auto* c_tet = app.add_subcommand("tet", "tetrahedral coefficient");
  c_tet->add_option("--labels", labels_csv, "a,b,e,c,d,f")->required();
  auto* c_limits = app.add_subcommand("limits", "the three renormalized 6j limits");
  c_limits->add_option("--labels", labels_csv, "a,b,e,c,d,f")->required();
  auto* c_spine = app.add_subcommand("spine", "dual spine structure and chi");
  c_spine->add_option("--in", input_path, "triangulation or spine JSON ('-' = stdin)")->required();
  auto* c_enum = app.add_subcommand("enumerate", "admissible colorings with invariants");
  c_enum->add_option("--in", input_path)->required();
  c_enum->add_option("--max-color", max_color, "color bound N")->required();
  auto* c_analyze = app.add_subcommand("analyze", "full invariant record of one coloring");
  c_analyze->add_option("--in", input_path)->required();
  c_analyze->add_option("--coloring", coloring_csv, "comma-separated colors by face id")->required();
  auto* c_sum = app.add_subcommand("sum", "theorem-case convergence report");
  c_sum->add_option("--in", input_path)->required();
  c_sum->add_option("--max-color", max_color, "color bound N")->required();
  c_sum->add_option("--case", case_name, "auto|chi_negative|chi_zero|chi_one")
      ->check(CLI::IsMember({"auto", "chi_negative", "chi_zero", "chi_one"}));
  auto* c_tail = app.add_subcommand("tail", "enumerated tail bound");
  c_tail->add_option("--in", input_path)->required();
  c_tail->add_option("-N,--from", tail_n, "tail starts above this color")->required();
  c_tail->add_option("--k", tail_k, "peel level (value is k-invariant; recorded)");
  c_tail->add_option("--ceiling", tail_ceiling, "enumeration ceiling (default N + 20)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (opt.precision_bits < 64) throw tvsum::InvalidInput("precision_bits must be >= 64");
    const auto ctx = tvsum::QContext::parse(opt.t, opt.precision_bits);
    const Real tol = Real::parse(opt.tol, ctx.work_prec());
    if (!(tol > 0L)) throw tvsum::InvalidInput("tol must be positive");
    tvsum::EvalOptions eval;
    eval.threads = opt.threads > 0 ? opt.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());

    if (c_sixj->parsed()) {
      const auto L = parse_labels(labels_csv);
      const Real v = tvsum::sixj_unitary(ctx, L);
      const auto b = tvsum::sixj_bound(ctx, L);
      json j;
      j["schema"] = 1;
      j["command"] = "sixj";
      j["t"] = num(ctx.t());
      j["labels"] = L.as_array();
      j["value"] = num(v);
      j["bound"] = json{{"k_constant", num(b.k_constant)},
                        {"exponent", b.exponent},
                        {"bound", num(b.bound)}};
      emit(j, opt.format, {"value", "bound.bound", "bound.exponent"});
    } else if (c_theta->parsed()) {
      const auto v = parse_longs(triple_csv, 3);
      const auto th = tvsum::theta(ctx, v[0], v[1], v[2]);
      json j;
      j["schema"] = 1;
      j["command"] = "theta";
      j["t"] = num(ctx.t());
      j["triple"] = v;
      j["sign"] = th.sign;
      j["log_magnitude"] = num(th.log_magnitude);
      j["value"] = num(th.value());
      emit(j, opt.format, {"value", "sign", "log_magnitude"});
    } else if (c_tet->parsed()) {
      const auto L = parse_labels(labels_csv);
      const auto te = tvsum::tet(ctx, L);
      const auto b = tvsum::sixj_bound(ctx, L);
      json j;
      j["schema"] = 1;
      j["command"] = "tet";
      j["t"] = num(ctx.t());
      j["labels"] = L.as_array();
      j["sign"] = te.sign;
      j["log_magnitude"] = num(te.log_magnitude);
      j["value"] = num(te.value());
      j["sixj_bound"] = num(b.bound);
      emit(j, opt.format, {"value", "sign", "log_magnitude"});
    } else if (c_limits->parsed()) {
      const auto L = parse_labels(labels_csv);
      json j;
      j["schema"] = 1;
      j["command"] = "limits";
      j["t"] = num(ctx.t());
      j["labels"] = L.as_array();
      j["tol"] = num(tol);
      j["all_grow"] = num(tvsum::sixj_infinity(ctx, L, tvsum::LimitVariant::kAllGrow, tol));
      j["e_fixed"] = num(tvsum::sixj_infinity(ctx, L, tvsum::LimitVariant::kEFixed, tol));
      j["e_and_f_fixed"] =
          num(tvsum::sixj_infinity(ctx, L, tvsum::LimitVariant::kEAndFFixed, tol));
      emit(j, opt.format, {"all_grow", "e_fixed", "e_and_f_fixed"});
    } else if (c_spine->parsed()) {
      const auto spine = load_any_spine(read_input(input_path));
      json j;
      j["schema"] = 1;
      j["command"] = "spine";
      j["vertices"] = spine.vertex_count();
      j["edges"] = spine.edge_count();
      j["faces"] = spine.face_count();
      j["chi"] = tvsum::euler_characteristic(spine);
      j["augmented"] = spine.is_augmented();
      j["spine"] = json::parse(tvsum::serialize_spine(spine));
      emit(j, opt.format, {"vertices", "edges", "faces", "chi"});
    } else if (c_enum->parsed()) {
      const auto spine = load_any_spine(read_input(input_path));
      // JSON-lines stream; CSV as rows under one header.
      if (opt.format == "csv") {
        std::cout << "coloring,max_color,q,peel_index,normal,euler_char\n";
      }
      tvsum::enumerate_colorings(spine, max_color, [&](const tvsum::Coloring& c) {
        const auto inv = tvsum::analyze(spine, c);
        if (opt.format == "csv") {
          std::string cs;
          for (size_t i = 0; i < c.colors.size(); ++i) {
            if (i) cs += ';';
            cs += std::to_string(c.colors[i]);
          }
          std::cout << cs << ',' << inv.max_color << ',' << inv.q << ',' << inv.peel << ','
                    << (inv.normal ? 1 : 0) << ','
                    << (inv.euler_char ? std::to_string(*inv.euler_char) : "") << "\n";
          return;
        }
        json j = invariants_json(inv);
        j["coloring"] = c.colors;
        std::cout << j.dump() << "\n";
      });
    } else if (c_analyze->parsed()) {
      const auto spine = load_any_spine(read_input(input_path));
      tvsum::Coloring c{parse_longs(coloring_csv, spine.faces.size())};
      const auto inv = tvsum::analyze(spine, c);
      const auto contrib = tvsum::contribution(ctx, spine, c);
      json j;
      j["schema"] = 1;
      j["command"] = "analyze";
      j["t"] = num(ctx.t());
      j["coloring"] = c.colors;
      j["invariants"] = invariants_json(inv);
      j["contribution"] = banded(contrib.value, contrib.bound);
      j["sector_label"] = tvsum::sector_label(tvsum::sector_of(spine, c));
      emit(j, opt.format,
           {"contribution.value", "contribution.band", "invariants.q", "invariants.peel_index"});
    } else if (c_sum->parsed()) {
      const auto spine = load_any_spine(read_input(input_path));
      tvsum::TheoremCase tc;
      if (case_name == "auto") {
        tc = tvsum::case_for(spine);
      } else if (case_name == "chi_negative") {
        tc = tvsum::TheoremCase::kChiNegative;
      } else if (case_name == "chi_zero") {
        tc = tvsum::TheoremCase::kChiZero;
      } else {
        tc = tvsum::TheoremCase::kChiOne;
      }
      const auto rep = tvsum::theorem_sum(ctx, spine, tc, max_color, tol, eval);
      emit(report_json(ctx, rep), opt.format,
           {"case", "n", "partial_sum", "abs_partial_sum", "renormalized.value",
            "renormalized.band", "series.value", "series.band", "tail_bound", "n0", "converged"});
      if (!rep.converged) return kExitNonConvergence;
    } else if (c_tail->parsed()) {
      const auto spine = load_any_spine(read_input(input_path));
      if (tail_ceiling < 0) tail_ceiling = tail_n + 20;
      const auto rep = tvsum::tail_report(ctx, spine, tail_n, tail_k, tail_ceiling);
      json j;
      j["schema"] = 1;
      j["command"] = "tail";
      j["t"] = num(ctx.t());
      j["n"] = rep.n;
      j["k"] = rep.k;
      j["ceiling"] = rep.ceiling;
      j["value"] = num(rep.value);
      emit(j, opt.format, {"n", "k", "ceiling", "value"});
    }
    return kExitOk;
  } catch (const tvsum::NonConvergence& e) {
    return fail("non_convergence", e.what(), kExitNonConvergence);
  } catch (const tvsum::InvalidInput& e) {
    return fail("invalid_input", e.what(), kExitInput);
  } catch (const tvsum::InternalFault& e) {
    return fail("internal_fault", e.what(), kExitInternal);
  } catch (const std::exception& e) {
    return fail("error", e.what(), kExitInput);
  }
}
