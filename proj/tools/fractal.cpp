#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "fractal/biased_lift.hpp"
#include "fractal/error.hpp"
#include "fractal/gamma.hpp"
#include "fractal/json_io.hpp"
#include "fractal/matroid.hpp"
#include "fractal/sparse_paving.hpp"

using namespace fractal;

namespace {

const char* kBoundsNote =
    "Excluded-minor counts are lower bounds: P_k tables search sparse paving matroids only and S_k tables "
    "count bottom-construction spikes only. S_k member counts from strata mode are upper bounds.";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + out);
  file << text;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "range must look like LO..HI, got \"" + text + "\"");
  }
}

Mask parse_set(const std::string& text, int n) {
  Mask m = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    int e = 0;
    try {
      e = std::stoi(item);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "elements must be integers, got \"" + item + "\"");
    }
    if (e < 0 || e >= n) fail(ErrorCode::OutOfRange, "element " + item + " outside the ground set");
    m |= Mask{1} << e;
  }
  return m;
}

std::vector<std::uint32_t> parse_picks(const std::string& text) {
  std::vector<std::uint32_t> picks;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) picks.push_back(parse_pick(item));
  }
  return picks;
}

void print_error(const std::string& code, const std::string& message) {
  Json j;
  j["error"] = code;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

// Counts per size from one of the two composition equations.
std::vector<std::pair<double, long double>> equation_series(const std::string& eq, int k, int lo, int hi) {
  std::vector<std::pair<double, long double>> out;
  for (int x = lo; x <= hi; ++x) {
    if (eq == "collar") {
      out.emplace_back(x, count_collar_solutions(x, k));
    } else if (eq == "bottom") {
      out.emplace_back(x, count_bottom_solutions(x, k));
    } else {
      fail(ErrorCode::ParseError, "equation must be collar or bottom");
    }
  }
  return out;
}

std::vector<std::pair<double, long double>> csv_series(const std::string& text) {
  std::vector<std::pair<double, long double>> out;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || !(std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '.')) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) fail(ErrorCode::ParseError, "series rows must be size,count");
    try {
      out.emplace_back(std::stod(line.substr(0, comma)), std::stold(line.substr(comma + 1)));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad series row \"" + line + "\"");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("Census tools for matroid classes and their excluded minors.\n") + kBoundsNote};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file;
  std::string other;
  std::string out;
  std::string del;
  std::string con;
  std::string range;
  std::string picks;
  std::string mode;
  std::string equation;
  int n = 0;
  int k = 0;
  int t = 0;
  bool odd = false;
  double lo = 0;
  double hi = 0;

  // matroid
  auto* mat = app.add_subcommand("matroid", "Matroid JSON utilities");
  mat->require_subcommand(1);
  auto* validate = mat->add_subcommand("validate", "Check the basis axioms and print the normalized matroid");
  validate->add_option("--file", file, "Matroid JSON")->required();
  validate->callback([&] {
    action = [&] {
      emit(dump_json(matroid_to_json(matroid_from_json(parse_json(read_file(file))))), out);
      return 0;
    };
  });
  validate->add_option("--out", out, "Output file (default stdout)");
  auto* iso = mat->add_subcommand("iso", "Test two matroids for isomorphism");
  iso->add_option("--file", file, "First matroid JSON")->required();
  iso->add_option("--other", other, "Second matroid JSON")->required();
  iso->callback([&] {
    action = [&] {
      const Matroid a = matroid_from_json(parse_json(read_file(file)));
      const Matroid b = matroid_from_json(parse_json(read_file(other)));
      Json j;
      j["isomorphic"] = is_isomorphic(a, b);
      emit(dump_json(j), "");
      return 0;
    };
  });
  auto* minor_cmd = mat->add_subcommand("minor", "Delete and contract element sets");
  minor_cmd->add_option("--file", file, "Matroid JSON")->required();
  minor_cmd->add_option("--delete", del, "Comma-separated elements to delete");
  minor_cmd->add_option("--contract", con, "Comma-separated elements to contract");
  minor_cmd->add_option("--out", out, "Output file (default stdout)");
  minor_cmd->callback([&] {
    action = [&] {
      const Matroid m = matroid_from_json(parse_json(read_file(file)));
      emit(dump_json(matroid_to_json(minor(m, parse_set(del, m.size()), parse_set(con, m.size())))), out);
      return 0;
    };
  });
  auto* dual_cmd = mat->add_subcommand("dual", "Print the dual matroid");
  dual_cmd->add_option("--file", file, "Matroid JSON")->required();
  dual_cmd->add_option("--out", out, "Output file (default stdout)");
  dual_cmd->callback([&] {
    action = [&] {
      emit(dump_json(matroid_to_json(dual(matroid_from_json(parse_json(read_file(file)))))), out);
      return 0;
    };
  });

  // sp
  auto* sp = app.add_subcommand("sp", "Sparse paving matroids with few circuit-hyperplanes");
  sp->require_subcommand(1);
  auto* sp_census = sp->add_subcommand("census", "Isomorphism classes per number of circuit-hyperplanes (CSV)");
  sp_census->add_option("--n", n, "Ground set size")->required();
  sp_census->add_option("--k", k, "Circuit-hyperplane bound")->required();
  sp_census->add_option("--out", out, "Output file (default stdout)");
  sp_census->callback([&] {
    action = [&] {
      std::ostringstream csv;
      write_census_csv(csv, census_pk(n, k));
      emit(csv.str(), out);
      return 0;
    };
  });
  auto* sp_ex = sp->add_subcommand("exminors", "Sparse paving excluded minors (JSON list of families)");
  sp_ex->add_option("--n", n, "Ground set size")->required();
  sp_ex->add_option("--k", k, "Circuit-hyperplane bound")->required();
  sp_ex->add_option("--out", out, "Output file (default stdout)");
  sp_ex->callback([&] {
    action = [&] {
      Json list = Json::array();
      for (const auto& f : sp_excluded_minors(n, k)) list.push_back(chfamily_to_json(f));
      emit(dump_json(list), out);
      return 0;
    };
  });

  // spike
  auto* sp_cmd = app.add_subcommand("spike", "Spikes given by picked Hamiltonian cycles");
  sp_cmd->require_subcommand(1);
  auto* build = sp_cmd->add_subcommand("build", "Print the spike's matroid JSON");
  build->add_option("--file", file, "Spike JSON");
  build->add_option("--t", t, "Number of parallel pairs");
  build->add_option("--picks", picks, "Comma-separated 0/1 strings");
  build->add_option("--out", out, "Output file (default stdout)");
  build->callback([&] {
    action = [&] {
      const SpikeSpec spec = file.empty() ? make_spike_spec(t, parse_picks(picks))
                                          : spike_from_json(parse_json(read_file(file)));
      emit(dump_json(matroid_to_json(spike(spec))), out);
      return 0;
    };
  });
  auto* verify = sp_cmd->add_subcommand("verify", "Exit 0 iff the spike is an excluded minor for S_k");
  verify->add_option("--file", file, "Spike JSON")->required();
  verify->add_option("--k", k, "Balanced-cycle bound")->required();
  verify->add_option("--mode", mode, "full or structural (default: full when 2t <= 14)")
      ->check(CLI::IsMember({"full", "structural"}));
  verify->callback([&] {
    action = [&] {
      const SpikeSpec spec = spike_from_json(parse_json(read_file(file)));
      const bool full = mode.empty() ? 2 * spec.t <= kMaxCatalogSize : mode == "full";
      const bool ok = verify_sk_excluded_minor(spec, k, full ? VerifyMode::Full : VerifyMode::Structural);
      Json j;
      j["excluded_minor"] = ok;
      j["mode"] = full ? "full" : "structural";
      emit(dump_json(j), "");
      if (!ok) print_error("NotExcludedMinor", "spike is not an excluded minor for S_" + std::to_string(k));
      return ok ? 0 : 1;
    };
  });

  // sk
  auto* sk = app.add_subcommand("sk", "Minors of spikes with at most k balanced Hamiltonian cycles");
  sk->require_subcommand(1);
  auto* sk_census = sk->add_subcommand("census", "Member counts per category, rank and balanced cycles (CSV)");
  sk_census->add_option("--n", n, "Ground set size")->required();
  sk_census->add_option("--k", k, "Balanced-cycle bound")->required();
  sk_census->add_option("--mode", mode, "exact (n <= 12) or strata (even n, upper bound)")
      ->check(CLI::IsMember({"exact", "strata"}));
  sk_census->add_option("--out", out, "Output file (default stdout)");
  sk_census->callback([&] {
    action = [&] {
      std::ostringstream csv;
      write_strata_csv(csv, mode == "strata" ? census_sk_strata(n, k) : census_sk_exact_rows(n, k));
      emit(csv.str(), out);
      return 0;
    };
  });
  auto* sk_ex = sk->add_subcommand("exminors", "Bottom-construction spikes, one per glance key (JSON list)");
  sk_ex->add_option("--t", t, "Number of parallel pairs")->required();
  sk_ex->add_option("--k", k, "Balanced-cycle bound")->required();
  sk_ex->add_option("--out", out, "Output file (default stdout)");
  sk_ex->callback([&] {
    action = [&] {
      std::set<GlanceKey> seen;
      Json list = Json::array();
      for_each_bottom_solution(t, k, [&](const CompositionSolution& phi) {
        const SpikeSpec spec = bottom_construct(phi, t, k);
        if (seen.insert(glance_signature(spec)).second) list.push_back(spike_to_json(spec));
      });
      emit(dump_json(list), out);
      return 0;
    };
  });

  // gamma
  auto* gamma = app.add_subcommand("gamma", std::string("Excluded-minor ratio tables (CSV). ") + kBoundsNote);
  gamma->require_subcommand(1);
  auto* gpk = gamma->add_subcommand("pk", "Rows for P_k over a size range");
  gpk->add_option("--k", k, "Circuit-hyperplane bound")->required();
  gpk->add_option("--n", range, "Sizes, LO..HI")->required();
  gpk->add_option("--out", out, "Output file (default stdout)");
  gpk->callback([&] {
    action = [&] {
      const auto [a, b] = parse_range(range);
      std::ostringstream csv;
      write_gamma_csv(csv, gamma_pk_table(k, a, b));
      emit(csv.str(), out);
      return 0;
    };
  });
  auto* gsk = gamma->add_subcommand("sk", "Rows for S_k over sizes 2t");
  gsk->add_option("--k", k, "Balanced-cycle bound")->required();
  gsk->add_option("--t", range, "Half sizes, LO..HI")->required();
  gsk->add_flag("--odd", odd, "Also emit the odd sizes 2t+1 (exact census, n <= 12)");
  gsk->add_option("--out", out, "Output file (default stdout)");
  gsk->callback([&] {
    action = [&] {
      const auto [a, b] = parse_range(range);
      std::ostringstream csv;
      write_gamma_csv(csv, gamma_sk_table(k, a, b, odd));
      emit(csv.str(), out);
      return 0;
    };
  });

  // slope
  auto* slope = app.add_subcommand("slope", "Log-log slope of a count series (JSON)");
  slope->add_option("--series", file, "CSV of size,count rows");
  slope->add_option("--equation", equation, "collar or bottom solution counts instead of a file")
      ->check(CLI::IsMember({"collar", "bottom"}));
  slope->add_option("--k", k, "Bound for --equation");
  slope->add_option("--lo", lo, "Window start")->required();
  slope->add_option("--hi", hi, "Window end")->required();
  slope->callback([&] {
    action = [&] {
      if (file.empty() == equation.empty()) fail(ErrorCode::ParseError, "give exactly one of --series and --equation");
      const auto series = file.empty() ? equation_series(equation, k, static_cast<int>(lo), static_cast<int>(hi))
                                       : csv_series(read_file(file));
      const SlopeEstimate est = slope_fit(series, lo, hi);
      Json j;
      j["exponent"] = est.exponent;
      j["window"] = {est.window.first, est.window.second};
      j["residual"] = est.residual;
      emit(dump_json(j), "");
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    print_error(to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    print_error("IoError", e.what());
  }
  return 1;
}
