// glab: command-line front end for the greedy-approximation laboratory.
//
// Subcommands: norms, errors, democracy, weights, classes, experiment, verify.
// Vectors cross the boundary as JSON arrays of [index, coefficient] pairs;
// weights as named presets (power:a, sqrtlog:g, log, table:...).  Output is
// CSV (default) or JSON, to stdout or --out.  Exit status is 0 only when every
// requested computation completed without budget violations (and, for verify,
// when every acceptance criterion passed).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "greedylab/acceptance.hpp"
#include "greedylab/chebyshev.hpp"
#include "greedylab/classes.hpp"
#include "greedylab/democracy.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/spaces.hpp"
#include "greedylab/weights.hpp"

using json = nlohmann::json;
using namespace greedylab;

namespace {

// ---------------------------------------------------------------------------
// Output table: named columns, rows of strings, emitted as CSV or JSON.

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  void emit(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json out = json::array();
      for (const auto& row : rows) {
        json obj = json::object();
        for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
        out.push_back(obj);
      }
      os << out.dump(2) << "\n";
      return;
    }
    for (std::size_t c = 0; c < columns.size(); ++c)
      os << columns[c] << (c + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        os << row[c] << (c + 1 < row.size() ? "," : "\n");
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// Parses a JSON array of [index, coefficient] pairs.
SparseVector parse_vector(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("vector: expected JSON array");
  SparseVector x;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("vector: entries must be [index, coeff]");
    x.set(pair[0].get<Index>(), pair[1].get<double>());
  }
  return x;
}

// Collects input vectors from repeated --vec literals, an --input file
// (JSON array of vectors), or seeded random sampling.
std::vector<SparseVector> gather_vectors(const std::vector<std::string>& vecs,
                                         const std::string& input,
                                         std::uint64_t seed, int random_count,
                                         Index horizon) {
  std::vector<SparseVector> out;
  for (const auto& v : vecs) out.push_back(parse_vector(v));
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot read " + input);
    json j = json::parse(in);
    for (const auto& v : j) out.push_back(parse_vector(v.dump()));
  }
  if (out.empty() && random_count > 0) {
    out = random_sample(seed, static_cast<std::size_t>(random_count), 6,
                        horizon);
  }
  if (out.empty())
    throw std::runtime_error("no input vectors: pass --vec, --input, or --random");
  return out;
}

std::string join_indices(const std::vector<Index>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i)
    os << (i ? ";" : "") << idx[i];
  return os.str();
}

std::string join_signs(const std::vector<int>& signs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < signs.size(); ++i)
    os << (i ? ";" : "") << (signs[i] > 0 ? "+" : "-");
  return os.str();
}

void write_out(const Table& table, const std::string& out,
               const std::string& format) {
  if (out.empty()) {
    table.emit(std::cout, format);
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    table.emit(os, format);
  }
}

ErrorKind parse_kind(const std::string& kind) {
  if (kind == "A") return ErrorKind::BestTerm;
  if (kind == "G") return ErrorKind::Greedy;
  if (kind == "CG") return ErrorKind::Chebyshev;
  if (kind == "PG") return ErrorKind::PartialSum;
  throw std::invalid_argument("kind must be one of A, G, CG, PG");
}

double parse_q(const std::string& q) {
  if (q == "inf" || q == "infinity")
    return std::numeric_limits<double>::infinity();
  return std::stod(q);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy-approximation laboratory"};
  app.require_subcommand(1);

  // Shared state; each subcommand registers the flags it uses.
  std::string space_name = "summing";
  std::string weight_spec = "power:0.5";
  std::string q_spec = "2";
  std::string kind_spec = "A";
  std::string side_spec = "right";
  std::string signs_spec = "auto";
  std::string preset = "remark";
  std::string out_path, format = "csv", input_path;
  std::vector<std::string> vec_literals;
  std::uint64_t seed = 20260826;
  int m = 0, random_count = 0, jmax = 4, parts = 2;
  Index u = 0, horizon = 64, window = 4, M_max = 1024, k_max = 4096;
  std::size_t cap = 10000;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (default stdout)");
    cmd->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", seed, "seed for deterministic sampling");
  };
  auto add_vectors = [&](CLI::App* cmd) {
    cmd->add_option("--vec", vec_literals,
                    "vector as JSON [[index, coeff], ...]; repeatable")
        ->allow_extra_args(false);  // keep the JSON literal in one piece
    cmd->add_option("--input", input_path, "file with a JSON array of vectors");
    cmd->add_option("--random", random_count,
                    "number of seeded random vectors when none given");
  };

  auto* cmd_norms = app.add_subcommand("norms", "evaluate space norms");
  cmd_norms->add_option("--space", space_name, "space name, e.g. lp:2");
  add_vectors(cmd_norms);
  add_io(cmd_norms);

  auto* cmd_errors =
      app.add_subcommand("errors", "sigma/gamma/theta/beta error sequences");
  cmd_errors->add_option("--space", space_name, "space name");
  cmd_errors->add_option("--m", m, "largest order (default: support size)");
  cmd_errors->add_option("--window", window, "off-support window for sigma");
  cmd_errors->add_option("--cap", cap, "greedy-set enumeration cap");
  add_vectors(cmd_errors);
  add_io(cmd_errors);

  auto* cmd_dem = app.add_subcommand("democracy", "democracy functions");
  cmd_dem->add_option("--space", space_name, "space name");
  cmd_dem->add_option("--m", m, "set size")->required();
  cmd_dem->add_option("--u", u, "restriction threshold (restricted variants)");
  cmd_dem->add_option("--side", side_spec, "left|right")
      ->check(CLI::IsMember({"left", "right"}));
  cmd_dem->add_option("--horizon", horizon, "index horizon");
  cmd_dem->add_option("--signs", signs_spec,
                      "signed|unsigned|auto (auto: unsigned for restricted "
                      "left sups, signed otherwise)")
      ->check(CLI::IsMember({"signed", "unsigned", "auto"}));
  add_io(cmd_dem);

  auto* cmd_weights = app.add_subcommand("weights", "dilation diagnostics");
  cmd_weights->add_option("--w", weight_spec, "weight preset");
  cmd_weights->add_option("--Mmax", M_max, "largest dyadic dilation factor");
  cmd_weights->add_option("--kmax", k_max, "scan depth per factor");
  add_io(cmd_weights);

  auto* cmd_classes =
      app.add_subcommand("classes", "approximation-class quasi-norms");
  cmd_classes->add_option("--space", space_name, "space name");
  cmd_classes->add_option("--w", weight_spec, "weight preset");
  cmd_classes->add_option("--q", q_spec, "exponent (number or 'inf')");
  cmd_classes->add_option("--kind", kind_spec, "A|G|CG|PG");
  cmd_classes->add_option("--window", window, "off-support window for sigma");
  cmd_classes->add_option("--cap", cap, "greedy-set enumeration cap");
  add_vectors(cmd_classes);
  add_io(cmd_classes);

  auto* cmd_exp = app.add_subcommand("experiment", "embedding-failure scans");
  cmd_exp->add_option("--preset", preset, "remark|imp1|kppg|casec")
      ->check(CLI::IsMember({"remark", "imp1", "kppg", "casec"}));
  cmd_exp->add_option("--space", space_name, "space name");
  cmd_exp->add_option("--w", weight_spec, "weight preset");
  cmd_exp->add_option("--q", q_spec, "exponent (number or 'inf')");
  cmd_exp->add_option("--m", m, "row count for the remark scan");
  cmd_exp->add_option("--jmax", jmax, "levels for imp1/kppg");
  cmd_exp->add_option("--parts", parts, "partition count for casec");
  cmd_exp->add_option("--cap", cap, "greedy-set enumeration cap");
  cmd_exp->add_option("--window", window, "off-support window for sigma");
  add_io(cmd_exp);

  auto* cmd_verify =
      app.add_subcommand("verify", "run the full acceptance battery");
  add_io(cmd_verify);

  CLI11_PARSE(app, argc, argv);

  try {
    bool all_ok = true;

    if (cmd_norms->parsed()) {
      auto sp = SequenceSpace::parse(space_name);
      auto vecs = gather_vectors(vec_literals, input_path, seed, random_count,
                                 horizon);
      Table t{{"space", "vector_id", "norm"}, {}};
      for (std::size_t v = 0; v < vecs.size(); ++v)
        t.add_row({sp.name(), std::to_string(v), fmt(sp.norm(vecs[v]))});
      write_out(t, out_path, format);
    }

    if (cmd_errors->parsed()) {
      auto sp = SequenceSpace::parse(space_name);
      auto vecs = gather_vectors(vec_literals, input_path, seed, random_count,
                                 horizon);
      Table t{{"space", "vector_id", "m", "sigma", "gamma", "theta", "beta",
               "truncated_flags"},
              {}};
      for (std::size_t v = 0; v < vecs.size(); ++v) {
        const auto& x = vecs[v];
        const std::size_t m_top =
            m > 0 ? static_cast<std::size_t>(m) : x.support_size();
        for (std::size_t order = 1; order <= m_top; ++order) {
          double sg = sigma_error(sp, x, order, window);
          auto ga = gamma_error(sp, x, order, cap);
          auto th = theta_error(sp, x, order, cap);
          double be = beta_error(sp, x, static_cast<Index>(order));
          std::string flags;
          if (ga.truncated) flags += "gamma_lb;";
          if (th.truncated) flags += "theta_lb;";
          if (!flags.empty()) flags.pop_back();
          t.add_row({sp.name(), std::to_string(v), std::to_string(order),
                     fmt(sg), fmt(ga.value), fmt(th.value), fmt(be), flags});
        }
      }
      write_out(t, out_path, format);
    }

    if (cmd_dem->parsed()) {
      auto sp = SequenceSpace::parse(space_name);
      const bool restricted = cmd_dem->count("--u") > 0;
      const Side side = side_spec == "left" ? Side::Left : Side::Right;
      SignMode mode = SignMode::Signed;
      if (signs_spec == "unsigned" ||
          (signs_spec == "auto" && restricted && side == Side::Left))
        mode = SignMode::Unsigned;
      DemocracyReport rep =
          restricted
              ? h_restricted(sp, static_cast<std::size_t>(m), u, side, horizon,
                             2000000, mode)
          : side == Side::Right
              ? h_right(sp, static_cast<std::size_t>(m), horizon, 2000000, mode)
              : h_left(sp, static_cast<std::size_t>(m), horizon, 2000000, mode);
      Table t{{"space", "m", "u", "side", "value", "witness_indices",
               "witness_signs", "horizon"},
              {}};
      t.add_row({sp.name(), std::to_string(rep.m),
                 rep.u ? std::to_string(*rep.u) : "",
                 side_spec, fmt(rep.value), join_indices(rep.witness.indices),
                 join_signs(rep.witness.signs), std::to_string(rep.horizon)});
      write_out(t, out_path, format);
    }

    if (cmd_weights->parsed()) {
      auto w = Weight::parse(weight_spec);
      auto idx = dilation_indices(w, M_max, k_max);
      double theta_hat = check_doubling(w, k_max);
      Table t{{"weight_id", "M", "phi_hat", "Phi_hat", "i_hat", "I_hat",
               "theta_hat", "k_max"},
              {}};
      for (Index M = 2; M <= M_max; M *= 2) {
        auto rep = dilation_bounds(w, M, k_max);
        t.add_row({w.name(), std::to_string(M), fmt(rep.phi_hat),
                   fmt(rep.Phi_hat), fmt(idx.i_hat), fmt(idx.I_hat),
                   fmt(theta_hat), std::to_string(k_max)});
      }
      write_out(t, out_path, format);
    }

    if (cmd_classes->parsed()) {
      auto sp = SequenceSpace::parse(space_name);
      auto w = Weight::parse(weight_spec);
      ClassParams params{w, parse_q(q_spec), parse_kind(kind_spec)};
      auto vecs = gather_vectors(vec_literals, input_path, seed, random_count,
                                 horizon);
      Table t{{"space", "vector_id", "weight", "q", "kind", "value",
               "truncated"},
              {}};
      for (std::size_t v = 0; v < vecs.size(); ++v) {
        auto val = class_norm(sp, vecs[v], params, window, cap);
        t.add_row({sp.name(), std::to_string(v), w.name(), q_spec, kind_spec,
                   fmt(val.value), val.truncated ? "1" : "0"});
      }
      write_out(t, out_path, format);
    }

    if (cmd_exp->parsed()) {
      auto sp = SequenceSpace::parse(space_name);
      auto w = Weight::parse(weight_spec);
      const double q = parse_q(q_spec);
      std::vector<ExperimentRow> rows;
      if (preset == "remark") {
        rows = remark_ratio(sp, w, q, m > 0 ? static_cast<std::size_t>(m) : 30);
      } else if (preset == "imp1") {
        rows = imp1_experiment(sp, w, q, jmax, cap, window);
      } else if (preset == "kppg") {
        rows = kppg_experiment(sp, w, q, jmax, cap);
      } else {  // casec: synthetic two-block diagnostic at level --m
        const Index n = m > 0 ? m : 8;
        std::vector<Index> block;
        for (Index i = 1; i <= n; ++i) block.push_back(i);
        SignedSet Ms = SignedSet::alternating(block);
        std::vector<Index> D;
        for (Index i = n + 1; i <= 2 * n; ++i) D.push_back(i);
        auto diag = casec_construction(sp, Ms, D, parts);
        ExperimentRow row{};
        row.preset = "casec";
        row.j = parts;
        row.k = static_cast<long>(D.size());
        row.u = 0;
        row.eta = 0;
        row.num = diag.chain_lhs;
        row.den = diag.chain_rhs;
        row.ratio = diag.chain_lhs / diag.chain_rhs;
        row.bound = 1.0;
        row.flags = std::string(diag.premise_ok ? "premise_ok" : "premise_fail") +
                    (diag.chain_ok ? ";chain_ok" : ";chain_fail");
        if (!diag.premise_ok || !diag.chain_ok) all_ok = false;
        rows.push_back(row);
      }
      Table t{{"preset", "j_or_m", "k", "u", "eta", "num_norm", "den_norm",
               "ratio", "bound", "flags"},
              {}};
      for (const auto& r : rows)
        t.add_row({r.preset, std::to_string(r.j), std::to_string(r.k),
                   std::to_string(r.u), std::to_string(r.eta), fmt(r.num),
                   fmt(r.den), fmt(r.ratio), fmt(r.bound), r.flags});
      write_out(t, out_path, format);
    }

    if (cmd_verify->parsed()) {
      auto results = run_acceptance(seed);
      std::size_t failures = 0;
      std::ostringstream report;
      for (const auto& r : results) {
        report << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  "
               << r.name << "  " << r.detail << "\n";
        if (!r.passed) ++failures;
      }
      report << (results.size() - failures) << "/" << results.size()
             << " criteria passed (seed " << seed << ")\n";
      if (out_path.empty()) {
        std::cout << report.str();
      } else {
        std::ofstream os(out_path);
        if (!os) throw std::runtime_error("cannot write " + out_path);
        os << report.str();
      }
      if (failures > 0) all_ok = false;
    }

    return all_ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "glab: " << e.what() << "\n";
    return 2;
  }
}
