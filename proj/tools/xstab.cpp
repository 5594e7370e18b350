// xstab: construct, solve, classify, verify and sweep from the command line.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "xstab/xstab.hpp"

using nlohmann::json;
using namespace xstab;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCapacity = 3, kConstruction = 4, kPrecondition = 5, kOther = 6 };

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// First non-empty line of a graph6 file, or of stdin for "" and "-".
Graph read_graph(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open " + path);
    text = read_all(in);
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line != "\r") return graph6_decode(line);
  throw ParseError("graph6: empty input", 0);
}

void write_text(const std::optional<std::string>& out, const std::string& body) {
  if (!out) {
    std::cout << body;
    return;
  }
  std::ofstream f(*out, std::ios::binary);
  if (!f) throw InvalidParameter("cannot write " + *out);
  f << body;
}

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const auto& e : edges) a.push_back({e.u, e.v});
  return a;
}

json bound_json(const BoundShape& b) {
  return {{"source", b.source}, {"f_exponent", b.f_exp.str()}, {"n_exponent", b.n_exp.str()}, {"shape", b.str()}};
}

json artifact_json(const ConstructionArtifact& art) {
  json classes = json::object();
  for (const auto& [label, set] : art.classes) classes[label] = set.members();
  json blocks = json::object();
  for (const auto& [label, set] : art.blocks) blocks[label] = set.members();
  json params = json::object();
  for (const auto& [key, value] : art.params) params[key] = value;
  return {{"schema_version", kSchemaVersion},
          {"family", art.family},
          {"n", art.graph.order()},
          {"k", art.k},
          {"edges", art.graph.edge_count()},
          {"graph6", graph6_encode(art.graph)},
          {"classes", classes},
          {"blocks", blocks},
          {"params", params},
          {"notes", art.notes},
          {"claimed_deficiency", art.claimed_deficiency},
          {"actual_deficiency", art.actual_deficiency}};
}

json report_json(const VerificationReport& r) {
  json j = {{"schema_version", kSchemaVersion},
            {"check", r.check},
            {"k", r.k},
            {"n", r.n},
            {"f", r.f},
            {"coverage", r.coverage},
            {"graphs_examined", r.graphs_examined},
            {"max_observed_distance", r.max_observed_distance},
            {"witness", r.witness ? json(*r.witness) : json(nullptr)},
            {"bound_value", r.bound_value},
            {"verdict", to_string(r.verdict)},
            {"pass", r.verdict == Verdict::Informational ? json("informational")
                                                         : json(r.verdict == Verdict::Pass)},
            {"details", r.details}};
  if (r.max_ratio) j["max_ratio"] = *r.max_ratio;
  if (r.check == "threshold") j["threshold"] = r.threshold ? json(*r.threshold) : json(nullptr);
  return j;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.check << " k=" << r.k << " n=" << r.n << " f=" << r.f << " coverage=" << r.coverage
     << " graphs=" << r.graphs_examined << " max_distance=" << r.max_observed_distance;
  if (r.max_ratio) os << " max_ratio=" << *r.max_ratio;
  if (r.check == "threshold") os << " threshold=" << (r.threshold ? std::to_string(*r.threshold) : "none");
  os << " verdict=" << to_string(r.verdict);
  if (r.witness) os << " witness=" << *r.witness;
  os << '\n';
  for (const auto& d : r.details) os << "  " << d << '\n';
  return os.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& x : split_list(s)) out.push_back(std::stoi(x));
  return out;
}

json fits_json(const std::vector<FitResult>& fits) {
  json a = json::array();
  for (const auto& f : fits) {
    json j = {{"family", f.family}, {"k", f.k}, {"group", f.group}, {"points", f.points}, {"status", f.status}};
    if (f.n_slope) j["n_slope"] = *f.n_slope;
    if (f.predicted_slope) j["predicted_n_slope"] = *f.predicted_slope;
    if (f.f_exponent) j["fitted"] = {{"f", *f.f_exponent}, {"n", *f.n_exponent}};
    if (f.predicted_f) j["predicted"] = {{"f", f.predicted_f->str()}, {"n", f.predicted_n->str()}};
    a.push_back(j);
  }
  return {{"schema_version", kSchemaVersion}, {"method", "OLS on logs, two smallest n dropped per group"}, {"fits", a}};
}

struct Common {
  int k = 2;
  int n = 0;
  std::int64_t f = 0;
  std::string family;
  std::string h_path;
  std::string mode = "exact";
  std::uint64_t seed = 1;
  bool as_json = false;
  std::optional<std::string> out;
  int workers = 0;
};

Graph forbidden_graph(const Common& c) { return c.h_path.empty() ? complete_graph(c.k + 1) : read_graph(c.h_path); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xstab: stability toolkit for forbidden graphs with a critical edge"};
  // --h names the forbidden graph, so help is --help only.
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  Common c;
  std::string out_path;

  auto add_common = [&](CLI::App* sub, bool with_k = true) {
    if (with_k) sub->add_option("--k", c.k, "class count k");
    sub->add_option("--seed", c.seed, "random seed (u64)");
    sub->add_flag("--json", c.as_json, "emit JSON");
    sub->add_option("--out", out_path, "output path");
    sub->add_option("--workers", c.workers, "worker threads (default: XSTAB_WORKERS or all cores)");
  };

  // construct
  auto* construct = app.add_subcommand("construct", "build a graph family; graph6 plus a JSON sidecar");
  add_common(construct);
  FamilyParams fp;
  construct->add_option("--family", fp.family, "turan|imbalanced|counter1|propcount1|qary|qary_raw|mk_blowup|mk_layered")
      ->required();
  construct->add_option("--n", fp.n, "vertex count");
  construct->add_option("--f", fp.f, "deficiency budget");
  construct->add_option("--m", fp.m, "imbalance (imbalanced)");
  construct->add_option("--N,--l", fp.layers, "layer count (propcount1, mk_layered)");
  construct->add_option("--a", fp.a, "V-class size (mk_*)");
  construct->add_option("--b", fp.b, "W-class size (mk_*)");
  construct->add_option("--c", fp.c, "apex class size (mk_*)");

  // solve
  auto* solve = app.add_subcommand("solve", "distance to k-partite or edit distance to T_k(n)");
  add_common(solve);
  std::string input;
  solve->add_option("--mode", c.mode, "exact|heuristic|oracle|edit");
  solve->add_option("input", input, "graph6 file (default: standard input)");

  // classify
  auto* classify = app.add_subcommand("classify", "critical edges and bound regime of H");
  add_common(classify);
  classify->add_option("--h", c.h_path, "graph6 file holding H")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive desk-scale checks");
  verify->require_subcommand(1);
  auto* furedi = verify->add_subcommand("furedi", "distance <= deficiency for K_{k+1}-free graphs");
  auto* extremal = verify->add_subcommand("extremal", "uniqueness of T_k(n) as the H-free extremal graph");
  auto* threshold = verify->add_subcommand("threshold", "smallest deficiency of a non-k-partite H-free graph");
  int n_from = 0;
  for (auto* sub : {furedi, extremal, threshold}) {
    add_common(sub);
    sub->add_option("--n", c.n, sub == furedi ? "largest vertex count" : "vertex count")->required();
  }
  furedi->add_option("--f", c.f, "largest deficiency")->required();
  extremal->add_option("--h", c.h_path, "graph6 file holding H (default K_{k+1})");
  threshold->add_option("--h", c.h_path, "graph6 file holding H (default K_{k+1})");
  threshold->add_option("--from", n_from, "emit a table for n from this value up to --n");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "measure construction families over a grid");
  add_common(sweep_cmd, false);
  std::string families = "counter1,qary", ks = "2", ns = "32,40,48,56,64", alphas, f_mults, layer_list = "1,2,3",
              m_list = "1,2,3";
  bool timing = false;
  sweep_cmd->add_option("--family", families, "comma-separated families");
  sweep_cmd->add_option("--k", ks, "comma-separated class counts");
  sweep_cmd->add_option("--n", ns, "comma-separated vertex counts");
  sweep_cmd->add_option("--alpha", alphas, "f = ceil(n^alpha) rules, comma-separated (default 1.2)");
  sweep_cmd->add_option("--f-mult", f_mults, "f = c n rules, comma-separated");
  sweep_cmd->add_option("--N", layer_list, "layer counts for propcount1 and mk_layered");
  sweep_cmd->add_option("--m", m_list, "imbalances for the imbalanced family");
  sweep_cmd->add_option("--mode", c.mode, "exact|heuristic|oracle|edit");
  sweep_cmd->add_flag("--timing", timing, "fill the elapsed_ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (!out_path.empty()) c.out = out_path;
  if (c.workers < 0) {
    std::cerr << "error: --workers must be positive\n";
    return kUsage;
  }

  try {
    if (*construct) {
      fp.k = c.k;
      const auto art = build_family(fp);
      const std::string g6 = graph6_encode(art.graph) + "\n";
      const json sidecar = artifact_json(art);
      if (c.out) {
        write_text(c.out, g6);
        write_text(*c.out + ".json", sidecar.dump(2) + "\n");
        if (c.as_json) std::cout << sidecar.dump(2) << '\n';
      } else if (c.as_json) {
        std::cout << sidecar.dump(2) << '\n';
      } else {
        std::cout << g6;
      }
      return kOk;
    }

    if (*solve) {
      const Graph g = read_graph(input);
      const SolveMode mode = parse_solve_mode(c.mode);
      const auto start = std::chrono::steady_clock::now();
      json cert = nullptr;
      std::int64_t value = 0;
      switch (mode) {
        case SolveMode::Exact: {
          const auto d = min_deletions_to_k_partite_exact(g, c.k);
          value = d.count;
          cert = {{"assignment", d.partition.assignment}, {"deleted", edges_json(d.deleted)}, {"added", json::array()}};
          break;
        }
        case SolveMode::Heuristic: {
          const auto d = min_deletions_heuristic(g, c.k, c.seed);
          value = d.count;
          cert = {{"assignment", d.partition.assignment}, {"deleted", edges_json(d.deleted)}, {"added", json::array()}};
          break;
        }
        case SolveMode::Oracle:
          value = naive_min_deletions_oracle(g, c.k);
          break;
        case SolveMode::Edit: {
          const auto d = edit_distance_to_turan(g, c.k);
          value = d.total;
          cert = {{"assignment", d.partition.assignment}, {"deleted", edges_json(d.deleted)}, {"added", edges_json(d.added)}};
          break;
        }
      }
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (c.as_json) {
        const json j = {{"schema_version", kSchemaVersion},
                        {"mode", to_string(mode)},
                        {"k", c.k},
                        {"n", g.order()},
                        {"edges", g.edge_count()},
                        {"value", value},
                        {"upper_bound_only", mode == SolveMode::Heuristic},
                        {"certificate", cert},
                        {"elapsed_ms", ms}};
        write_text(c.out, j.dump(2) + "\n");
      } else {
        write_text(c.out, std::to_string(value) + "\n");
      }
      return kOk;
    }

    if (*classify) {
      const Graph h = read_graph(c.h_path);
      const auto b = applicable_theorem(h, c.k);
      const auto& r = b.regime;
      if (c.as_json) {
        json j = {{"schema_version", kSchemaVersion},
                  {"chi", r.chi},
                  {"critical_edges", edges_json(r.critical_edges)},
                  {"regime", to_string(r.regime)},
                  {"minimal_b", r.minimal_b ? json(*r.minimal_b) : json(nullptr)},
                  {"witness_t", r.witness_t ? json(*r.witness_t) : json(nullptr)},
                  {"witness_a", r.witness_a ? json(*r.witness_a) : json(nullptr)},
                  {"upper_bound", bound_json(b.upper)},
                  {"lower_bound", bound_json(b.lower)},
                  {"tight", b.tight}};
        if (b.alternative_upper) j["alternative_upper_bound"] = bound_json(*b.alternative_upper);
        if (b.crossover_f_exponent) j["crossover_f_exponent"] = b.crossover_f_exponent->str();
        write_text(c.out, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "chi=" << r.chi << " critical_edges=" << r.critical_edges.size() << " regime=" << to_string(r.regime)
           << " minimal_b=" << (r.minimal_b ? std::to_string(*r.minimal_b) : "none") << "\nupper " << b.upper.str()
           << " [" << b.upper.source << "]\nlower " << b.lower.str() << " [" << b.lower.source << "]\n"
           << (b.tight ? "tight\n" : "gap\n");
        write_text(c.out, os.str());
      }
      return kOk;
    }

    if (*verify) {
      std::vector<VerificationReport> reports;
      if (*furedi) {
        FurediOptions opts;
        opts.seed = c.seed;
        reports.push_back(verify_furedi(c.k, c.n, c.f, opts));
      } else if (*extremal) {
        reports.push_back(verify_unique_extremal(c.n, c.k, forbidden_graph(c)));
      } else {
        const Graph h = forbidden_graph(c);
        for (int n = n_from > 0 ? n_from : c.n; n <= c.n; ++n) reports.push_back(verify_simonovits_threshold(n, c.k, h));
      }
      std::string body;
      if (c.as_json) {
        json a = json::array();
        for (const auto& r : reports) a.push_back(report_json(r));
        body = (a.size() == 1 ? a[0] : a).dump(2) + "\n";
      } else {
        for (const auto& r : reports) {
          body += report_text(r);
          if (r.check == "threshold" && r.threshold)
            body += "  threshold/n=" + std::to_string(static_cast<double>(*r.threshold) / r.n) +
                    " n/k=" + std::to_string(static_cast<double>(r.n) / r.k) + "\n";
        }
      }
      write_text(c.out, body);
      for (const auto& r : reports)
        if (r.verdict == Verdict::Fail) return kCheckFailed;
      return kOk;
    }

    if (*sweep_cmd) {
      SweepConfig cfg;
      cfg.families = split_list(families);
      cfg.ks = int_list(ks);
      cfg.ns = int_list(ns);
      cfg.layers = int_list(layer_list);
      cfg.imbalances = int_list(m_list);
      cfg.f_rules.clear();
      for (const auto& a : split_list(alphas)) cfg.f_rules.push_back({FRule::Kind::Power, std::stod(a)});
      for (const auto& m : split_list(f_mults)) cfg.f_rules.push_back({FRule::Kind::Linear, std::stod(m)});
      if (cfg.f_rules.empty()) cfg.f_rules.push_back({FRule::Kind::Power, 1.2});
      cfg.mode = parse_solve_mode(c.mode);
      cfg.seed = c.seed;
      cfg.workers = c.workers;
      const auto result = sweep(cfg);
      write_text(c.out, sweep_csv(result.rows, timing));
      if (c.as_json) {
        const std::string fits = fits_json(result.fits).dump(2) + "\n";
        if (c.out) write_text(*c.out + ".fits.json", fits);
        else std::cerr << fits;
      } else {
        std::cerr << fit_report(result.fits);
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at byte " << e.offset() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const ConstructionError& e) {
    std::cerr << "construction error: " << e.what();
    if (e.achieved_deficiency() >= 0) std::cerr << " (achieved deficiency " << e.achieved_deficiency() << ")";
    std::cerr << '\n';
    return kConstruction;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOk;
}
