#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubmatch.hpp"

namespace {

using namespace cubmatch;

struct InputOptions {
  std::string path;
  std::string format = "edgelist";
  std::string named;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "graph file");
  cmd->add_option("--format", in.format, "input format")->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_option("--named", in.named, "named fixture");
}

std::vector<Multigraph> load(const InputOptions& in) {
  if (!in.named.empty() && !in.path.empty()) throw GraphError("give either --input or --named, not both");
  if (!in.named.empty()) return {named(in.named)};
  if (in.path.empty()) throw GraphError("no input: use --input FILE or --named NAME");
  std::ifstream f(in.path);
  if (!f) throw GraphError("cannot read " + in.path);
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  if (in.format == "edgelist") return {parse_edge_list(text)};
  std::vector<Multigraph> out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);)
    if (!line.empty() && line.front() != '#' && line.find_first_not_of(" \t\r") != std::string::npos)
      out.push_back(parse_graph6(line));
  return out;
}

Json analyze(const Multigraph& g) {
  Json j = {{"graph", graph_json(g)}, {"cubic", is_cubic(g)}, {"bipartite", is_bipartite(g)}};
  if (!is_cubic(g) || !is_connected(g)) return j;
  j["edge_connectivity"] = edge_connectivity(g);
  j["vertex_connectivity"] = vertex_connectivity(g);
  if (edge_connectivity(g) < 2) return j;
  LambdaProfile p = lambda_profile(g);
  j["profile"] = profile_json(p);
  j["lambda"] = p.lambda;
  if (p.bipartite) j["rho"] = p.rho;
  j["invariants"] = invariants_json(invariants(g));
  return j;
}

Json oracle_view(const Multigraph& g) {
  require_enumerable(g);
  Json j = {{"graph", graph_json(g)}};
  LambdaProfile p = oracle::lambda_profile(g);
  j["profile"] = profile_json(p);
  j["lambda"] = p.lambda;
  if (p.bipartite) j["rho"] = p.rho;
  j["perfect_matchings"] = count_perfect_matchings(g);
  j["invariants"] = invariants_json(oracle::invariants(g));
  Json cuts = Json::array();
  for (const Cut& c : enumerate_small_cuts(g, 3))
    if (!c.is_trivial(g.n()))
      cuts.push_back({{"shore", c.shore}, {"tight", oracle::is_tight_cut(g, c)},
                      {"separating", oracle::is_separating_cut(g, c)}});
  j["three_cuts"] = cuts;
  return j;
}

void print_reports(const std::vector<VerificationReport>& reports, bool& all_green) {
  std::size_t green = 0;
  for (const auto& r : reports) {
    std::cout << report_json(r).dump() << "\n";
    if (r.green()) ++green;
  }
  all_green = green == reports.size();
  std::cout << Json{{"summary", {{"graphs", reports.size()}, {"green", green}, {"red", reports.size() - green}}}}.dump()
            << "\n";
}

Family parse_family(const std::string& s) {
  auto f = family_from_string(s);
  if (!f) throw GraphError("unknown family " + s);
  return *f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda-matchability toolkit for cubic multigraphs"};
  app.require_subcommand(1);
  std::size_t max_n = 0;
  std::size_t jobs = 1;
  bool seedless = true;
  app.add_option("--max-n", max_n, "enumeration cap (overrides CUBMATCH_MAX_N)");
  app.add_option("--jobs", jobs, "worker threads for corpus runs");
  app.add_flag("--seedless", seedless, "deterministic mode (always on)");

  InputOptions a_in, d_in, v_in, f_in, o_in;

  auto* analyze_cmd = app.add_subcommand("analyze", "invariants and lambda/rho profile as JSON");
  add_input(analyze_cmd, a_in);

  auto* decompose_cmd = app.add_subcommand("decompose", "tight cut or 2-cut decomposition");
  add_input(decompose_cmd, d_in);
  std::string mode = "tight";
  bool dot = false;
  std::size_t first_choice = 0;
  decompose_cmd->add_option("--mode", mode)->check(CLI::IsMember({"tight", "2cut"}));
  decompose_cmd->add_flag("--dot", dot, "DOT instead of JSON");
  decompose_cmd->add_option("--first-choice", first_choice, "index of the root cut");

  auto* verify_cmd = app.add_subcommand("verify", "bound and characterization checks (JSON lines)");
  add_input(verify_cmd, v_in);
  std::size_t exhaustive = 0, families_depth = 0, oracle_max = 12;
  verify_cmd->add_option("--exhaustive", exhaustive, "all cubic multigraphs with kappa >= 2 up to this order");
  auto* families_opt = verify_cmd->add_option("--families", families_depth, "family members up to this depth");
  verify_cmd->add_option("--oracle-max-n", oracle_max, "run enumeration checks up to this order");

  auto* generate_cmd = app.add_subcommand("generate", "write all connected cubic multigraphs of one order");
  std::size_t gen_n = 0, min_kappa = 1;
  std::string out_dir;
  generate_cmd->add_option("--n", gen_n, "order")->required();
  generate_cmd->add_option("--min-kappa", min_kappa, "minimum vertex connectivity");
  generate_cmd->add_option("--out", out_dir, "output directory")->required();

  auto* family_cmd = app.add_subcommand("family", "generate or recognize family members");
  add_input(family_cmd, f_in);
  std::string action = "gen", fam = "K", witness_path;
  std::size_t depth = 0;
  long long x_vertex = -1;
  family_cmd->add_option("action", action)->check(CLI::IsMember({"gen", "recognize", "replay"}));
  family_cmd->add_option("--family", fam);
  family_cmd->add_option("--depth", depth);
  family_cmd->add_option("--x", x_vertex, "marked vertex for N (default: X = V)");
  family_cmd->add_option("--witness", witness_path, "witness JSON for replay");

  auto* oracle_cmd = app.add_subcommand("oracle", "enumeration-only recomputation");
  add_input(oracle_cmd, o_in);

  CLI11_PARSE(app, argc, argv);
  (void)seedless;
  if (max_n > 0) setenv("CUBMATCH_MAX_N", std::to_string(max_n).c_str(), 1);

  try {
    if (*analyze_cmd) {
      for (const auto& g : load(a_in)) std::cout << analyze(g).dump() << "\n";
      return 0;
    }
    if (*decompose_cmd) {
      for (const auto& g : load(d_in)) {
        DecompositionTree t = mode == "tight" ? tight_cut_decomposition(g, first_choice)
                                              : two_cut_decomposition(g, first_choice);
        std::cout << (dot ? to_dot(t) : tree_json(t).dump() + "\n");
      }
      return 0;
    }
    if (*verify_cmd) {
      std::vector<Multigraph> corpus;
      if (exhaustive > 0)
        for (std::size_t n = 2; n <= exhaustive; n += 2)
          for (auto& g : generate_all_cubic(n, 2)) corpus.push_back(std::move(g));
      if (*families_opt)
        for (std::size_t d = 0; d <= families_depth; ++d) {
          corpus.push_back(gen_K(d).graph);
          corpus.push_back(gen_G(d).graph);
          for (auto& m : gen_N(d)) corpus.push_back(m.graph);
        }
      if (!v_in.path.empty() || !v_in.named.empty())
        for (auto& g : load(v_in)) corpus.push_back(std::move(g));
      if (corpus.empty()) throw GraphError("empty corpus: use --exhaustive, --families, --input or --named");
      VerifyOptions opt;
      opt.oracle_max_n = oracle_max;
      bool green = false;
      print_reports(run_corpus(corpus, opt, jobs), green);
      return green ? 0 : 1;
    }
    if (*generate_cmd) {
      std::filesystem::create_directories(out_dir);
      std::size_t count = 0;
      for (const auto& g : generate_all_cubic(gen_n, min_kappa)) {
        std::ofstream f(std::filesystem::path(out_dir) / ("n" + std::to_string(gen_n) + "_" + canonical_hash(g) + ".txt"));
        f << serialize_edge_list(g);
        ++count;
      }
      std::cout << Json{{"n", gen_n}, {"min_kappa", min_kappa}, {"written", count}, {"dir", out_dir}}.dump() << "\n";
      return 0;
    }
    if (*family_cmd) {
      if (action == "gen") {
        Family f = parse_family(fam);
        std::vector<FamilyMember> members;
        if (f == Family::K) members.push_back(gen_K(depth));
        else if (f == Family::G) members.push_back(gen_G(depth));
        else if (f == Family::N) members = gen_N(depth);
        else throw GraphError("generators exist for K, G and N");
        for (const auto& m : members) std::cout << witness_json(m.witness).dump() << "\n";
        return 0;
      }
      if (action == "replay") {
        if (witness_path.empty()) throw GraphError("replay needs --witness FILE");
        std::ifstream f(witness_path);
        if (!f) throw GraphError("cannot read " + witness_path);
        Json j = Json::parse(f);
        bool ok = validate_witness(witness_from_json(j));
        std::cout << Json{{"valid", ok}}.dump() << "\n";
        return ok ? 0 : 1;
      }
      Family f = parse_family(fam);
      Recognizer rec;
      for (const auto& g : load(f_in)) {
        Json j = {{"family", to_string(f)}, {"graph", graph_json(g)}};
        std::optional<FamilyWitness> w;
        bool member = false;
        switch (f) {
          case Family::J: member = Recognizer::in_J(g); break;
          case Family::K: w = rec.witness_K(g); break;
          case Family::G: w = rec.witness_G(g); break;
          case Family::N:
            w = rec.witness_N(g, x_vertex < 0 ? std::nullopt : std::optional<Vertex>(static_cast<Vertex>(x_vertex)));
            break;
          default: w = rec.witness_prime(g, f); break;
        }
        if (w) {
          member = true;
          j["witness"] = witness_json(*w);
        }
        j["member"] = member;
        std::cout << j.dump() << "\n";
      }
      return 0;
    }
    if (*oracle_cmd) {
      for (const auto& g : load(o_in)) std::cout << oracle_view(g).dump() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
