// Command-line front end. Links only the C interface of libbiembed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "biembed/biembed.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Owned {
  char* p = nullptr;
  ~Owned() { be_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct RunConfig {
  std::string out;
  unsigned threads = 1;
  std::string table;
  std::string form = "full-cycle";
  std::string graph;
  std::string current_graph;
  std::string template_path;
  std::string which = "first";
  std::string seed;
  int s = 1;
  int order = 0;
  std::uint64_t budget = 1'000'000;
  long long n = 0;
  long long g = 0;
};

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}
  std::ostream& stream() { return buf_; }
  bool flush() {
    if (path_.empty()) {
      std::cout << buf_.str() << std::flush;
      return true;
    }
    std::ofstream f(path_, std::ios::binary);
    f << buf_.str();
    if (!f) {
      std::cerr << "error: cannot write " << path_ << "\n";
      return false;
    }
    return true;
  }

 private:
  std::string path_;
  std::ostringstream buf_;
};

int error(be_status status) {
  std::cerr << "error: " << be_status_name(status) << ": " << be_last_error() << "\n";
  return kExitError;
}

bool parse_form(const std::string& text, be_antimorphism& kind) {
  if (text == "full-cycle") kind = BE_FULL_CYCLE;
  else if (text == "cycle-plus-fixed-point") kind = BE_CYCLE_PLUS_FIXED_POINT;
  else return false;
  return true;
}

be_search_options search_options(const RunConfig& cfg) { return be_search_options{cfg.budget, cfg.threads}; }

int emit_report(const RunConfig& cfg, be_report* report, const std::string& preamble = {}) {
  Owned text;
  if (auto st = be_report_serialize(report, &text.p); st != BE_OK) return error(st);
  Output out(cfg.out);
  out.stream() << preamble << text.str();
  const bool passed = be_report_passed(report) != 0;
  if (!passed) std::cerr << "verification failed at stage " << be_report_first_failure(report) << "\n";
  if (!out.flush()) return kExitError;
  return passed ? kExitPass : kExitFail;
}

int cmd_verify_table(const RunConfig& cfg) {
  be_antimorphism kind;
  if (!parse_form(cfg.form, kind)) {
    std::cerr << "error: unknown antimorphism form '" << cfg.form << "'\n";
    return kExitError;
  }
  be_rotation* r = nullptr;
  if (auto st = be_rotation_load(cfg.table.c_str(), &r); st != BE_OK) return error(st);
  be_report* report = nullptr;
  auto st = be_verify_table(r, kind, &report);
  be_rotation_free(r);
  if (st != BE_OK) return error(st);
  int code = emit_report(cfg, report);
  be_report_free(report);
  return code;
}

int cmd_selfcomp_search(const RunConfig& cfg) {
  be_graph* g = nullptr;
  if (auto st = be_graph_load(cfg.graph.c_str(), &g); st != BE_OK) return error(st);
  be_search_info info{};
  be_rotation* found = nullptr;
  const auto options = search_options(cfg);
  auto st = be_search_triangular(g, &options, &info, &found);
  be_graph_free(g);
  if (st != BE_OK) return error(st);
  Output out(cfg.out);
  out.stream() << "search.status: " << be_search_status_name(info.status) << "\n"
               << "search.nodes: " << info.nodes << "\n";
  int code = kExitFail;
  if (found) {
    be_surface_stats stats{};
    if (auto s2 = be_rotation_stats(found, &stats); s2 != BE_OK) {
      be_rotation_free(found);
      return error(s2);
    }
    Owned text;
    be_rotation_serialize(found, &text.p);
    out.stream() << "faces: " << stats.faces << "\n"
                 << "genus: " << stats.genus << "\n"
                 << "triangular: " << (stats.triangular ? "true" : "false") << "\n"
                 << "rotation:\n"
                 << text.str();
    code = stats.triangular ? kExitPass : kExitFail;
    be_rotation_free(found);
  } else {
    std::cerr << "no triangular embedding found (" << be_search_status_name(info.status) << ")\n";
  }
  if (!out.flush()) return kExitError;
  return code;
}

int cmd_selfcomp_build(const RunConfig& cfg) {
  be_antimorphism kind;
  if (!parse_form(cfg.form, kind)) {
    std::cerr << "error: unknown antimorphism form '" << cfg.form << "'\n";
    return kExitError;
  }
  std::vector<int> seed;
  std::stringstream ss(cfg.seed);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t used = 0;
      seed.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      std::cerr << "error: bad seed entry '" << tok << "'\n";
      return kExitError;
    }
  }
  be_graph* g = nullptr;
  if (auto st = be_graph_from_seed(kind, cfg.order, seed.data(), seed.size(), &g); st != BE_OK) return error(st);
  Owned text;
  auto st = be_graph_serialize(g, &text.p);
  be_graph_free(g);
  if (st != BE_OK) return error(st);
  Output out(cfg.out);
  out.stream() << text.str();
  return out.flush() ? kExitPass : kExitError;
}

const char* template_arg(const RunConfig& cfg) { return cfg.template_path.empty() ? nullptr : cfg.template_path.c_str(); }

int cmd_family_verify(const RunConfig& cfg) {
  be_report* report = nullptr;
  if (auto st = be_family_verify(cfg.s, template_arg(cfg), &report); st != BE_OK) {
    if (st == BE_TEMPLATE_MISSING) std::cerr << "hint: run 'family search --s " << cfg.s << "'\n";
    return error(st);
  }
  int code = emit_report(cfg, report);
  be_report_free(report);
  return code;
}

int cmd_family_search(const RunConfig& cfg) {
  be_search_info info{};
  be_report* report = nullptr;
  be_current_graph* first = nullptr;
  be_current_graph* second = nullptr;
  const auto options = search_options(cfg);
  if (auto st = be_family_search(cfg.s, &options, &info, &report, &first, &second); st != BE_OK) return error(st);
  std::ostringstream pre;
  pre << "search.status: " << be_search_status_name(info.status) << "\n"
      << "search.nodes: " << info.nodes << "\n";
  if (!report) {
    std::cerr << "no current-graph pair found (" << be_search_status_name(info.status) << ")\n";
    Output out(cfg.out);
    out.stream() << pre.str();
    out.flush();
    return kExitFail;
  }
  for (auto* cg : {first, second}) {
    Owned text;
    be_current_graph_serialize(cg, &text.p);
    pre << (cg == first ? "current_graph.first:\n" : "current_graph.second:\n") << text.str();
    be_current_graph_free(cg);
  }
  int code = emit_report(cfg, report, pre.str());
  be_report_free(report);
  return code;
}

int cmd_family_emit(const RunConfig& cfg) {
  be_current_graph* first = nullptr;
  be_current_graph* second = nullptr;
  if (auto st = be_family_build(cfg.s, template_arg(cfg), &first, &second); st != BE_OK) return error(st);
  Owned text;
  auto st = be_current_graph_serialize(cfg.which == "second" ? second : first, &text.p);
  be_current_graph_free(first);
  be_current_graph_free(second);
  if (st != BE_OK) return error(st);
  Output out(cfg.out);
  out.stream() << text.str();
  return out.flush() ? kExitPass : kExitError;
}

int cmd_bounds(const RunConfig& cfg, bool have_n, bool have_g) {
  Output out(cfg.out);
  if (have_n) {
    long long value = 0;
    if (auto st = be_bigenus_lower_bound(cfg.n, &value); st != BE_OK) return error(st);
    out.stream() << "bigenus_lower_bound(" << cfg.n << "): " << value << "\n"
                 << "residue: n mod 24 = " << cfg.n % 24 << ", bound "
                 << (be_bound_is_integral(cfg.n) ? "exact without rounding" : "rounded up") << "\n";
  }
  if (have_g) {
    long long value = 0;
    if (auto st = be_bichromatic_upper_bound(cfg.g, &value); st != BE_OK) return error(st);
    long long edges = 0;
    if (auto st = be_edge_bound(value, cfg.g, &edges); st != BE_OK) return error(st);
    out.stream() << "bichromatic_upper_bound(" << cfg.g << "): " << value << "\n"
                 << "biembedding_edge_bound(" << value << ", " << cfg.g << "): " << edges << "\n";
  }
  return out.flush() ? kExitPass : kExitError;
}

int cmd_derive(const RunConfig& cfg) {
  be_current_graph* cg = nullptr;
  if (auto st = be_current_graph_load(cfg.current_graph.c_str(), &cg); st != BE_OK) return error(st);
  be_rotation* r = nullptr;
  auto st = be_derive_embedding(cg, &r);
  be_current_graph_free(cg);
  if (st != BE_OK) return error(st);
  Owned text;
  st = be_rotation_serialize(r, &text.p);
  be_rotation_free(r);
  if (st != BE_OK) return error(st);
  Output out(cfg.out);
  out.stream() << text.str();
  return out.flush() ? kExitPass : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular biembeddings of complete graphs: verification and search"};
  app.require_subcommand(1);
  app.fallthrough();  // --out and --threads may follow the subcommand
  RunConfig cfg;
  app.add_option("--out", cfg.out, "Write the report to this file instead of stdout");
  app.add_option("--threads", cfg.threads, "Worker threads for searches; results do not depend on it")
      ->check(CLI::Range(1u, 256u));

  const auto forms = CLI::IsMember({"full-cycle", "cycle-plus-fixed-point"});

  auto* verify_table = app.add_subcommand("verify-table", "Certify a self-complementary rotation table");
  verify_table->add_option("--table", cfg.table, "Rotation file")->required()->check(CLI::ExistingFile);
  verify_table->add_option("--form", cfg.form, "Antimorphism form")->check(forms);

  auto* selfcomp = app.add_subcommand("selfcomp", "Self-complementary graph tools");
  selfcomp->require_subcommand(1);
  auto* sc_verify = selfcomp->add_subcommand("verify", "Certify a self-complementary rotation table");
  sc_verify->add_option("--table", cfg.table, "Rotation file")->required()->check(CLI::ExistingFile);
  sc_verify->add_option("--form", cfg.form, "Antimorphism form")->check(forms);
  auto* sc_search = selfcomp->add_subcommand("search", "Search for a triangular embedding of a graph");
  sc_search->add_option("--graph", cfg.graph, "Graph file")->required()->check(CLI::ExistingFile);
  sc_search->add_option("--budget", cfg.budget, "Node budget")->check(CLI::PositiveNumber);
  auto* sc_build = selfcomp->add_subcommand("build", "Grow a self-complementary graph from the neighbors of 0");
  sc_build->add_option("--n", cfg.order, "Vertex count")->required();
  sc_build->add_option("--seed", cfg.seed, "Comma-separated neighbors of vertex 0")->required();
  sc_build->add_option("--form", cfg.form, "Antimorphism form")->check(forms);

  auto* family = app.add_subcommand("family", "Current-graph family over Z_(24s+13)");
  family->require_subcommand(1);
  auto* fam_verify = family->add_subcommand("verify", "Build the pair from the template and certify it");
  auto* fam_search = family->add_subcommand("search", "Reconstruct a pair by search and certify it");
  auto* fam_emit = family->add_subcommand("emit", "Print one current graph of the pair");
  for (auto* sub : {fam_verify, fam_search, fam_emit}) {
    sub->add_option("--s", cfg.s, "Family parameter")->required()->check(CLI::Range(1, 1'000'000));
  }
  for (auto* sub : {fam_verify, fam_emit}) sub->add_option("--template", cfg.template_path, "Template file");
  fam_search->add_option("--budget", cfg.budget, "Node budget")->check(CLI::PositiveNumber);
  fam_emit->add_option("--which", cfg.which, "first or second")->check(CLI::IsMember({"first", "second"}));

  auto* bounds = app.add_subcommand("bounds", "Evaluate the bigenus and bichromatic bounds");
  auto* opt_n = bounds->add_option("--n", cfg.n, "Order of the complete graph");
  auto* opt_g = bounds->add_option("--g", cfg.g, "Genus of the surface");

  auto* derive = app.add_subcommand("derive", "Derived embedding of a current graph, as a rotation file");
  derive->add_option("--current-graph", cfg.current_graph, "Current-graph file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (*verify_table || *sc_verify) return cmd_verify_table(cfg);
  if (*sc_search) return cmd_selfcomp_search(cfg);
  if (*sc_build) return cmd_selfcomp_build(cfg);
  if (*fam_verify) return cmd_family_verify(cfg);
  if (*fam_search) return cmd_family_search(cfg);
  if (*fam_emit) return cmd_family_emit(cfg);
  if (*bounds) {
    if (!*opt_n && !*opt_g) {
      std::cerr << "error: bounds needs --n or --g\n";
      return kExitError;
    }
    return cmd_bounds(cfg, static_cast<bool>(*opt_n), static_cast<bool>(*opt_g));
  }
  if (*derive) return cmd_derive(cfg);
  return kExitError;
}
