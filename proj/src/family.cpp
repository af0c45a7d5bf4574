#include "biembed/family.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "biembed/error.hpp"
#include "text.hpp"

#ifndef BIEMBED_DATA_DIR
#define BIEMBED_DATA_DIR "data"
#endif

namespace biembed {

FamilyParameter FamilyParameter::of(long long s) {
  if (s < 1) throw Error(ErrorCode::invalid_argument, "family parameter s must be >= 1, got " + std::to_string(s));
  if (s > 10'000'000) throw Error(ErrorCode::invalid_argument, "family parameter s is too large");
  return FamilyParameter{static_cast<int>(s)};
}

long long family_genus(const FamilyParameter& p) {
  const long long s = p.s;
  return 24 * s * s + 13 * s + 1;
}

std::pair<DifferenceSet, DifferenceSet> current_sets(const FamilyParameter& p) {
  if (p.s < 1) throw Error(ErrorCode::invalid_argument, "family parameter s must be >= 1");
  const int s = p.s;
  std::vector<int> first{1, 6};
  std::vector<int> second{6 * s + 2, 12 * s + 5};
  for (int i = 1; i <= 12 * s + 6; ++i) {
    if (i == 1 || i == 6 || i == 6 * s + 2 || i == 12 * s + 5) continue;
    const int r = i % 6;
    if (r == 2 || r == 3 || r == 5) {
      first.push_back(i);
    } else {
      second.push_back(i);
    }
  }
  return {DifferenceSet(p.modulus(), std::move(first)), DifferenceSet(p.modulus(), std::move(second))};
}

namespace {

// Recursive-descent evaluator over integers with variables s and m.
class Expression {
 public:
  Expression(std::string_view text, long long s, long long m) : text_(text), s_(s), m_(m) {}

  long long evaluate() {
    long long v = sum();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  long long sum() {
    long long v = product();
    while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const char op = text_[pos_++];
      const long long rhs = product();
      v = op == '+' ? v + rhs : v - rhs;
    }
    return v;
  }

  long long product() {
    long long v = unary();
    for (;;) {
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        v *= unary();
      } else if (pos_ < text_.size() && (text_[pos_] == '(' || std::isalpha(static_cast<unsigned char>(text_[pos_])))) {
        v *= unary();  // implicit product such as 12s or 3(m+1)
      } else {
        return v;
      }
    }
  }

  long long unary() {
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      const bool negate = text_[pos_++] == '-';
      const long long v = unary();
      return negate ? -v : v;
    }
    return atom();
  }

  long long atom() {
    if (pos_ >= text_.size()) fail("expression ends early");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      long long v = sum();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      auto v = detail::parse_int(text_.substr(pos_, end - pos_));
      if (!v) fail("bad number");
      pos_ = end;
      return *v;
    }
    ++pos_;
    if (c == 's') return s_;
    if (c == 'm') return m_;
    fail("unknown variable '" + std::string(1, c) + "'");
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::parse_error, "bad expression '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  long long s_;
  long long m_;
  std::size_t pos_ = 0;
};

long long eval(const std::string& text, long long s, long long m, int line) {
  try {
    return Expression(text, s, m).evaluate();
  } catch (const Error& e) {
    throw Error(ErrorCode::parse_error, detail::line_ref(static_cast<std::size_t>(line)) + ": " + e.what());
  }
}

void expand(const std::vector<FamilyTemplate::Statement>& body, long long s, long long m, long long n,
            std::vector<std::vector<long long>>& out) {
  for (const auto& st : body) {
    if (!st.loop) {
      std::vector<long long> row;
      for (const auto& c : st.currents) row.push_back(detail::mod(eval(c, s, m, st.line), n));
      out.push_back(std::move(row));
      continue;
    }
    const long long from = eval(st.from, s, m, st.line);
    const long long to = eval(st.to, s, m, st.line);
    for (long long k = from; k <= to; ++k) {
      if (st.parity != -1 && detail::mod(k, 2) != st.parity) continue;
      expand(st.body, s, k, n, out);
    }
  }
}

}  // namespace

FamilyTemplate FamilyTemplate::parse(std::string_view text) {
  FamilyTemplate t;
  t.graphs_.resize(2);
  std::vector<Statement>* target = nullptr;
  std::vector<std::vector<Statement>*> stack;
  std::vector<Statement*> open_loops;
  bool seen[2] = {false, false};
  auto lines = detail::split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = detail::trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    auto tok = detail::split_ws(line);
    auto where = detail::line_ref(i);
    auto bad = [&](const std::string& why) { return Error(ErrorCode::parse_error, where + ": " + why); };
    const auto head = tok[0];
    if (head == "modulus") {
      if (tok.size() != 2) throw bad("expected 'modulus <expr>'");
      t.modulus_ = std::string(tok[1]);
    } else if (head == "graph") {
      if (!open_loops.empty()) throw bad("'graph' inside a loop");
      if (tok.size() != 2 || (tok[1] != "first" && tok[1] != "second")) throw bad("expected 'graph first' or 'graph second'");
      const int which = tok[1] == "first" ? 0 : 1;
      if (seen[which]) throw bad("graph declared twice");
      seen[which] = true;
      target = &t.graphs_[static_cast<std::size_t>(which)];
    } else if (head == "vertex") {
      if (!target) throw bad("'vertex' before 'graph'");
      if (tok.size() < 2) throw bad("vertex needs at least one current");
      Statement st;
      st.line = static_cast<int>(i);
      for (std::size_t k = 1; k < tok.size(); ++k) st.currents.emplace_back(tok[k]);
      target->push_back(std::move(st));
    } else if (head == "for") {
      if (!target) throw bad("'for' before 'graph'");
      if (tok.size() < 4 || tok.size() > 5 || tok[1] != "m") throw bad("expected 'for m <from> <to> [even|odd]'");
      Statement st;
      st.line = static_cast<int>(i);
      st.loop = true;
      st.from = std::string(tok[2]);
      st.to = std::string(tok[3]);
      if (tok.size() == 5) {
        if (tok[4] == "even") st.parity = 0;
        else if (tok[4] == "odd") st.parity = 1;
        else throw bad("loop filter must be 'even' or 'odd'");
      }
      target->push_back(std::move(st));
      open_loops.push_back(&target->back());
      stack.push_back(target);
      target = &open_loops.back()->body;
    } else if (head == "end") {
      if (open_loops.empty()) throw bad("'end' without 'for'");
      open_loops.pop_back();
      target = stack.back();
      stack.pop_back();
    } else {
      throw bad("unknown statement '" + std::string(head) + "'");
    }
  }
  if (!open_loops.empty()) throw Error(ErrorCode::parse_error, "unterminated 'for' block");
  if (t.modulus_.empty()) throw Error(ErrorCode::parse_error, "template has no modulus");
  if (!seen[0] || !seen[1]) throw Error(ErrorCode::parse_error, "template must declare both graphs");
  return t;
}

FamilyTemplate FamilyTemplate::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::template_missing,
                "family template not found at " + path.string() + "; use 'family search' to reconstruct a pair");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

CurrentPair FamilyTemplate::instantiate(const FamilyParameter& p) const {
  const long long n = eval(modulus_, p.s, 0, 0);
  if (n != p.modulus()) {
    throw Error(ErrorCode::validation_failed, "template modulus " + std::to_string(n) + " differs from 24s+13 = " +
                                                  std::to_string(p.modulus()));
  }
  std::vector<std::vector<long long>> rows[2];
  for (std::size_t g = 0; g < 2; ++g) expand(graphs_[g], p.s, 0, n, rows[g]);
  return CurrentPair{CurrentGraph::from_outgoing_currents(static_cast<int>(n), rows[0]),
                     CurrentGraph::from_outgoing_currents(static_cast<int>(n), rows[1])};
}

std::filesystem::path default_template_path() {
  if (const char* env = std::getenv("BIEMBED_FAMILY_TEMPLATE"); env && *env) return env;
  return std::filesystem::path(BIEMBED_DATA_DIR) / "family.tmpl";
}

CurrentPair build_pair(const FamilyParameter& p, const std::filesystem::path& template_path) {
  return FamilyTemplate::load(template_path).instantiate(p);
}

BiembeddingReport verify_pair(const FamilyParameter& p, const CurrentPair& pair) {
  BiembeddingReport head;
  const int n = p.modulus();
  head.subject = "current-graph family, s=" + std::to_string(p.s) + ", K_" + std::to_string(n);
  head.n = n;
  head.residue_integral = bound_is_integral(n);
  head.bound_value = bigenus_lower_bound(n);

  const auto expected = current_sets(p);
  const CurrentGraph* halves[2] = {&pair.first, &pair.second};
  const DifferenceSet* sets[2] = {&expected.first, &expected.second};
  std::optional<RotationSystem> derived[2];
  bool all_valid = true;
  for (int i = 0; i < 2; ++i) {
    const auto& cg = *halves[i];
    const auto tag = std::string(i == 0 ? "[first]" : "[second]");
    if (cg.modulus() != n) {
      head.add_stage("modulus" + tag, false, "current group Z_" + std::to_string(cg.modulus()));
      all_valid = false;
      continue;
    }
    auto report = validate_current_graph(cg);
    head.add_stage("current_graph_valid" + tag, report.ok(), report.ok() ? "" : report.summary());
    if (!report.ok()) {
      all_valid = false;
      continue;
    }
    const auto labels = current_set(cg);
    head.add_stage("current_set" + tag, labels == *sets[i], std::to_string(labels.size()) + " labels");
    // One face: V - E + 1 = 2 - 2g.
    const long long chi = cg.vertex_count() - static_cast<long long>(cg.edge_count()) + 1;
    const long long cg_genus = (2 - chi) / 2;
    head.add_stage("current_graph_genus" + tag, cg_genus == p.s + 1,
                   "V=" + std::to_string(cg.vertex_count()) + " E=" + std::to_string(cg.edge_count()) +
                       " genus " + std::to_string(cg_genus));
    try {
      derived[i] = derive_embedding(cg);
    } catch (const Error& e) {
      head.add_stage("derive" + tag, false, e.what());
      all_valid = false;
      continue;
    }
    const bool circulant = derived[i]->graph() == make_circulant(*sets[i]);
    head.add_stage("circulant" + tag, circulant, "C(" + std::to_string(n) + ", X" + std::to_string(i + 1) + ")");
  }
  if (!all_valid) return head;

  auto report = verify_biembedding(*derived[0], *derived[1], n);
  report.subject = head.subject;
  head.stages.insert(head.stages.end(), report.stages.begin(), report.stages.end());
  report.stages = std::move(head.stages);
  const long long want = family_genus(p);
  bool genus_ok = report.halves[0].genus == want && report.halves[1].genus == want;
  report.add_stage("genus_formula", genus_ok && want == report.bound_value,
                   "24s^2+13s+1 = " + std::to_string(want) + ", bound " + std::to_string(report.bound_value));
  return report;
}

BiembeddingReport verify_family(const FamilyParameter& p, const std::filesystem::path& template_path) {
  return verify_pair(p, build_pair(p, template_path));
}

}  // namespace biembed
