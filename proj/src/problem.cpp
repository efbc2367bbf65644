#include "inireg/problem.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace inireg {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool is_indented(const std::string& line) {
  return !line.empty() && (line[0] == ' ' || line[0] == '\t');
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

OrderKind parse_kind(const std::string& word, int line) {
  if (word == "lex") return OrderKind::Lex;
  if (word == "grlex") return OrderKind::GrLex;
  if (word == "grevlex") return OrderKind::GrevLex;
  throw ParseError(line, 1, "unknown order kind '" + word + "' (lex, grlex, grevlex)");
}

}  // namespace

TermOrder parse_order_spec(const std::string& text, const Ring& ring, int line, int column) {
  std::string body = trimmed(text);
  auto space = body.find_first_of(" \t");
  std::string kind_word = space == std::string::npos ? body : body.substr(0, space);
  OrderKind kind = parse_kind(kind_word, line);

  std::vector<int> top;
  if (space != std::string::npos) {
    std::string chain = body.substr(space + 1);
    // names separated by '>'
    size_t start = 0;
    while (start <= chain.size()) {
      auto gt = chain.find('>', start);
      std::string name = trimmed(gt == std::string::npos ? chain.substr(start)
                                                         : chain.substr(start, gt - start));
      if (name.empty()) throw ParseError(line, column, "empty variable in priority chain");
      auto idx = ring.index_of(name);
      if (!idx) throw ParseError(line, column, "unknown variable '" + name + "' in order");
      if (std::find(top.begin(), top.end(), *idx) != top.end())
        throw ParseError(line, column, "variable '" + name + "' mentioned twice in order");
      top.push_back(*idx);
      if (gt == std::string::npos) break;
      start = gt + 1;
    }
  }
  return TermOrder::with_top(kind, ring.size(), top);
}

ProblemFile parse_problem(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  std::optional<Ring> ring;
  std::optional<std::string> order_spec;
  int order_line = 0;
  std::vector<std::pair<int, std::string>> generator_lines;
  std::vector<std::pair<int, std::string>> step_lines;

  enum class Section { None, Ideal, Steps } section = Section::None;
  for (size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string raw = strip_comment(lines[i]);
    std::string body = trimmed(raw);
    if (body.empty()) continue;

    if (is_indented(raw)) {
      if (section == Section::Ideal)
        generator_lines.emplace_back(lineno, body);
      else if (section == Section::Steps)
        step_lines.emplace_back(lineno, body);
      else
        throw ParseError(lineno, 1, "indented line outside an ideal: or steps: section");
      continue;
    }

    section = Section::None;
    if (body.rfind("ring:", 0) == 0) {
      if (ring) throw ParseError(lineno, 1, "duplicate ring declaration");
      auto names = split_ws(body.substr(5));
      if (names.empty()) throw ParseError(lineno, 1, "ring declaration needs variables");
      try {
        ring.emplace(names);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, 1, e.what());
      }
    } else if (body.rfind("order:", 0) == 0) {
      if (order_spec) throw ParseError(lineno, 1, "duplicate order declaration");
      order_spec = trimmed(body.substr(6));
      order_line = lineno;
    } else if (body == "ideal:") {
      section = Section::Ideal;
    } else if (body == "steps:") {
      section = Section::Steps;
    } else {
      throw ParseError(lineno, 1, "unknown directive '" + body + "'");
    }
  }

  if (!ring) throw ParseError(static_cast<int>(lines.size()), 1, "missing ring declaration");

  TermOrder order = order_spec ? parse_order_spec(*order_spec, *ring, order_line)
                               : TermOrder::grevlex(ring->size());

  std::vector<Polynomial> generators;
  for (const auto& [lineno, body] : generator_lines)
    generators.push_back(parse_polynomial(body, *ring, lineno));

  std::vector<ProblemFile::Step> steps;
  for (const auto& [lineno, body] : step_lines) {
    if (body.rfind("form", 0) != 0) throw ParseError(lineno, 1, "step lines start with 'form'");
    std::string rest = trimmed(body.substr(4));
    TermOrder step_order = order;
    if (!rest.empty() && rest[0] == '(') {
      auto close = rest.find(')');
      if (close == std::string::npos) throw ParseError(lineno, 1, "unterminated (order: ...)");
      std::string inner = trimmed(rest.substr(1, close - 1));
      if (inner.rfind("order:", 0) != 0)
        throw ParseError(lineno, 1, "expected (order: ...) after form");
      step_order = parse_order_spec(trimmed(inner.substr(6)), *ring, lineno);
      rest = trimmed(rest.substr(close + 1));
    }
    if (rest.empty() || rest[0] != ':') throw ParseError(lineno, 1, "expected ':' after form");
    Polynomial form = parse_polynomial(trimmed(rest.substr(1)), *ring, lineno);
    steps.push_back(ProblemFile::Step{step_order, form});
  }

  return ProblemFile{*ring, order, std::move(generators), std::move(steps)};
}

std::string print_problem(const ProblemFile& problem) {
  std::string out = "ring:";
  for (const auto& name : problem.ring.variables()) out += " " + name;
  out += "\n";
  out += "order: " + problem.order.to_string(problem.ring) + "\n";
  if (!problem.generators.empty()) {
    out += "ideal:\n";
    for (const auto& g : problem.generators)
      out += "  " + g.to_string(problem.ring, problem.order) + "\n";
  }
  if (!problem.steps.empty()) {
    out += "steps:\n";
    for (const auto& s : problem.steps)
      out += "  form(order: " + s.order.to_string(problem.ring) +
             "): " + s.form.to_string(problem.ring, s.order) + "\n";
  }
  return out;
}

}  // namespace inireg
