#include "lindiff/cli/problem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace lindiff::cli {
namespace {

struct Piece {
  std::string_view text;
  SourcePos pos;
};

struct Line {
  std::string key;
  Piece value;
  SourcePos key_pos;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Piece trim(Piece p) {
  std::size_t lead = 0;
  while (lead < p.text.size() && is_space(p.text[lead])) ++lead;
  std::size_t end = p.text.size();
  while (end > lead && is_space(p.text[end - 1])) --end;
  return {p.text.substr(lead, end - lead), {p.pos.line, p.pos.column + lead}};
}

[[noreturn]] void fail(SourcePos pos, const std::string& message) {
  throw ParseError(pos.line, pos.column, message);
}

// Splits at `sep` outside parentheses and brackets; pieces are trimmed.
std::vector<Piece> split_top(Piece p, char sep) {
  std::vector<Piece> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= p.text.size(); ++i) {
    const char c = i < p.text.size() ? p.text[i] : sep;
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && (depth == 0 || i == p.text.size())) {
      out.push_back(trim({p.text.substr(start, i - start), {p.pos.line, p.pos.column + start}}));
      start = i + 1;
    }
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c); });
}

std::size_t parse_count(Piece p, const char* what) {
  p = trim(p);
  if (p.text.empty() || p.text.size() > 6 ||
      !std::all_of(p.text.begin(), p.text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    fail(p.pos, std::string("expected ") + what);
  }
  return std::stoul(std::string(p.text));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view raw = text.substr(start, end - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const Piece whole = trim({raw, {line_no, 1}});
    start = end + 1;
    if (whole.text.empty()) continue;
    const auto colon = whole.text.find(':');
    if (colon == std::string_view::npos) fail(whole.pos, "expected 'section: value'");
    const Piece key = trim({whole.text.substr(0, colon), whole.pos});
    const Piece value = trim({whole.text.substr(colon + 1), {line_no, whole.pos.column + colon + 1}});
    out.push_back({std::string(key.text), value, key.pos});
  }
  return out;
}

class Builder {
 public:
  explicit Builder(std::string_view text) : lines_(split_lines(text)) {
    static const std::set<std::string> known{"field", "derivations", "vars", "point", "eqs", "module",
                                             "gens", "reduce", "leaders", "ranking"};
    static const std::set<std::string> repeatable{"eqs", "gens"};
    for (const Line& l : lines_) {
      if (!known.contains(l.key)) fail(l.key_pos, "unknown section '" + l.key + "'");
      if (!repeatable.contains(l.key) && seen_.contains(l.key)) {
        fail(l.key_pos, "section '" + l.key + "' given twice");
      }
      seen_.insert(l.key);
    }
  }

  ProblemFile build() {
    // Sections are read in dependency order, whatever their order in the file.
    each("field", [&](const Line& l) { field(l.value); });
    each("derivations", [&](const Line& l) { derivations(l.value); });
    finish_field();
    each("vars", [&](const Line& l) { vars(l); });
    each("module", [&](const Line& l) { module(l); });
    each("ranking", [&](const Line& l) { ranking(l.value); });
    each("point", [&](const Line& l) { point(l); });
    each("eqs", [&](const Line& l) { eqs(l); });
    each("gens", [&](const Line& l) { gens(l); });
    each("reduce", [&](const Line& l) { reduce(l); });
    each("leaders", [&](const Line& l) { leaders(l.value); });
    return std::move(out_);
  }

 private:
  template <class F>
  void each(const std::string& key, F&& f) {
    for (const Line& l : lines_) {
      if (l.key == key) f(l);
    }
  }

  void field(Piece v) {
    Piece rest = v;
    const auto deriv = v.text.find("derivations");
    if (deriv != std::string_view::npos) {
      rest = trim({v.text.substr(0, deriv), v.pos});
      Piece tail = trim({v.text.substr(deriv + 11), {v.pos.line, v.pos.column + deriv + 11}});
      if (tail.text.empty() || tail.text.front() != ':') fail(tail.pos, "expected ':' after 'derivations'");
      tail = {tail.text.substr(1), {tail.pos.line, tail.pos.column + 1}};
      derivations(tail);
    }
    if (rest.text.empty() || rest.text.front() != 'Q') fail(rest.pos, "expected a field 'Q' or 'Q(t1,...,tv)'");
    std::vector<std::string> names;
    Piece inner = trim({rest.text.substr(1), {rest.pos.line, rest.pos.column + 1}});
    if (!inner.text.empty()) {
      if (inner.text.front() != '(' || inner.text.back() != ')') fail(inner.pos, "expected '(' variable list ')'");
      const Piece list{inner.text.substr(1, inner.text.size() - 2), {inner.pos.line, inner.pos.column + 1}};
      for (const Piece& name : split_top(list, ',')) {
        if (!is_identifier(name.text)) fail(name.pos, "expected a field variable name");
        if (is_reserved_name(name.text)) fail(name.pos, "'" + std::string(name.text) + "' is reserved for derivations");
        if (std::find(names.begin(), names.end(), name.text) != names.end()) {
          fail(name.pos, "field variable '" + std::string(name.text) + "' repeated");
        }
        names.emplace_back(name.text);
      }
    }
    field_names_ = std::move(names);
    field_pos_ = v.pos;
    out_.field_declared = true;
  }

  void derivations(Piece v) {
    if (m_) fail(v.pos, "number of derivations given twice");
    const std::size_t m = parse_count(v, "a number of derivations");
    if (m < 1) fail(trim(v).pos, "at least one derivation is required");
    m_ = static_cast<int>(m);
    field_pos_ = v.pos;
  }

  void finish_field() {
    if (!out_.field_declared) {
      if (m_ && *m_ != 1) fail(field_pos_, "'derivations' needs a 'field:' line");
      return;
    }
    const int v = static_cast<int>(field_names_.size());
    const int m = m_.value_or(std::max(v, 1));
    if (v > m) {
      fail(field_pos_, std::to_string(v) + " field variables need at least " + std::to_string(v) + " derivations");
    }
    out_.cfg = DiffFieldConfig(m, v);
    out_.field_names = field_names_;
  }

  void check_new_name(const Piece& name, const std::vector<std::string>& taken) {
    if (!is_identifier(name.text)) fail(name.pos, "expected a variable name");
    if (is_reserved_name(name.text)) fail(name.pos, "'" + std::string(name.text) + "' is reserved for derivations");
    const auto& field = out_.field_names;
    if (std::find(field.begin(), field.end(), name.text) != field.end()) {
      fail(name.pos, "'" + std::string(name.text) + "' is already a field variable");
    }
    if (std::find(taken.begin(), taken.end(), name.text) != taken.end()) {
      fail(name.pos, "variable '" + std::string(name.text) + "' repeated");
    }
  }

  void vars(const Line& l) {
    std::vector<std::string> names;
    std::size_t i = 0;
    const std::string_view s = l.value.text;
    while (i < s.size()) {
      if (is_space(s[i]) || s[i] == ',') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < s.size() && !is_space(s[j]) && s[j] != ',') ++j;
      const Piece name{s.substr(i, j - i), {l.value.pos.line, l.value.pos.column + i}};
      check_new_name(name, names);
      names.emplace_back(name.text);
      i = j;
    }
    if (names.empty()) fail(l.value.pos, "expected at least one variable");
    out_.var_names = std::move(names);
  }

  void module(const Line& l) {
    if (seen_.contains("point") || seen_.contains("eqs")) {
      fail(l.key_pos, "'module:' cannot be combined with 'point:' or 'eqs:'");
    }
    const std::size_t n = parse_count(l.value, "a module rank");
    if (n < 1) fail(l.value.pos, "module rank must be positive");
    if (out_.var_names.empty()) {
      out_.var_names = default_component_names(n);
      for (const auto& name : out_.var_names) {
        if (std::find(out_.field_names.begin(), out_.field_names.end(), name) != out_.field_names.end()) {
          fail(l.value.pos, "component name '" + name + "' clashes with a field variable");
        }
      }
    } else if (out_.var_names.size() != n) {
      fail(l.value.pos, "module rank " + std::to_string(n) + " but " + std::to_string(out_.var_names.size()) +
                            " names under 'vars:'");
    }
    out_.module_rank = n;
  }

  void ranking(Piece v) {
    if (v.text == "orderly") {
      out_.ranking = RankingKind::orderly;
    } else if (v.text == "elim" || v.text == "elimination") {
      out_.ranking = RankingKind::elimination;
    } else {
      fail(v.pos, "expected 'orderly' or 'elim'");
    }
  }

  void need_vars(const Line& l) {
    if (out_.var_names.empty()) fail(l.key_pos, "'" + l.key + ":' needs a 'vars:' or 'module:' line");
  }

  void point(const Line& l) {
    need_vars(l);
    const Scope scope = out_.scope();
    std::map<std::string, RatFun> values;
    for (const Piece& item : split_top(l.value, ',')) {
      const auto eq = item.text.find('=');
      if (eq == std::string_view::npos) fail(item.pos, "expected 'name = value'");
      const Piece name = trim({item.text.substr(0, eq), item.pos});
      const Piece expr = trim({item.text.substr(eq + 1), {item.pos.line, item.pos.column + eq + 1}});
      const auto& vars = out_.var_names;
      if (std::find(vars.begin(), vars.end(), name.text) == vars.end()) {
        fail(name.pos, "unknown variable '" + std::string(name.text) + "'");
      }
      if (values.contains(std::string(name.text))) {
        fail(name.pos, "coordinate '" + std::string(name.text) + "' given twice");
      }
      values.emplace(std::string(name.text), parse_field_element(expr.text, scope, expr.pos));
    }
    std::vector<RatFun> coords;
    for (const auto& name : out_.var_names) {
      const auto it = values.find(name);
      if (it == values.end()) fail(l.value.pos, "missing coordinate for '" + name + "'");
      coords.push_back(it->second);
    }
    out_.point = std::move(coords);
  }

  void eqs(const Line& l) {
    need_vars(l);
    const Scope scope = out_.scope();
    for (const Piece& item : split_top(l.value, ';')) {
      if (item.text.empty()) continue;
      out_.equations.push_back(parse_diffpoly(item.text, scope, item.pos));
    }
  }

  ModElement element(const Piece& item) {
    const Scope scope = out_.scope();
    if (item.text.empty() || item.text.front() != '[') return parse_linear_form(item.text, scope, item.pos);
    if (item.text.back() != ']') fail(item.pos, "unterminated '['");
    const Piece inner{item.text.substr(1, item.text.size() - 2), {item.pos.line, item.pos.column + 1}};
    const auto entries = split_top(inner, ',');
    const std::size_t n = out_.var_names.size();
    if (entries.size() != n) {
      fail(item.pos, "expected " + std::to_string(n) + " operator entries, found " + std::to_string(entries.size()));
    }
    std::vector<OrePoly> ops;
    for (const Piece& e : entries) ops.push_back(parse_operator(e.text, scope, e.pos));
    return ModElement::from_operators(ops);
  }

  void gens(const Line& l) {
    if (!out_.module_rank) fail(l.key_pos, "'gens:' needs a 'module:' line");
    for (const Piece& item : split_top(l.value, ';')) {
      if (item.text.empty()) continue;
      out_.generators.push_back(element(item));
    }
  }

  void reduce(const Line& l) {
    need_vars(l);
    out_.reduce_target = element(l.value);
  }

  void leaders(Piece v) {
    Antichain a;
    std::optional<std::size_t> m;
    if (out_.field_declared) m = static_cast<std::size_t>(out_.cfg.num_derivations());
    for (const Piece& comp : split_top(v, ';')) {
      if (comp.text.size() < 2 || comp.text.front() != '[' || comp.text.back() != ']') {
        fail(comp.pos, "expected '[' exponent vectors ']' for each component");
      }
      const Piece inner = trim({comp.text.substr(1, comp.text.size() - 2), {comp.pos.line, comp.pos.column + 1}});
      std::vector<ExponentVector> vectors;
      if (!inner.text.empty()) {
        for (const Piece& item : split_top(inner, ',')) {
          Piece body = item;
          if (!body.text.empty() && body.text.front() == '(') {
            if (body.text.back() != ')') fail(body.pos, "unterminated '('");
            body = {body.text.substr(1, body.text.size() - 2), {body.pos.line, body.pos.column + 1}};
          }
          ExponentVector e;
          for (const Piece& x : split_top(body, ',')) e.push_back(static_cast<std::uint32_t>(parse_count(x, "an exponent")));
          if (!m) m = e.size();
          if (e.size() != *m) {
            fail(item.pos, "exponent vector of length " + std::to_string(e.size()) + ", expected " + std::to_string(*m));
          }
          vectors.push_back(std::move(e));
        }
      }
      a.components.push_back(std::move(vectors));
    }
    a.m = m.value_or(1);
    try {
      validate_antichain(a);
    } catch (const NotAntichain& err) {
      fail(v.pos, err.what());
    }
    out_.leaders = std::move(a);
  }

  std::vector<Line> lines_;
  std::set<std::string> seen_;
  ProblemFile out_;
  std::vector<std::string> field_names_;
  std::optional<int> m_;
  SourcePos field_pos_;
};

}  // namespace

ProblemFile parse_input(std::string_view text) { return Builder(text).build(); }

}  // namespace lindiff::cli
