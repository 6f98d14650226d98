#include "lindiff/cli/commands.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lindiff/dimension.hpp"
#include "lindiff/normalform.hpp"

namespace lindiff::cli {

using json = nlohmann::ordered_json;

std::optional<Command> command_from_name(std::string_view name) {
  if (name == "charset") return Command::charset;
  if (name == "dimpoly") return Command::dimpoly;
  if (name == "decompose") return Command::decompose;
  if (name == "tangent") return Command::tangent;
  if (name == "reduce") return Command::reduce;
  if (name == "count") return Command::count;
  return std::nullopt;
}

std::string_view command_name(Command cmd) {
  switch (cmd) {
    case Command::charset: return "charset";
    case Command::dimpoly: return "dimpoly";
    case Command::decompose: return "decompose";
    case Command::tangent: return "tangent";
    case Command::reduce: return "reduce";
    case Command::count: return "count";
  }
  return "";
}

namespace {

// Input that parses but lacks what the command needs.
class InputError : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

json exact(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string str(const Integer& z) { return z.get_str(); }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string list_or_none(const std::vector<std::string>& items) {
  return items.empty() ? "none" : join(items, ", ");
}

// Results are collected as ordered JSON and rendered as either format.
class Report {
 public:
  Report(Command cmd, const ProblemFile& f) : file_(f) { doc_["command"] = std::string(command_name(cmd)); }

  json& doc() { return doc_; }
  std::ostringstream& text() { return text_; }

  std::string element(const ModElement& w) const { return w.to_string(file_.var_names, file_.field_names); }
  std::string term(const ModTerm& u) const { return to_string(u, file_.var_names); }
  std::string op(const OrePoly& p) const { return p.to_string(file_.field_names); }

  void elements(const std::string& key, const std::vector<ModElement>& ws, const Ranking* rk = nullptr) {
    json arr = json::array();
    text_ << key << ":\n";
    if (ws.empty()) text_ << "  none\n";
    for (const auto& w : ws) {
      const std::string s = rk ? w.to_string(file_.var_names, file_.field_names, *rk) : element(w);
      arr.push_back(s);
      text_ << "  " << s << "\n";
    }
    doc_[key] = std::move(arr);
  }

  void charset(const CharSet& cs) {
    const std::string kind = cs.ranking().is_orderly() ? "orderly" : "elim";
    doc_["ranking"] = kind;
    text_ << "ranking: " << kind << "\n";
    elements("charset", cs.elements(), &cs.ranking());
    std::vector<std::string> leaders;
    for (const auto& u : cs.set.leaders()) leaders.push_back(term(u));
    doc_["leaders"] = leaders;
    doc_["complete"] = cs.complete;
    text_ << "leaders: " << list_or_none(leaders) << "\n";
    text_ << "complete: " << (cs.complete ? "true" : "false") << "\n";
  }

  void polynomial(const NumericalPolynomial& phi) {
    json coeffs = json::array();
    std::vector<std::string> text_coeffs;
    for (const auto& a : phi.binomial_coeffs()) {
      coeffs.push_back(exact(a));
      text_coeffs.push_back(str(a));
    }
    doc_["dimension_polynomial"] = {{"text", phi.to_string()},
                                    {"binomial_coeffs", std::move(coeffs)},
                                    {"valid_from", phi.valid_from()}};
    text_ << "dimension_polynomial: " << phi.to_string() << " (valid for t >= " << phi.valid_from() << ")\n";
    text_ << "binomial_coeffs: " << (text_coeffs.empty() ? "none" : join(text_coeffs, " ")) << "\n";
  }

  void dimension(const DimensionReport& r) {
    polynomial(r.dimpoly);
    doc_["diff_dimension"] = exact(r.diff_dimension);
    text_ << "diff_dimension: " << str(r.diff_dimension) << "\n";
    if (r.type) {
      doc_["type"] = *r.type;
      text_ << "type: " << *r.type << "\n";
    } else {
      doc_["type"] = nullptr;
      text_ << "type: none\n";
    }
    doc_["typical_height"] = exact(r.typical_height);
    text_ << "typical_height: " << str(r.typical_height) << "\n";
    std::vector<std::string> free;
    for (const auto i : r.free_components) free.push_back(file_.var_names[i]);
    doc_["free_components"] = free;
    text_ << "free_components: " << list_or_none(free) << "\n";
    optional_integer("below_leader_count", r.below_leader_count);
    optional_integer("free_term", r.free_term);
  }

  void optional_integer(const std::string& key, const std::optional<Integer>& v) {
    if (v) {
      doc_[key] = exact(*v);
      text_ << key << ": " << str(*v) << "\n";
    } else {
      doc_[key] = nullptr;
      text_ << key << ": none\n";
    }
  }

  void tangent(const std::optional<TangentClass>& tc) {
    if (!tc) {
      doc_["tangent"] = nullptr;
      text_ << "tangent: unsupported for several derivations\n";
      return;
    }
    json degrees = json::array();
    std::vector<std::string> text_degrees;
    for (const auto deg : tc->torsion_degrees) {
      degrees.push_back(deg);
      text_degrees.push_back(std::to_string(deg));
    }
    doc_["tangent"] = {{"d", tc->d}, {"k", tc->k}, {"torsion_degrees", std::move(degrees)}};
    text_ << "tangent: K^" << tc->d << " x C^" << tc->k << " (d = " << tc->d << ", k = " << tc->k << ")\n";
    text_ << "torsion_degrees: " << list_or_none(text_degrees) << "\n";
  }

  std::string render(Format format) const {
    if (format == Format::json) return doc_.dump(2) + "\n";
    return text_.str();
  }

 private:
  const ProblemFile& file_;
  json doc_ = json::object();
  std::ostringstream text_;
};

struct Presentation {
  std::size_t n;
  std::vector<ModElement> relations;
  bool from_variety;
};

void check_point(const ProblemFile& f) {
  const VarietyPoint x{*f.point};
  for (std::size_t i = 0; i < f.equations.size(); ++i) {
    const RatFun value = eval_diffpoly(f.equations[i], x);
    if (!value.is_zero()) throw PointNotOnVariety(i, value.to_string(f.field_names));
  }
}

void require_variety(const ProblemFile& f) {
  if (!f.point) throw InputError("missing 'point:' section");
  if (f.equations.empty()) throw InputError("missing 'eqs:' section");
}

Presentation presentation(const ProblemFile& f) {
  if (f.has_module()) return {*f.module_rank, f.generators, false};
  if (!f.has_variety()) throw InputError("input needs 'eqs:' with 'point:', or 'module:' with 'gens:'");
  require_variety(f);
  check_point(f);
  const VarietyPoint x{*f.point};
  Presentation p{f.var_names.size(), {}, true};
  for (const auto& eq : f.equations) p.relations.push_back(linearize_at_point(eq, x));
  return p;
}

Ranking chosen_ranking(const ProblemFile& f, const Options& opts, std::size_t n) {
  const RankingKind kind = opts.ranking.value_or(f.ranking.value_or(RankingKind::orderly));
  return kind == RankingKind::orderly ? Ranking::orderly(n) : Ranking::elimination(n);
}

void exponent_vectors(std::size_t m, std::uint32_t budget, std::vector<std::uint32_t>& cur,
                      std::vector<DerivMonomial>& out) {
  if (cur.size() == m) {
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e <= budget; ++e) {
    cur.push_back(e);
    exponent_vectors(m, budget - e, cur, out);
    cur.pop_back();
  }
}

// Terms of order <= k that are not derivatives of a leader; a K-basis of M_k
// for an orderly characteristic set.
void order_bound_dump(Report& rep, const CharSet& orderly, std::uint32_t k) {
  const std::size_t m = static_cast<std::size_t>(orderly.set.config.num_derivations());
  std::vector<DerivMonomial> thetas;
  std::vector<std::uint32_t> cur;
  exponent_vectors(m, k, cur, thetas);
  const auto leaders = orderly.set.leaders();
  std::vector<ModTerm> basis;
  for (std::size_t i = 0; i < orderly.rank(); ++i) {
    for (const auto& theta : thetas) {
      const ModTerm term{i, theta};
      const bool led = std::any_of(leaders.begin(), leaders.end(),
                                   [&](const ModTerm& u) { return is_derivative_of(term, u); });
      if (!led) basis.push_back(term);
    }
  }
  std::sort(basis.begin(), basis.end(),
            [&](const ModTerm& a, const ModTerm& b) { return orderly.ranking().less(a, b); });
  std::vector<std::string> names;
  for (const auto& u : basis) names.push_back(rep.term(u));
  rep.doc()["order_bound"] = {{"k", k}, {"dimension", basis.size()}, {"basis", names}};
  rep.text() << "basis of M_" << k << " (dimension " << basis.size() << "): " << list_or_none(names) << "\n";
}

CharSet orderly_charset(const ProblemFile& f, const Presentation& p, const Ranking& rk, const CharSet& cs) {
  if (rk.is_orderly()) return cs;
  return characteristic_set(f.cfg, p.relations, Ranking(RankingKind::orderly, rk.component_order()));
}

void run_charset(Report& rep, const ProblemFile& f, const Options& opts) {
  const Presentation p = presentation(f);
  const Ranking rk = chosen_ranking(f, opts, p.n);
  if (p.from_variety) rep.elements("linearization", p.relations);
  const CharSet cs = characteristic_set(f.cfg, p.relations, rk);
  rep.charset(cs);
  if (opts.order_bound) order_bound_dump(rep, orderly_charset(f, p, rk, cs), *opts.order_bound);
}

void run_dimpoly(Report& rep, const ProblemFile& f, const Options& opts) {
  const Presentation p = presentation(f);
  const Ranking rk = chosen_ranking(f, opts, p.n);
  const CharSet cs = characteristic_set(f.cfg, p.relations, Ranking(RankingKind::orderly, rk.component_order()));
  rep.dimension(dimension_report(cs));
  if (opts.order_bound) order_bound_dump(rep, cs, *opts.order_bound);
}

void run_decompose(Report& rep, const ProblemFile& f, const Options&) {
  if (f.cfg.num_derivations() != 1) throw Unsupported("decompose requires a single derivation (m = 1)");
  const Presentation p = presentation(f);
  const OreMatrix r = OreMatrix::from_relations(f.cfg, p.n, p.relations);
  const Diagonalization dz = diagonalize(r);
  const bool verified = dz.u * r * dz.v == dz.d && dz.d.is_diagonal() &&
                        dz.u * dz.u_inv == OreMatrix::identity(f.cfg, r.rows()) &&
                        dz.u_inv * dz.u == OreMatrix::identity(f.cfg, r.rows()) &&
                        dz.v * dz.v_inv == OreMatrix::identity(f.cfg, r.cols()) &&
                        dz.v_inv * dz.v == OreMatrix::identity(f.cfg, r.cols());
  if (!verified) throw std::logic_error("diagonalization failed its re-multiplication check");

  std::vector<std::string> diagonal;
  TangentClass tc;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(r.rows(), r.cols()); ++i) {
    const OrePoly& entry = dz.d.at(i, i);
    diagonal.push_back(rep.op(entry));
    if (entry.is_zero()) continue;
    ++nonzero;
    if (entry.degree() > 0) {
      tc.torsion_degrees.push_back(static_cast<std::size_t>(entry.degree()));
      tc.k += static_cast<std::size_t>(entry.degree());
    }
  }
  tc.d = r.cols() - nonzero;
  rep.doc()["diagonal"] = diagonal;
  rep.text() << "diagonal: " << list_or_none(diagonal) << "\n";
  rep.doc()["free_rank"] = tc.d;
  rep.doc()["torsion_dimension"] = tc.k;
  rep.doc()["torsion_degrees"] = tc.torsion_degrees;
  rep.doc()["verified"] = true;
  std::vector<std::string> degrees;
  for (const auto deg : tc.torsion_degrees) degrees.push_back(std::to_string(deg));
  rep.text() << "free_rank: " << tc.d << "\n"
             << "torsion_dimension: " << tc.k << "\n"
             << "torsion_degrees: " << list_or_none(degrees) << "\n"
             << "verified: true\n";
}

void run_tangent(Report& rep, const ProblemFile& f, const Options& opts) {
  if (f.has_module()) throw InputError("tangent needs 'eqs:' and 'point:'");
  require_variety(f);
  check_point(f);
  const Ranking rk = chosen_ranking(f, opts, f.var_names.size());
  const TangentReport r = tangent_pipeline(f.equations, VarietyPoint{*f.point}, rk);
  rep.elements("linearization", r.linearizations);
  rep.charset(r.charset);
  rep.dimension(r.dimension);
  rep.tangent(r.tangent);
  if (opts.order_bound) {
    const Presentation p{f.var_names.size(), r.linearizations, true};
    order_bound_dump(rep, orderly_charset(f, p, rk, r.charset), *opts.order_bound);
  }
}

void run_reduce(Report& rep, const ProblemFile& f, const Options& opts) {
  if (!f.reduce_target) throw InputError("missing 'reduce:' section");
  const Presentation p = presentation(f);
  const Ranking rk = chosen_ranking(f, opts, p.n);
  const CharSet cs = characteristic_set(f.cfg, p.relations, rk);
  rep.charset(cs);
  const ModElement nf = reduce(*f.reduce_target, cs.elements(), rk);
  rep.doc()["input"] = rep.element(*f.reduce_target);
  rep.doc()["normal_form"] = rep.element(nf);
  rep.doc()["member"] = nf.is_zero();
  rep.text() << "input: " << rep.element(*f.reduce_target) << "\n"
             << "normal_form: " << rep.element(nf) << "\n"
             << "member: " << (nf.is_zero() ? "true" : "false") << "\n";
  if (opts.order_bound) order_bound_dump(rep, orderly_charset(f, p, rk, cs), *opts.order_bound);
}

void run_count(Report& rep, const ProblemFile& f, const Options& opts) {
  if (!f.leaders) throw InputError("missing 'leaders:' section");
  const NumericalPolynomial phi = count_cofilter(*f.leaders);
  const int m = static_cast<int>(f.leaders->m);
  json coeffs = json::array();
  for (const auto& a : phi.binomial_coeffs()) coeffs.push_back(exact(a));
  const TypeAndHeights th = type_and_heights(phi, m);
  rep.doc()["m"] = m;
  rep.doc()["dimension_polynomial"] = {{"text", phi.to_string()},
                                       {"binomial_coeffs", std::move(coeffs)},
                                       {"valid_from", phi.valid_from()}};
  rep.doc()["type"] = th.type ? json(*th.type) : json(nullptr);
  rep.doc()["typical_height"] = exact(th.typical_height);
  rep.doc()["diff_height"] = exact(th.diff_height);
  rep.text() << phi.to_string() << " (valid for t >= " << phi.valid_from() << ")\n";
  if (opts.order_bound) {
    const Integer value = brute_count(*f.leaders, *opts.order_bound);
    rep.doc()["order_bound"] = {{"k", *opts.order_bound}, {"count", exact(value)}};
    rep.text() << "count at t = " << *opts.order_bound << ": " << str(value) << "\n";
  }
}

CommandResult failure(int code, const std::string& message) {
  return CommandResult{code, "", "error: " + message + "\n"};
}

}  // namespace

CommandResult run_command(Command cmd, const ProblemFile& file, const Options& opts) {
  Report rep(cmd, file);
  try {
    switch (cmd) {
      case Command::charset: run_charset(rep, file, opts); break;
      case Command::dimpoly: run_dimpoly(rep, file, opts); break;
      case Command::decompose: run_decompose(rep, file, opts); break;
      case Command::tangent: run_tangent(rep, file, opts); break;
      case Command::reduce: run_reduce(rep, file, opts); break;
      case Command::count: run_count(rep, file, opts); break;
    }
  } catch (const PointNotOnVariety& e) {
    return failure(exit_codes::not_on_variety, e.what());
  } catch (const Unsupported& e) {
    return failure(exit_codes::unsupported, e.what());
  } catch (const UnsupportedForPartial& e) {
    return failure(exit_codes::unsupported, e.what());
  } catch (const OrderlyRequired& e) {
    return failure(exit_codes::unsupported, e.what());
  } catch (const InputError& e) {
    return failure(exit_codes::parse_error, e.what());
  } catch (const NotAntichain& e) {
    return failure(exit_codes::parse_error, e.what());
  } catch (const std::exception& e) {
    return failure(exit_codes::failure, e.what());
  }
  return CommandResult{exit_codes::ok, rep.render(opts.format), ""};
}

CommandResult run_command(Command cmd, std::string_view text, const Options& opts) {
  ProblemFile file;
  try {
    file = parse_input(text);
  } catch (const ParseError& e) {
    return failure(exit_codes::parse_error, e.what());
  }
  return run_command(cmd, file, opts);
}

}  // namespace lindiff::cli
