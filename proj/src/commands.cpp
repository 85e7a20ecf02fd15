#include "credal/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "credal/exchangeability.hpp"
#include "json.hpp"

namespace credal {
namespace {

struct Field {
  std::string key;
  std::string value;
  bool boolean = false;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::vector<Field> fields;
  std::vector<Table> tables;

  void add(std::string key, std::string value) { fields.push_back({std::move(key), std::move(value)}); }
  void add(std::string key, const Rational& value) { add(std::move(key), to_string(value)); }
  void flag(std::string key, bool value) { fields.push_back({std::move(key), value ? "true" : "false", true}); }
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_table_text(std::ostringstream& os, const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    os << s << '\n';
  };
  os << '[' << t.name << "]\n";
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

std::string render(const Report& r, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Text: {
      for (const auto& f : r.fields) os << f.key << ": " << f.value << '\n';
      for (const auto& t : r.tables) render_table_text(os, t);
      break;
    }
    case OutputFormat::Csv: {
      if (r.tables.empty()) {
        os << "key,value\n";
        for (const auto& f : r.fields) os << csv_cell(f.key) << ',' << csv_cell(f.value) << '\n';
        break;
      }
      bool first = true;
      for (const auto& t : r.tables) {
        if (!first) os << '\n';
        first = false;
        if (r.tables.size() > 1) os << "# " << t.name << '\n';
        for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << csv_cell(t.columns[c]);
        os << '\n';
        for (const auto& row : t.rows) {
          for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
          os << '\n';
        }
      }
      break;
    }
    case OutputFormat::Json: {
      nlohmann::ordered_json root = nlohmann::ordered_json::object();
      for (const auto& f : r.fields) {
        if (f.boolean) root[f.key] = f.value == "true";
        else root[f.key] = f.value;
      }
      for (const auto& t : r.tables) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
          nlohmann::ordered_json obj = nlohmann::ordered_json::object();
          for (std::size_t c = 0; c < row.size(); ++c) obj[t.columns[c]] = row[c];
          rows.push_back(obj);
        }
        root[t.name] = rows;
      }
      os << root.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

// Wide table: one row per domain point, one column per vertex.
Table vertex_table(std::string name, const CredalLowerPrevision& model,
                   const std::vector<std::string>& names) {
  Table t{std::move(name), {"point"}, {}};
  for (const auto& n : names) t.columns.push_back(n);
  const auto& dom = model.domain();
  for (std::size_t i = 0; i < dom.size(); ++i) {
    std::vector<std::string> row{dom.point_label(i)};
    for (const auto& v : model.vertices()) row.push_back(to_string(v[i]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table gamble_table(std::string name, const std::string& value_column, const Gamble& g) {
  Table t{std::move(name), {"point", value_column}, {}};
  for (std::size_t i = 0; i < g.size(); ++i) t.rows.push_back({g.domain().point_label(i), to_string(g[i])});
  return t;
}

template <typename T>
const T& need(const std::optional<T>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required flag --") + flag);
  return *value;
}

const CredalSection& need_credal(const ModelDocument& doc) {
  if (!doc.credal) throw ValidationError("model has no 'credal' section");
  return *doc.credal;
}

const SimplexSection& need_simplex(const ModelDocument& doc) {
  if (!doc.simplex_lp) throw ValidationError("model has no 'simplex_lp' section");
  return *doc.simplex_lp;
}

Expression expression_flag(const ModelDocument& doc, const CommandOptions& o) {
  const auto& h = need(o.h, "h");
  if (auto it = doc.exprs.find(h); it != doc.exprs.end()) return it->second;
  return Expression::parse(h, doc.space);
}

SimplexPoint theta_flag(const ModelDocument& doc, const CommandOptions& o) {
  const auto& text = need(o.theta, "theta");
  std::vector<Rational> coords(doc.space.size(), Rational(0));
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ValidationError("--theta expects label=value pairs, got '" + part + "'");
    coords[doc.space.index_of(part.substr(0, eq))] = parse_rational(part.substr(eq + 1));
  }
  return SimplexPoint(doc.space, std::move(coords));
}

Table coefficient_table(const BernsteinPoly& p) {
  return gamble_table("coefficients", "coefficient", p.coefficients());
}

using Handler = std::function<Report(const ModelDocument&, const CommandOptions&)>;

const std::map<std::string, Handler, std::less<>>& handlers() {
  static const std::map<std::string, Handler, std::less<>> table{
      {"eval-lower",
       [](const ModelDocument& d, const CommandOptions& o) {
         Report r;
         r.add("lower", evaluate_lower(need_credal(d).model, d.gamble(need(o.gamble, "gamble"))));
         return r;
       }},
      {"eval-upper",
       [](const ModelDocument& d, const CommandOptions& o) {
         Report r;
         r.add("upper", evaluate_upper(need_credal(d).model, d.gamble(need(o.gamble, "gamble"))));
         return r;
       }},
      {"natural-extension",
       [](const ModelDocument& d, const CommandOptions& o) {
         Report r;
         r.add("natural_extension", natural_extension(d.assessment_set(), d.gamble(need(o.gamble, "gamble"))));
         return r;
       }},
      {"check-sure-loss",
       [](const ModelDocument& d, const CommandOptions&) {
         Report r;
         r.flag("avoids_sure_loss", avoids_sure_loss(d.assessment_set()));
         return r;
       }},
      {"check-coherence",
       [](const ModelDocument& d, const CommandOptions&) {
         auto report = check_coherence(d.assessment_set());
         Report r;
         r.flag("avoids_sure_loss", report.avoids_sure_loss);
         r.flag("coherent", report.coherent);
         if (!report.corrections.empty()) {
           Table t{"corrections", {"index", "gamble", "assessed", "natural_extension"}, {}};
           for (const auto& c : report.corrections)
             t.rows.push_back({std::to_string(c.index), d.assessments->items[c.index].gamble,
                               to_string(c.assessed), to_string(c.extended)});
           r.tables.push_back(std::move(t));
         }
         return r;
       }},
      {"check-exchangeability",
       [](const ModelDocument& d, const CommandOptions&) {
         const auto& c = need_credal(d);
         auto report = is_exchangeable(c.model);
         Report r;
         r.flag("exchangeable", report.exchangeable);
         if (report.witness) {
           const auto& w = *report.witness;
           const auto& dom = c.model.domain();
           const auto& p = c.model.vertices()[w.vertex_index];
           auto z = dom.tuple_at(w.point);
           std::swap(z[w.position], z[w.position + 1]);
           auto swapped = dom.index_of_tuple(z);
           r.add("witness_vertex", c.vertex_names[w.vertex_index]);
           r.add("transposition", "(" + std::to_string(w.position + 1) + " " + std::to_string(w.position + 2) + ")");
           r.add("point", dom.point_label(w.point));
           r.add("mass", p[w.point]);
           r.add("swapped_point", dom.point_label(swapped));
           r.add("swapped_mass", p[swapped]);
         }
         return r;
       }},
      {"muhy",
       [](const ModelDocument& d, const CommandOptions& o) {
         const auto& f = d.gamble(need(o.gamble, "gamble"));
         Report r;
         r.tables.push_back(gamble_table("muhy", "muhy", muhy_gamble(f, o.cap)));
         return r;
       }},
      {"count-dist",
       [](const ModelDocument& d, const CommandOptions& o) {
         const auto& c = need_credal(d);
         Report r;
         r.tables.push_back(vertex_table("count_distribution", count_distribution(c.model, o.cap), c.vertex_names));
         return r;
       }},
      {"from-count",
       [](const ModelDocument& d, const CommandOptions& o) {
         const auto& c = need_credal(d);
         Report r;
         r.tables.push_back(vertex_table("exchangeable", exchangeable_from_count(c.model, o.cap), c.vertex_names));
         return r;
       }},
      {"marginal",
       [](const ModelDocument& d, const CommandOptions& o) {
         const auto& c = need_credal(d);
         Report r;
         r.tables.push_back(vertex_table("marginal", marginal(c.model, need(o.n, "n")), c.vertex_names));
         return r;
       }},
      {"bernstein-eval",
       [](const ModelDocument& d, const CommandOptions& o) {
         Report r;
         r.add("value", eval(d.poly(need(o.poly, "poly")).bernstein, theta_flag(d, o)));
         return r;
       }},
      {"bernstein-elevate",
       [](const ModelDocument& d, const CommandOptions& o) {
         auto p = elevate_to(d.poly(need(o.poly, "poly")).bernstein, need(o.n, "n"));
         Report r;
         r.add("degree", std::to_string(p.degree()));
         r.tables.push_back(coefficient_table(p));
         return r;
       }},
      {"bernstein-bounds",
       [](const ModelDocument& d, const CommandOptions& o) {
         auto p = d.poly(need(o.poly, "poly")).bernstein;
         if (o.n) p = elevate_to(p, *o.n);
         auto b = bounds(p);
         Report r;
         r.add("degree", std::to_string(p.degree()));
         r.add("lower", b.lower);
         r.add("upper", b.upper);
         return r;
       }},
      {"bernstein-from-monomials",
       [](const ModelDocument& d, const CommandOptions& o) {
         const auto& entry = d.poly(need(o.poly, "poly"));
         if (!entry.monomials) throw ValidationError("polynomial '" + *o.poly + "' is not in monomial form");
         auto p = from_monomials(*entry.monomials, o.n.value_or(entry.monomials->total_degree()));
         Report r;
         r.add("degree", std::to_string(p.degree()));
         r.tables.push_back(coefficient_table(p));
         return r;
       }},
      {"represent-eval",
       [](const ModelDocument& d, const CommandOptions& o) {
         Report r;
         if (o.gamble) {
           const auto& f = d.gamble(*o.gamble);
           if (d.simplex_lp) r.add("lower", natural_extension_cylinder(d.simplex_lp->model, f));
           else if (d.family) r.add("lower", natural_extension_cylinder(*d.family, f));
           else throw ValidationError("model has neither 'simplex_lp' nor 'family'");
           return r;
         }
         const auto& p = d.poly(need(o.poly, "poly")).bernstein;
         if (d.simplex_lp) r.add("lower", r_eval(d.simplex_lp->model, p));
         else if (d.family) r.add("lower", r_from_family(*d.family, p));
         else throw ValidationError("model has neither 'simplex_lp' nor 'family'");
         return r;
       }},
      {"represent-family",
       [](const ModelDocument& d, const CommandOptions& o) {
         const auto& s = need_simplex(d);
         auto level = family_from_r(s.model, need(o.n, "n"), o.cap);
         Report r;
         r.tables.push_back(vertex_table("counts", level.counts, s.vertex_names));
         r.tables.push_back(vertex_table("tuples", level.tuples, s.vertex_names));
         return r;
       }},
      {"check-consistency",
       [](const ModelDocument& d, const CommandOptions&) {
         if (!d.family) throw ValidationError("model has no 'family' section");
         auto report = check_time_consistency(*d.family);
         Report r;
         r.flag("consistent", report.consistent);
         if (report.witness) {
           const auto& w = *report.witness;
           r.add("level", std::to_string(w.level));
           r.add("upper_level", std::to_string(w.upper_level));
           r.add("level_lower", w.level_value);
           r.add("pushed_lower", w.pushed_value);
           r.tables.push_back(gamble_table("witness", "h", w.gamble));
         }
         return r;
       }},
      {"freq",
       [](const ModelDocument& d, const CommandOptions& o) {
         Report r;
         r.add("value", frequency_prevision(need_simplex(d).model, expression_flag(d, o), need(o.n, "n")));
         return r;
       }},
      {"converge",
       [](const ModelDocument& d, const CommandOptions& o) {
         auto ns = parse_range(need(o.ns, "ns"));
         auto rows = convergence_table(need_simplex(d).model, expression_flag(d, o), ns);
         bool reference = !rows.empty() && rows.front().reference.has_value();
         Table t{"convergence", {"n", "value"}, {}};
         if (reference) {
           t.columns.push_back("reference");
           t.columns.push_back("gap");
         }
         for (const auto& row : rows) {
           std::vector<std::string> cells{std::to_string(row.n), to_string(row.value)};
           if (reference) {
             cells.push_back(to_string(*row.reference));
             cells.push_back(to_string(*row.gap));
           }
           t.rows.push_back(std::move(cells));
         }
         Report r;
         r.tables.push_back(std::move(t));
         return r;
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "eval-lower",        "eval-upper",         "natural-extension", "check-coherence",
      "check-sure-loss",   "check-exchangeability", "muhy",          "count-dist",
      "from-count",        "marginal",           "bernstein-eval",    "bernstein-elevate",
      "bernstein-bounds",  "bernstein-from-monomials", "represent-eval", "represent-family",
      "check-consistency", "freq",               "converge"};
  return names;
}

bool is_command(std::string_view name) { return handlers().find(name) != handlers().end(); }

std::string usage_text() {
  std::ostringstream os;
  os << "usage: credal <command> --model <path> [flags]\n\ncommands:\n";
  for (const auto& n : command_names()) os << "  " << n << '\n';
  os << "\nflags:\n"
        "  --model <path>   model document (JSON)\n"
        "  --gamble <name>  gamble from the model's \"gambles\" section\n"
        "  --poly <name>    polynomial from the model's \"polys\" section\n"
        "  --h <expr>       expression text, or a name from \"exprs\"\n"
        "  --theta <pt>     simplex point, e.g. a=1/3,b=2/3\n"
        "  --n <int>        sample size / target degree\n"
        "  --ns <range>     list of sizes, e.g. 1..8 or 2,4,8\n"
        "  --json | --csv   machine-readable output\n"
        "  --cap <int>      enumeration cap (default 1000000)\n";
  return os.str();
}

std::vector<unsigned> parse_range(std::string_view text) {
  std::vector<unsigned> out;
  auto number = [&](std::string_view s) -> unsigned {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw UsageError("invalid range element '" + std::string(s) + "'");
    return static_cast<unsigned>(std::stoul(std::string(s)));
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (auto dots = part.find(".."); dots != std::string_view::npos) {
      unsigned lo = number(part.substr(0, dots)), hi = number(part.substr(dots + 2));
      if (lo > hi) throw UsageError("empty range '" + std::string(part) + "'");
      for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(number(part));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

CommandOutput dispatch(std::string_view command, const ModelDocument& doc, const CommandOptions& options) {
  CommandOutput result;
  auto it = handlers().find(command);
  if (it == handlers().end()) {
    result.exit_code = kExitUsage;
    result.err = "unknown command '" + std::string(command) + "'\n" + usage_text();
    return result;
  }
  try {
    result.out = render(it->second(doc, options), options.format);
  } catch (const UsageError& e) {
    result.exit_code = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const CapacityError& e) {
    result.exit_code = kExitCapacity;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const ValidationError& e) {
    result.exit_code = kExitValidation;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kExitInternal;
    result.err = std::string("internal error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace credal
