#include "credal/model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace credal {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

// Re-throws validation errors with the JSON path prepended, keeping the type.
template <typename Fn>
auto at_path(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InvalidCategoryError& e) {
    throw InvalidCategoryError(path + ": " + e.what());
  } catch (const SureLossError& e) {
    throw SureLossError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object()) throw ValidationError("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(std::string("missing field '") + key + "'");
  return *it;
}

Rational read_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.dump(), 10));
  throw ValidationError("rationals must be strings like \"3/10\" or integers, got " + v.dump());
}

unsigned read_unsigned(const json& v) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ValidationError("expected a non-negative integer, got " + v.dump());
  return v.get<unsigned>();
}

Domain read_domain(const json& v, const CategorySpace& space, std::size_t cap) {
  auto kind = require(v, "kind").get<std::string>();
  unsigned n = at_path("n", [&] { return read_unsigned(require(v, "n")); });
  if (kind == "tuples") return Domain::tuples(space, n, cap);
  if (kind == "counts") return Domain::counts(space, n, cap);
  throw ValidationError("domain kind must be \"tuples\" or \"counts\", got \"" + kind + "\"");
}

std::vector<unsigned> read_counts(const json& v, const CategorySpace& space) {
  if (!v.is_object()) throw ValidationError("count vectors are objects like {\"a\": 1}, got " + v.dump());
  std::vector<unsigned> counts(space.size(), 0);
  for (auto it = v.begin(); it != v.end(); ++it)
    counts[space.index_of(it.key())] = at_path(it.key(), [&] { return read_unsigned(it.value()); });
  return counts;
}

std::size_t read_point(const json& v, const Domain& dom) {
  if (dom.is_tuples()) {
    if (!v.is_array()) throw ValidationError("tuples are arrays of labels, got " + v.dump());
    std::vector<std::size_t> entries;
    for (const auto& e : v) entries.push_back(dom.space().index_of(e.get<std::string>()));
    if (entries.size() != dom.length())
      throw ValidationError("tuple " + v.dump() + " does not have length " + std::to_string(dom.length()));
    return dom.index_of_tuple(entries);
  }
  auto counts = read_counts(v, dom.space());
  unsigned total = 0;
  for (auto c : counts) total += c;
  if (total != dom.length())
    throw ValidationError("count vector " + v.dump() + " does not sum to " + std::to_string(dom.length()));
  return dom.index_of_counts(counts);
}

ordered_json write_point(const Domain& dom, std::size_t index) {
  if (dom.is_tuples()) {
    ordered_json arr = ordered_json::array();
    for (auto e : dom.tuple_at(index)) arr.push_back(dom.space().label(e));
    return arr;
  }
  ordered_json obj = ordered_json::object();
  const auto& c = dom.counts_at(index);
  for (std::size_t x = 0; x < c.size(); ++x)
    if (c[x] != 0) obj[dom.space().label(x)] = c[x];
  return obj;
}

// A value table is either {"values": [...]} in canonical order or
// {"entries": [[point, value], ...], "default": value}.
std::vector<Rational> read_table(const json& v, const Domain& dom) {
  if (!v.is_object()) throw ValidationError("expected a table object");
  if (v.contains("values")) {
    const auto& values = v.at("values");
    if (!values.is_array() || values.size() != dom.size())
      throw ValidationError("'values' must list " + std::to_string(dom.size()) + " entries");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < values.size(); ++i)
      out.push_back(at_path("values[" + std::to_string(i) + "]", [&] { return read_rational(values[i]); }));
    return out;
  }
  Rational fill = v.contains("default") ? at_path("default", [&] { return read_rational(v.at("default")); })
                                        : Rational(0);
  std::vector<Rational> out(dom.size(), fill);
  std::set<std::size_t> seen;
  const auto& entries = require(v, "entries");
  if (!entries.is_array()) throw ValidationError("'entries' must be an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    at_path("entries[" + std::to_string(i) + "]", [&] {
      const auto& e = entries[i];
      if (!e.is_array() || e.size() != 2) throw ValidationError("entries are [point, value] pairs");
      auto index = read_point(e[0], dom);
      if (!seen.insert(index).second)
        throw ValidationError("point " + dom.point_label(index) + " listed twice");
      out[index] = read_rational(e[1]);
      return 0;
    });
  }
  return out;
}

ordered_json write_table(const Domain& dom, const std::vector<Rational>& values) {
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) entries.push_back(ordered_json::array({write_point(dom, i), to_string(values[i])}));
  ordered_json t;
  t["entries"] = entries;
  return t;
}

ordered_json write_domain(const Domain& dom) {
  ordered_json d;
  d["kind"] = dom.is_tuples() ? "tuples" : "counts";
  d["n"] = dom.length();
  return d;
}

std::vector<LinearPrevision> read_vertices(const json& list, const Domain& dom,
                                           std::vector<std::string>& names) {
  if (!list.is_array() || list.empty()) throw ValidationError("'vertices' must be a non-empty array");
  std::vector<LinearPrevision> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& v = list[i];
    std::string name = v.is_object() && v.contains("name") ? v.at("name").get<std::string>()
                                                           : "v" + std::to_string(i + 1);
    std::string path = "vertices[" + std::to_string(i) + "] (" + name + ")";
    out.push_back(at_path(path, [&] { return LinearPrevision(dom, read_table(v, dom)); }));
    names.push_back(std::move(name));
  }
  return out;
}

ordered_json write_vertices(const CredalLowerPrevision& model, const std::vector<std::string>& names) {
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < model.vertices().size(); ++i) {
    ordered_json v;
    v["name"] = names[i];
    v["entries"] = write_table(model.domain(), model.vertices()[i].mass())["entries"];
    list.push_back(v);
  }
  return list;
}

SimplexPoint read_theta(const json& v, const CategorySpace& space) {
  if (!v.is_object()) throw ValidationError("theta must be an object like {\"a\": \"1/3\"}");
  std::vector<Rational> coords(space.size(), Rational(0));
  for (auto it = v.begin(); it != v.end(); ++it)
    coords[space.index_of(it.key())] = at_path(it.key(), [&] { return read_rational(it.value()); });
  return SimplexPoint(space, std::move(coords));
}

ordered_json write_theta(const SimplexPoint& theta) {
  ordered_json obj = ordered_json::object();
  for (std::size_t x = 0; x < theta.coords().size(); ++x)
    if (theta[x] != 0) obj[theta.space().label(x)] = to_string(theta[x]);
  return obj;
}

PolyEntry read_poly(const json& v, const CategorySpace& space, std::size_t cap) {
  auto form = v.contains("form") ? v.at("form").get<std::string>() : std::string("monomial");
  if (form == "bernstein") {
    unsigned degree = at_path("degree", [&] { return read_unsigned(require(v, "degree")); });
    auto dom = Domain::counts(space, degree, cap);
    return PolyEntry{std::nullopt, BernsteinPoly(Gamble(dom, read_table(v, dom)))};
  }
  if (form != "monomial") throw ValidationError("poly form must be \"monomial\" or \"bernstein\"");
  const auto& terms = require(v, "terms");
  if (!terms.is_array()) throw ValidationError("'terms' must be an array");
  std::vector<MonomialTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out.push_back(at_path("terms[" + std::to_string(i) + "]", [&] {
      const auto& t = terms[i];
      auto exps = t.contains("exponents") ? read_counts(t.at("exponents"), space)
                                          : std::vector<unsigned>(space.size(), 0);
      return MonomialTerm{std::move(exps), read_rational(require(t, "coeff"))};
    }));
  }
  MonomialForm q(space, std::move(out));
  unsigned degree = v.contains("degree") ? at_path("degree", [&] { return read_unsigned(v.at("degree")); })
                                         : q.total_degree();
  auto p = at_path("degree", [&] {
    Domain::counts(space, degree, cap);
    return from_monomials(q, degree);
  });
  return PolyEntry{std::move(q), std::move(p)};
}

ordered_json write_poly(const PolyEntry& entry) {
  ordered_json v;
  if (entry.monomials) {
    v["form"] = "monomial";
    v["degree"] = entry.bernstein.degree();
    ordered_json terms = ordered_json::array();
    for (const auto& t : entry.monomials->terms()) {
      ordered_json term;
      ordered_json exps = ordered_json::object();
      for (std::size_t x = 0; x < t.exponents.size(); ++x)
        if (t.exponents[x] != 0) exps[entry.monomials->space().label(x)] = t.exponents[x];
      term["exponents"] = exps;
      term["coeff"] = to_string(t.coefficient);
      terms.push_back(term);
    }
    v["terms"] = terms;
  } else {
    v["form"] = "bernstein";
    v["degree"] = entry.bernstein.degree();
    const auto& c = entry.bernstein.coefficients();
    v["entries"] = write_table(c.domain(), c.values())["entries"];
  }
  return v;
}

std::string locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

const Gamble& ModelDocument::gamble(const std::string& name) const {
  auto it = gambles.find(name);
  if (it == gambles.end()) throw ValidationError("unknown gamble '" + name + "'");
  return it->second;
}

const PolyEntry& ModelDocument::poly(const std::string& name) const {
  auto it = polys.find(name);
  if (it == polys.end()) throw ValidationError("unknown polynomial '" + name + "'");
  return it->second;
}

AssessmentSet ModelDocument::assessment_set() const {
  if (!assessments) throw ValidationError("model has no 'assessments' section");
  AssessmentSet set(assessments->domain);
  for (const auto& item : assessments->items) set.add(gamble(item.gamble), item.lower_bound);
  return set;
}

ModelDocument parse_model(std::string_view text, std::size_t cap) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError("syntax error at " + locate(text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                          e.what());
  }
  if (!root.is_object()) throw ValidationError("model document must be a JSON object");
  static const std::set<std::string> known{"version", "space",    "credal", "assessments", "family",
                                           "simplex_lp", "gambles", "polys", "exprs"};
  for (auto it = root.begin(); it != root.end(); ++it)
    if (!known.count(it.key())) throw ValidationError("unknown top-level key '" + it.key() + "'");

  std::string version(kModelVersion);
  if (root.contains("version")) {
    version = at_path("version", [&] { return root.at("version").get<std::string>(); });
    if (version != kModelVersion)
      throw ValidationError("unsupported model version \"" + version + "\"");
  }

  auto space = at_path("space", [&] {
    auto labels = require(root, "space").get<std::vector<std::string>>();
    std::sort(labels.begin(), labels.end());
    return CategorySpace(std::move(labels));
  });
  ModelDocument doc{version, space, {}, {}, {}, {}, {}, {}, {}};

  if (root.contains("gambles")) {
    const auto& gs = root.at("gambles");
    if (!gs.is_object()) throw ValidationError("gambles: expected an object of named gambles");
    for (auto it = gs.begin(); it != gs.end(); ++it) {
      doc.gambles.emplace(it.key(), at_path("gambles." + it.key(), [&] {
        auto dom = at_path("domain", [&] { return read_domain(require(it.value(), "domain"), space, cap); });
        return Gamble(dom, read_table(it.value(), dom));
      }));
    }
  }

  if (root.contains("credal")) {
    doc.credal = at_path("credal", [&] {
      const auto& c = root.at("credal");
      auto dom = at_path("domain", [&] { return read_domain(require(c, "domain"), space, cap); });
      std::vector<std::string> names;
      auto vertices = read_vertices(require(c, "vertices"), dom, names);
      return CredalSection{CredalLowerPrevision(std::move(vertices)), std::move(names)};
    });
  }

  if (root.contains("assessments")) {
    doc.assessments = at_path("assessments", [&] {
      const auto& a = root.at("assessments");
      std::vector<AssessmentItem> items;
      const auto& list = require(a, "items");
      if (!list.is_array()) throw ValidationError("'items' must be an array");
      for (std::size_t i = 0; i < list.size(); ++i) {
        items.push_back(at_path("items[" + std::to_string(i) + "]", [&] {
          auto name = require(list[i], "gamble").get<std::string>();
          doc.gamble(name);
          return AssessmentItem{name, read_rational(require(list[i], "lower"))};
        }));
      }
      std::optional<Domain> dom;
      if (a.contains("domain")) dom = read_domain(a.at("domain"), space, cap);
      else if (!items.empty()) dom = doc.gamble(items.front().gamble).domain();
      else throw ValidationError("an empty assessment list needs an explicit 'domain'");
      AssessmentsSection section{*dom, std::move(items)};
      for (const auto& item : section.items)
        require_same_domain(section.domain, doc.gamble(item.gamble).domain(), item.gamble.c_str());
      return section;
    });
  }

  if (root.contains("family")) {
    doc.family = at_path("family", [&] {
      const auto& levels = require(root.at("family"), "levels");
      if (!levels.is_array() || levels.empty()) throw ValidationError("'levels' must be a non-empty array");
      std::map<unsigned, CredalLowerPrevision> by_n;
      for (std::size_t i = 0; i < levels.size(); ++i) {
        at_path("levels[" + std::to_string(i) + "]", [&] {
          unsigned n = read_unsigned(require(levels[i], "n"));
          if (n == 0) throw ValidationError("levels start at n = 1");
          auto dom = Domain::counts(space, n, cap);
          std::vector<std::string> names;
          auto vertices = read_vertices(require(levels[i], "vertices"), dom, names);
          if (!by_n.emplace(n, CredalLowerPrevision(std::move(vertices))).second)
            throw ValidationError("level n = " + std::to_string(n) + " given twice");
          return 0;
        });
      }
      std::vector<CredalLowerPrevision> ordered;
      unsigned expect = 1;
      for (auto& [n, model] : by_n) {
        if (n != expect) throw ValidationError("missing level n = " + std::to_string(expect));
        ordered.push_back(std::move(model));
        ++expect;
      }
      return CountFamily(std::move(ordered));
    });
  }

  if (root.contains("simplex_lp")) {
    doc.simplex_lp = at_path("simplex_lp", [&] {
      const auto& list = require(root.at("simplex_lp"), "vertices");
      if (!list.is_array() || list.empty()) throw ValidationError("'vertices' must be a non-empty array");
      std::vector<SimplexDistribution> vertices;
      std::vector<std::string> names;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& v = list[i];
        std::string name = v.is_object() && v.contains("name") ? v.at("name").get<std::string>()
                                                               : "r" + std::to_string(i + 1);
        vertices.push_back(at_path("vertices[" + std::to_string(i) + "] (" + name + ")", [&] {
          const auto& support = require(v, "support");
          if (!support.is_array() || support.empty())
            throw ValidationError("'support' must be a non-empty array");
          std::vector<WeightedPoint> points;
          for (std::size_t j = 0; j < support.size(); ++j) {
            points.push_back(at_path("support[" + std::to_string(j) + "]", [&] {
              return WeightedPoint{read_theta(require(support[j], "theta"), space),
                                   read_rational(require(support[j], "weight"))};
            }));
          }
          return SimplexDistribution(std::move(points));
        }));
        names.push_back(std::move(name));
      }
      return SimplexSection{SimplexLowerPrevision(std::move(vertices)), std::move(names)};
    });
  }

  if (root.contains("polys")) {
    const auto& ps = root.at("polys");
    if (!ps.is_object()) throw ValidationError("polys: expected an object of named polynomials");
    for (auto it = ps.begin(); it != ps.end(); ++it)
      doc.polys.emplace(it.key(), at_path("polys." + it.key(), [&] { return read_poly(it.value(), space, cap); }));
  }

  if (root.contains("exprs")) {
    const auto& es = root.at("exprs");
    if (!es.is_object()) throw ValidationError("exprs: expected an object of named expressions");
    for (auto it = es.begin(); it != es.end(); ++it)
      doc.exprs.emplace(it.key(), at_path("exprs." + it.key(), [&] {
        return Expression::parse(it.value().get<std::string>(), space);
      }));
  }
  return doc;
}

ModelDocument load_model(const std::string& path, std::size_t cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read model file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return at_path(path, [&] { return parse_model(buffer.str(), cap); });
}

std::string serialize_model(const ModelDocument& doc) {
  ordered_json root;
  root["version"] = doc.version;
  root["space"] = doc.space.labels();
  if (doc.credal) {
    ordered_json c;
    c["domain"] = write_domain(doc.credal->model.domain());
    c["vertices"] = write_vertices(doc.credal->model, doc.credal->vertex_names);
    root["credal"] = c;
  }
  if (doc.assessments) {
    ordered_json a;
    a["domain"] = write_domain(doc.assessments->domain);
    ordered_json items = ordered_json::array();
    for (const auto& item : doc.assessments->items) {
      ordered_json i;
      i["gamble"] = item.gamble;
      i["lower"] = to_string(item.lower_bound);
      items.push_back(i);
    }
    a["items"] = items;
    root["assessments"] = a;
  }
  if (doc.family) {
    ordered_json levels = ordered_json::array();
    for (unsigned n = 1; n <= doc.family->horizon(); ++n) {
      const auto& level = doc.family->level(n);
      std::vector<std::string> names;
      for (std::size_t i = 0; i < level.vertices().size(); ++i) names.push_back("v" + std::to_string(i + 1));
      ordered_json l;
      l["n"] = n;
      l["vertices"] = write_vertices(level, names);
      levels.push_back(l);
    }
    root["family"]["levels"] = levels;
  }
  if (doc.simplex_lp) {
    ordered_json list = ordered_json::array();
    const auto& vs = doc.simplex_lp->model.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      ordered_json v;
      v["name"] = doc.simplex_lp->vertex_names[i];
      ordered_json support = ordered_json::array();
      for (const auto& s : vs[i].support()) {
        ordered_json p;
        p["theta"] = write_theta(s.point);
        p["weight"] = to_string(s.weight);
        support.push_back(p);
      }
      v["support"] = support;
      list.push_back(v);
    }
    root["simplex_lp"]["vertices"] = list;
  }
  if (!doc.gambles.empty()) {
    ordered_json gs = ordered_json::object();
    for (const auto& [name, g] : doc.gambles) {
      ordered_json v;
      v["domain"] = write_domain(g.domain());
      v["entries"] = write_table(g.domain(), g.values())["entries"];
      gs[name] = v;
    }
    root["gambles"] = gs;
  }
  if (!doc.polys.empty()) {
    ordered_json ps = ordered_json::object();
    for (const auto& [name, p] : doc.polys) ps[name] = write_poly(p);
    root["polys"] = ps;
  }
  if (!doc.exprs.empty()) {
    ordered_json es = ordered_json::object();
    for (const auto& [name, e] : doc.exprs) es[name] = e.text();
    root["exprs"] = es;
  }
  return root.dump(2) + "\n";
}

bool operator==(const ModelDocument& a, const ModelDocument& b) {
  if (a.exprs.size() != b.exprs.size()) return false;
  for (auto ia = a.exprs.begin(), ib = b.exprs.begin(); ia != a.exprs.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.text() != ib->second.text()) return false;
  return a.version == b.version && a.space == b.space && a.credal == b.credal &&
         a.assessments == b.assessments && a.simplex_lp == b.simplex_lp &&
         a.gambles == b.gambles && a.polys == b.polys &&
         ((!a.family && !b.family) ||
          (a.family && b.family && a.family->levels() == b.family->levels()));
}

}  // namespace credal
