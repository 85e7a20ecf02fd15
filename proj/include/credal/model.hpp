#pragma once

// JSON model documents. See docs/model-format.md for the schema.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credal/bernstein.hpp"
#include "credal/expression.hpp"
#include "credal/previsions.hpp"
#include "credal/representation.hpp"

namespace credal {

inline constexpr std::string_view kModelVersion = "1";

struct CredalSection {
  CredalLowerPrevision model;
  std::vector<std::string> vertex_names;

  friend bool operator==(const CredalSection&, const CredalSection&) = default;
};

struct AssessmentItem {
  std::string gamble;  // name in ModelDocument::gambles
  Rational lower_bound;

  friend bool operator==(const AssessmentItem&, const AssessmentItem&) = default;
};

struct AssessmentsSection {
  Domain domain;
  std::vector<AssessmentItem> items;

  friend bool operator==(const AssessmentsSection&, const AssessmentsSection&) = default;
};

struct SimplexSection {
  SimplexLowerPrevision model;
  std::vector<std::string> vertex_names;

  friend bool operator==(const SimplexSection&, const SimplexSection&) = default;
};

/// A polynomial as written: monomial input is kept for serialization and
/// converted to Bernstein form at `bernstein.degree()`.
struct PolyEntry {
  std::optional<MonomialForm> monomials;
  BernsteinPoly bernstein;

  friend bool operator==(const PolyEntry& a, const PolyEntry& b) {
    return a.monomials == b.monomials && a.bernstein.degree() == b.bernstein.degree() &&
           a.bernstein.coefficients() == b.bernstein.coefficients();
  }
};

struct ModelDocument {
  std::string version{kModelVersion};
  CategorySpace space;
  std::optional<CredalSection> credal;
  std::optional<AssessmentsSection> assessments;
  std::optional<CountFamily> family;
  std::optional<SimplexSection> simplex_lp;
  std::map<std::string, Gamble> gambles;
  std::map<std::string, PolyEntry> polys;
  std::map<std::string, Expression> exprs;

  const Gamble& gamble(const std::string& name) const;
  const PolyEntry& poly(const std::string& name) const;
  AssessmentSet assessment_set() const;
};

/// Parses and validates a document. Category labels are sorted, so the
/// canonical category order of a loaded model is lexicographic.
/// Errors carry the JSON path, or line and column for syntax errors.
ModelDocument parse_model(std::string_view json, std::size_t cap = kDefaultEnumerationCap);
ModelDocument load_model(const std::string& path, std::size_t cap = kDefaultEnumerationCap);

/// Canonical JSON text; parse_model(serialize_model(d)) reproduces d.
std::string serialize_model(const ModelDocument& doc);

bool operator==(const ModelDocument& a, const ModelDocument& b);

}  // namespace credal
