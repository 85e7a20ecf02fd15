#include <gtest/gtest.h>

#include <filesystem>

#include "credal/commands.hpp"
#include "credal/model.hpp"

using namespace credal;

namespace {

std::string model_path(const std::string& name) { return std::string(CREDAL_MODELS_DIR) + "/" + name; }

std::vector<std::string> sample_models() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(CREDAL_MODELS_DIR)) {
    auto name = entry.path().filename().string();
    if (name.rfind("bad-", 0) != 0) out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string error_of(std::string_view text) {
  try {
    parse_model(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-0.125"), make_rational(-1, 8));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("abc"), ValidationError);
  EXPECT_THROW(parse_rational(""), ValidationError);
  EXPECT_EQ(to_string(make_rational(4, 6)), "2/3");
  EXPECT_EQ(to_string(make_rational(-8, 4)), "-2");
}

TEST(Model, SampleDocumentsRoundTrip) {
  auto names = sample_models();
  ASSERT_GE(names.size(), 10u);
  for (const auto& name : names) {
    auto doc = load_model(model_path(name));
    auto text = serialize_model(doc);
    auto again = parse_model(text);
    EXPECT_TRUE(again == doc) << name;
    EXPECT_EQ(serialize_model(again), text) << name;
  }
}

TEST(Model, SortsLabelsAndRemapsTables) {
  auto doc = parse_model(R"({"space": ["b", "a"],
    "gambles": {"f": {"domain": {"kind": "tuples", "n": 1}, "entries": [[["b"], 5]], "default": 1}}})");
  EXPECT_EQ(doc.space.labels(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(doc.gamble("f").values(), (std::vector<Rational>{Rational(1), Rational(5)}));
}

TEST(Model, ReportsErrorsWithContext) {
  auto bad_mass = error_of(R"({"space": ["a", "b"], "credal": {"domain": {"kind": "tuples", "n": 1},
    "vertices": [{"name": "v", "values": ["1/2", "2/5"]}]}})");
  EXPECT_NE(bad_mass.find("9/10"), std::string::npos) << bad_mass;
  EXPECT_NE(bad_mass.find("(v)"), std::string::npos) << bad_mass;

  EXPECT_THROW(load_model(model_path("bad-category.json")), InvalidCategoryError);
  EXPECT_THROW(load_model(model_path("bad-mass.json")), ValidationError);

  auto syntax = error_of("{\"space\": [\"a\",\n  }");
  EXPECT_NE(syntax.find("line 2"), std::string::npos) << syntax;

  EXPECT_NE(error_of(R"({"space": ["a"], "extra": 1})").find("extra"), std::string::npos);
  EXPECT_NE(error_of(R"({"space": ["a", "a"]})"), "");
  EXPECT_NE(error_of(R"({"space": ["a"], "version": "9"})"), "");
  EXPECT_NE(error_of(R"({"space": ["a", "b"], "assessments": {"items": [{"gamble": "g", "lower": 0}]}})")
                .find("'g'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"space": ["a", "b"], "gambles": {"f": {"domain": {"kind": "tuples", "n": 1},
    "values": ["1/0", 1]}}})"),
            "");
  EXPECT_NE(error_of(R"({"space": ["a", "b"], "family": {"levels": [{"n": 2, "vertices": [{"values": [1, 0, 0]}]}]}})"),
            "");
  EXPECT_THROW(load_model(model_path("does-not-exist.json")), ValidationError);
}

TEST(Model, CapacityIsEnforcedOnLoad) {
  std::string text = R"({"space": ["a", "b"], "gambles": {"f": {"domain": {"kind": "tuples", "n": 12},
    "entries": [], "default": 0}}})";
  EXPECT_NO_THROW(parse_model(text));
  EXPECT_THROW(parse_model(text, 100), CapacityError);
}

TEST(Model, PolynomialsKeepBothForms) {
  auto doc = load_model(model_path("two-point-representation.json"));
  const auto& product = doc.poly("product");
  ASSERT_TRUE(product.monomials);
  EXPECT_EQ(product.bernstein.degree(), 2u);
  EXPECT_FALSE(doc.poly("hump").monomials);
  EXPECT_TRUE(product.bernstein == doc.poly("hump").bernstein);
  EXPECT_THROW(doc.poly("missing"), ValidationError);
}

TEST(Range, Parsing) {
  EXPECT_EQ(parse_range("1..4"), (std::vector<unsigned>{1, 2, 3, 4}));
  EXPECT_EQ(parse_range("2,4,8"), (std::vector<unsigned>{2, 4, 8}));
  EXPECT_EQ(parse_range("1..2,16"), (std::vector<unsigned>{1, 2, 16}));
  EXPECT_THROW(parse_range("4..1"), UsageError);
  EXPECT_THROW(parse_range("x"), UsageError);
  EXPECT_THROW(parse_range(""), UsageError);
}

TEST(Dispatch, ExitCodes) {
  auto doc = load_model(model_path("coherent-assessments.json"));
  CommandOptions opts;
  opts.gamble = "Ia_minus_Ib";
  auto ok = dispatch("natural-extension", doc, opts);
  EXPECT_EQ(ok.exit_code, kExitOk);
  EXPECT_EQ(ok.out, "natural_extension: -2/5\n");

  EXPECT_EQ(dispatch("no-such-command", doc, opts).exit_code, kExitUsage);
  EXPECT_EQ(dispatch("natural-extension", doc, CommandOptions{}).exit_code, kExitUsage);
  EXPECT_EQ(dispatch("eval-lower", doc, opts).exit_code, kExitValidation);  // no credal section

  opts.gamble = "Ia";
  auto loss = dispatch("natural-extension", load_model(model_path("sure-loss.json")), opts);
  EXPECT_EQ(loss.exit_code, kExitValidation);
  EXPECT_NE(loss.err.find("sure loss"), std::string::npos);

  CommandOptions big;
  big.n = 30;
  big.cap = 1000;
  EXPECT_EQ(dispatch("represent-family", load_model(model_path("point-representation.json")), big).exit_code,
            kExitCapacity);
}

TEST(Dispatch, Formats) {
  auto doc = load_model(model_path("point-representation.json"));
  CommandOptions opts;
  opts.h = "square";  // resolved through the "exprs" section
  opts.ns = "1..8";
  opts.format = OutputFormat::Csv;
  auto csv = dispatch("converge", doc, opts);
  ASSERT_EQ(csv.exit_code, kExitOk) << csv.err;
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 9);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "n,value,reference,gap");
  EXPECT_NE(csv.out.find("\n8,5/36,1/9,1/36\n"), std::string::npos);

  opts.format = OutputFormat::Json;
  auto json = dispatch("converge", doc, opts);
  EXPECT_NE(json.out.find("\"gap\": \"2/9\""), std::string::npos);
  EXPECT_EQ(json.out.find('.'), std::string::npos);  // no floating point anywhere
}
