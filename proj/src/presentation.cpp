#include "supermult/presentation.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace supermult::presentation {

using nlohmann::json;

BracketExpr BracketExpr::generator(int index) {
  if (index < 0) throw PreconditionError("generator index must be non-negative");
  BracketExpr e;
  e.kind_ = Kind::Generator;
  e.gen_ = index;
  return e;
}

BracketExpr BracketExpr::bracket(BracketExpr left, BracketExpr right) {
  BracketExpr e;
  e.kind_ = Kind::Bracket;
  e.children_.push_back(std::make_shared<BracketExpr>(std::move(left)));
  e.children_.push_back(std::make_shared<BracketExpr>(std::move(right)));
  return e;
}

BracketExpr BracketExpr::scale(Scalar factor, BracketExpr inner) {
  BracketExpr e;
  e.kind_ = Kind::Scale;
  e.factor_ = std::move(factor);
  e.children_.push_back(std::make_shared<BracketExpr>(std::move(inner)));
  return e;
}

BracketExpr BracketExpr::sum(std::vector<BracketExpr> parts) {
  if (parts.empty()) throw PreconditionError("sum expression needs at least one part");
  BracketExpr e;
  e.kind_ = Kind::Sum;
  for (auto& p : parts) e.children_.push_back(std::make_shared<BracketExpr>(std::move(p)));
  return e;
}

int expr_parity(const BracketExpr& expr, const freelie::GradedAlphabet& alphabet) {
  switch (expr.kind()) {
    case BracketExpr::Kind::Generator: {
      int idx = expr.generator_index();
      if (idx >= alphabet.size()) throw ParseError("relator references a missing generator");
      return alphabet.parity(idx);
    }
    case BracketExpr::Kind::Bracket:
      return (expr_parity(expr.left(), alphabet) + expr_parity(expr.right(), alphabet)) % 2;
    case BracketExpr::Kind::Scale:
      return expr_parity(expr.inner(), alphabet);
    case BracketExpr::Kind::Sum: {
      int parity = expr_parity(*expr.parts().front(), alphabet);
      for (const auto& part : expr.parts()) {
        if (expr_parity(*part, alphabet) != parity) {
          throw ParseError("sum mixes parities; relators must be parity-homogeneous");
        }
      }
      return parity;
    }
  }
  throw ConsistencyError("unreachable expression kind");
}

freelie::SuperPolynomial eval(const BracketExpr& expr, const freelie::TruncatedFrame& frame) {
  switch (expr.kind()) {
    case BracketExpr::Kind::Generator: {
      int idx = expr.generator_index();
      if (idx >= frame.alphabet().size()) {
        throw ParseError("relator references a missing generator");
      }
      return frame.generator_poly(idx);
    }
    case BracketExpr::Kind::Bracket:
      return frame.supercommutator(eval(expr.left(), frame), eval(expr.right(), frame));
    case BracketExpr::Kind::Scale:
      return eval(expr.inner(), frame).scaled(expr.factor());
    case BracketExpr::Kind::Sum: {
      SparseVector acc(frame.universe());
      for (const auto& part : expr.parts()) acc.axpy(Scalar(1), eval(*part, frame));
      return acc;
    }
  }
  throw ConsistencyError("unreachable expression kind");
}

namespace {

BracketExpr expr_from_json(const json& node, const freelie::GradedAlphabet& alphabet) {
  if (!node.is_object() || node.size() != 1) {
    throw ParseError("relator expression must be an object with exactly one key");
  }
  const auto& [key, value] = *node.items().begin();
  if (key == "gen") {
    if (!value.is_string()) throw ParseError("\"gen\" expects a generator name");
    int idx = alphabet.index_of(value.get<std::string>());
    if (idx < 0) throw ParseError("unknown generator '" + value.get<std::string>() + "'");
    return BracketExpr::generator(idx);
  }
  if (key == "bracket") {
    if (!value.is_array() || value.size() != 2) {
      throw ParseError("\"bracket\" expects exactly two subexpressions");
    }
    return BracketExpr::bracket(expr_from_json(value[0], alphabet),
                                expr_from_json(value[1], alphabet));
  }
  if (key == "scale") {
    if (!value.is_array() || value.size() != 2 || !value[0].is_string()) {
      throw ParseError("\"scale\" expects [\"p/q\", expr]");
    }
    return BracketExpr::scale(parse_scalar(value[0].get<std::string>()),
                              expr_from_json(value[1], alphabet));
  }
  if (key == "sum") {
    if (!value.is_array() || value.empty()) {
      throw ParseError("\"sum\" expects a non-empty array of subexpressions");
    }
    std::vector<BracketExpr> parts;
    for (const auto& item : value) parts.push_back(expr_from_json(item, alphabet));
    return BracketExpr::sum(std::move(parts));
  }
  throw ParseError("unknown expression key '" + key + "'");
}

json expr_to_json(const BracketExpr& expr, const freelie::GradedAlphabet& alphabet) {
  switch (expr.kind()) {
    case BracketExpr::Kind::Generator:
      return json{{"gen", alphabet.gen(expr.generator_index()).name}};
    case BracketExpr::Kind::Bracket:
      return json{{"bracket",
                   json::array({expr_to_json(expr.left(), alphabet),
                                expr_to_json(expr.right(), alphabet)})}};
    case BracketExpr::Kind::Scale:
      return json{{"scale", json::array({format_scalar(expr.factor()),
                                         expr_to_json(expr.inner(), alphabet)})}};
    case BracketExpr::Kind::Sum: {
      json parts = json::array();
      for (const auto& part : expr.parts()) parts.push_back(expr_to_json(*part, alphabet));
      return json{{"sum", parts}};
    }
  }
  throw ConsistencyError("unreachable expression kind");
}

}  // namespace

Presentation presentation_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("presentation must be a JSON object");
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw ParseError("presentation needs a \"generators\" array");
  }
  std::vector<freelie::Generator> gens;
  for (const auto& g : doc["generators"]) {
    if (!g.is_object() || !g.contains("name") || !g.contains("parity") ||
        !g["name"].is_string() || !g["parity"].is_number_integer()) {
      throw ParseError("each generator needs {\"name\": string, \"parity\": 0|1}");
    }
    int parity = g["parity"].get<int>();
    if (parity != 0 && parity != 1) throw ParseError("generator parity must be 0 or 1");
    gens.push_back({g["name"].get<std::string>(), parity});
  }
  Presentation p;
  try {
    p.alphabet = freelie::GradedAlphabet(std::move(gens));
  } catch (const StructureError& e) {
    throw ParseError(e.what());
  }
  if (!doc.contains("class") || !doc["class"].is_number_integer()) {
    throw ParseError("presentation needs an integer \"class\"");
  }
  p.class_bound = doc["class"].get<int>();
  if (p.class_bound < 0) throw ParseError("nilpotency class must be non-negative");
  if (doc.contains("relators")) {
    if (!doc["relators"].is_array()) throw ParseError("\"relators\" must be an array");
    for (const auto& r : doc["relators"]) {
      BracketExpr e = expr_from_json(r, p.alphabet);
      expr_parity(e, p.alphabet);  // parity-homogeneity gate
      p.relators.push_back(std::move(e));
    }
  }
  return p;
}

std::string presentation_to_json_text(const Presentation& p) {
  json doc;
  doc["generators"] = json::array();
  for (const auto& g : p.alphabet.generators()) {
    doc["generators"].push_back({{"name", g.name}, {"parity", g.parity}});
  }
  doc["relators"] = json::array();
  for (const auto& r : p.relators) doc["relators"].push_back(expr_to_json(r, p.alphabet));
  doc["class"] = p.class_bound;
  return doc.dump(2);
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return presentation_from_json_text(buffer.str());
}

}  // namespace supermult::presentation
