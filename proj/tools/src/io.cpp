#include "frs_tools/io.hpp"

#include <fstream>
#include <sstream>

#include "frs/error.hpp"

namespace frs::io {

json to_json(const GroupElement& g) { return json(g.coords); }

json to_json(const std::vector<GroupElement>& gs) {
  json out = json::array();
  for (const auto& g : gs) out.push_back(to_json(g));
  return out;
}

json to_json(const CyclotomicNumber& x) {
  return json{{"modulus", x.modulus()}, {"coefficients", x.coefficient_strings()}};
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

json to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).coefficient_strings());
    rows.push_back(row);
  }
  return json{{"modulus", m.modulus()}, {"entries", rows}};
}

json system_document(const RootSystem& system) {
  return json{{"schema", system_schema},
              {"orders", system.group().orders()},
              {"beta", to_json(system.beta().matrix())},
              {"roots", to_json(system.roots())}};
}

namespace {

std::vector<Int> int_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  std::vector<Int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(what + " must contain integers");
    out.push_back(v.get<Int>());
  }
  return out;
}

}  // namespace

RootSystem parse_system(const json& doc) {
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  if (!doc.contains("schema") || doc["schema"] != system_schema)
    throw InputError(std::string("schema must be \"") + system_schema + "\"");
  for (const char* key : {"orders", "beta", "roots"})
    if (!doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  auto orders = int_array(doc["orders"], "orders");
  if (orders.empty()) throw InputError("orders must be nonempty");
  for (Int n : orders)
    if (n < 1) throw InputError("orders must be positive");
  FiniteAbelianGroup group(orders);
  const auto& b = doc["beta"];
  if (!b.is_array() || b.size() != orders.size()) throw InputError("beta must be a square matrix of size rank");
  IntMatrix m(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    auto row = int_array(b[i], "beta rows");
    if (row.size() != orders.size()) throw InputError("beta must be a square matrix of size rank");
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j];
  }
  Bicharacter beta(group, m);
  std::vector<GroupElement> roots;
  if (!doc["roots"].is_array()) throw InputError("roots must be an array");
  for (const auto& r : doc["roots"]) {
    auto coords = int_array(r, "roots");
    if (coords.size() != orders.size()) throw InputError("root has the wrong length");
    roots.push_back(group.element(coords));
  }
  return RootSystem(beta, roots);
}

RootSystem read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return parse_system(doc);
}

json bracket_document(const GradedLieAlgebra& algebra) {
  json terms = json::array();
  for (const auto& t : algebra.bracket_table())
    terms.push_back(json{{"a", to_json(t.left)}, {"b", to_json(t.right)}, {"c", t.value.coefficient_strings()}});
  return json{{"schema", "frs-brackets-1"},
              {"orders", algebra.group().orders()},
              {"modulus", algebra.modulus()},
              {"support", to_json(algebra.support())},
              {"brackets", terms}};
}

json model_document(const MatrixModel& model) {
  json basis = json::array();
  for (std::size_t i = 0; i < model.algebra.dimension(); ++i) {
    basis.push_back(json{{"root", to_json(model.algebra.support()[i])},
                         {"label", to_json(model.images[i])},
                         {"scalar", to_json(model.scalars[i])},
                         {"matrix", to_json(model.grading.matrix(model.images[i]))}});
  }
  return json{{"schema", "frs-matrices-1"},
              {"type", model.tag.to_string()},
              {"target", model.target},
              {"size", model.grading.matrix_size()},
              {"basis", basis}};
}

}  // namespace frs::io
