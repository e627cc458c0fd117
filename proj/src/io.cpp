#include "zinbiel/io.hpp"

#include <cctype>
#include <stdexcept>

namespace zinbiel {

namespace {

nlohmann::ordered_json element_to_result(const SuperAlgebra& alg, const SuperElement& x) {
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    BasisLabel lbl = alg.label(k);
    Rational c = x.coeff(lbl);
    if (!c.is_zero()) result[lbl.str()] = c.str();
  }
  return result;
}

}  // namespace

nlohmann::ordered_json algebra_to_json(const SuperAlgebra& alg) {
  nlohmann::ordered_json j;
  j["dim_even"] = alg.dim_even();
  j["dim_odd"] = alg.dim_odd();
  nlohmann::ordered_json products = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t k = 0; k < alg.dim(); ++k) {
      const SuperElement& p = alg.product(i, k);
      if (p.is_zero()) continue;
      nlohmann::ordered_json entry;
      entry["left"] = alg.label(i).str();
      entry["right"] = alg.label(k).str();
      entry["result"] = element_to_result(alg, p);
      products.push_back(std::move(entry));
    }
  j["products"] = std::move(products);
  return j;
}

SuperAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim_even") || !j.contains("dim_odd"))
    throw std::invalid_argument("algebra JSON must carry dim_even and dim_odd");
  if (!j["dim_even"].is_number_unsigned() || !j["dim_odd"].is_number_unsigned())
    throw std::invalid_argument("algebra dimensions must be non-negative integers");
  std::size_t n = j["dim_even"].get<std::size_t>();
  std::size_t m = j["dim_odd"].get<std::size_t>();
  SuperAlgebra alg(n, m);
  if (!j.contains("products")) return alg;
  if (!j["products"].is_array()) throw std::invalid_argument("products must be an array");
  for (const auto& entry : j["products"]) {
    if (!entry.is_object() || !entry.contains("left") || !entry.contains("right") ||
        !entry.contains("result"))
      throw std::invalid_argument("each product needs left, right and result");
    BasisLabel left = BasisLabel::parse(entry["left"].get<std::string>());
    BasisLabel right = BasisLabel::parse(entry["right"].get<std::string>());
    SuperElement value(n, m);
    if (!entry["result"].is_object())
      throw std::invalid_argument("product result must be an object");
    for (auto it = entry["result"].begin(); it != entry["result"].end(); ++it) {
      BasisLabel target = BasisLabel::parse(it.key());
      Rational c = Rational::parse(it.value().get<std::string>());
      value += c * SuperElement::basis(n, m, target);
    }
    alg.set_product(left, right, std::move(value));
  }
  return alg;
}

std::string algebra_to_json_string(const SuperAlgebra& alg) { return algebra_to_json(alg).dump(2); }

SuperAlgebra algebra_from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return algebra_from_json(j);
}

namespace {

Matrix matrix_from_json(const nlohmann::json& j, const char* key) {
  if (!j.is_array()) throw std::invalid_argument(std::string(key) + " block must be an array");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw std::invalid_argument(std::string(key) + " block must be rectangular");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = Rational::parse(j[i][c].get<std::string>());
  }
  if (rows != cols) throw std::invalid_argument(std::string(key) + " block must be square");
  return m;
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

nlohmann::ordered_json map_to_json(const GradedLinearMap& map) {
  nlohmann::ordered_json j;
  j["even"] = matrix_to_json(map.even_block());
  j["odd"] = matrix_to_json(map.odd_block());
  return j;
}

GradedLinearMap map_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("even") || !j.contains("odd"))
    throw std::invalid_argument("map JSON must carry even and odd blocks");
  return GradedLinearMap(matrix_from_json(j["even"], "even"), matrix_from_json(j["odd"], "odd"));
}

SuperElement parse_element(const std::string& text, std::size_t n, std::size_t m) {
  SuperElement out(n, m);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&] { throw std::invalid_argument("malformed element expression: \"" + text + "\""); };
  skip_ws();
  if (pos == text.size()) fail();
  bool first = true;
  while (pos < text.size()) {
    bool negative = false;
    skip_ws();
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    } else if (!first) {
      fail();
    }
    // optional rational coefficient, then a label
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits.push_back(text[pos++]);
    Rational coeff(1);
    if (!digits.empty()) {
      std::string den;
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          den.push_back(text[pos++]);
        if (den.empty()) fail();
      }
      coeff = Rational::parse(den.empty() ? digits : digits + "/" + den);
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    if (pos >= text.size() || (text[pos] != 'e' && text[pos] != 'f')) fail();
    std::string label;
    label.push_back(text[pos++]);
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      label.push_back(text[pos++]);
    BasisLabel lbl = BasisLabel::parse(label);
    if (negative) coeff = -coeff;
    out += coeff * SuperElement::basis(n, m, lbl);
    first = false;
    skip_ws();
  }
  return out;
}

std::string element_to_string(const SuperElement& x) {
  std::string out;
  auto append = [&](const Rational& c, BasisLabel lbl) {
    if (c.is_zero()) return;
    Rational a = c;
    if (out.empty()) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? "-" : "+";
      if (a.sign() < 0) a = -a;
    }
    if (!(a == Rational(1))) out += a.str();
    out += lbl.str();
  };
  for (std::size_t i = 0; i < x.dim_even(); ++i) append(x.even()[i], e_label(i + 1));
  for (std::size_t i = 0; i < x.dim_odd(); ++i) append(x.odd()[i], f_label(i + 1));
  return out.empty() ? "0" : out;
}

}  // namespace zinbiel
