#include "lk/io.hpp"

#include <stdexcept>

namespace lk {

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& term : p.terms()) out.push_back({term.coeff.str(), term.exp.er, term.exp.et});
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& m : j) {
    if (!m.is_array() || m.size() != 3 || !m[0].is_string())
      throw std::invalid_argument("monomial must be [coeff_string, e_r, e_t]");
    const std::string digits = m[0].get<std::string>();
    terms.push_back({Exponent{m[2].get<std::int32_t>(), m[1].get<std::int32_t>()}, Integer(digits.c_str())});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json to_json(const RootSystem& rs) {
  json roots = json::array();
  for (const auto& beta : rs.roots()) roots.push_back(beta);
  json cartan = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()[i][j]);
    cartan.push_back(row);
  }
  return {{"type", std::string(1, "ADE"[static_cast<int>(rs.spec().family)])},
          {"rank", rs.rank()},
          {"roots", roots},
          {"cartan", cartan}};
}

json generator_to_json(int k, const RepMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return {{"generator", k}, {"size", m.rows()}, {"entries", rows}};
}

RepMatrix generator_from_json(const json& j) {
  const auto n = j.at("size").get<Eigen::Index>();
  const auto& rows = j.at("entries");
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    throw std::invalid_argument("generator entries do not match size");
  RepMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n) throw std::invalid_argument("generator row has wrong length");
    for (Eigen::Index c = 0; c < n; ++c) m(i, c) = poly_from_json(rows[i][c]);
  }
  return m;
}

json ttable_to_json(const RootSystem& rs, const TTable& T) {
  json out = json::array();
  for (int k = 1; k <= rs.rank(); ++k)
    for (int beta = 0; beta < rs.size(); ++beta)
      out.push_back({{"k", k}, {"root", rs.root(beta)}, {"poly", to_json(T(k, beta))}});
  return out;
}

TTable ttable_from_json(const RootSystem& rs, const json& j) {
  TTable T(rs.rank(), rs.size());
  for (const auto& entry : j) {
    const int k = entry.at("k").get<int>();
    if (k < 1 || k > rs.rank()) throw std::invalid_argument("T-table index k out of range");
    T(k, rs.index_of(entry.at("root").get<Root>())) = poly_from_json(entry.at("poly"));
  }
  return T;
}

}  // namespace lk
