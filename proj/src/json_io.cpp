#include "mwp/json_io.hpp"

namespace mwp {

Json to_json(const Monomial& m) {
  Json deltas = Json::array();
  for (const Delta& d : m.deltas) deltas.push_back(Json::array({d.value, d.position}));
  return Json{{"scalar", coeff_str(m.scalar)}, {"deltas", std::move(deltas)}};
}

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const Monomial& m : p.monomials()) arr.push_back(to_json(m));
  return arr;
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"vars", m.vars()}, {"entries", std::move(rows)}};
}

Json to_json(const CoeffMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(coeff_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json delta_graph_json(const DeltaGraph& g, const ChoiceDomains& domains) {
  Json doms = Json::object();
  for (std::size_t j = 0; j < domains.count(); ++j)
    doms[std::to_string(j)] = domains.size_of(static_cast<std::uint32_t>(j));
  Json layers = Json::object();
  for (const auto& [len, lists] : g.layers()) {
    Json arr = Json::array();
    for (const DeltaList& d : lists) {
      Json list = Json::array();
      for (const Delta& x : d) list.push_back(Json::array({x.value, x.position}));
      arr.push_back(std::move(list));
    }
    layers[std::to_string(len)] = std::move(arr);
  }
  return Json{{"domains", std::move(doms)}, {"layers", std::move(layers)}};
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Monomial> ms;
  for (const Json& mj : j) {
    Monomial m;
    m.scalar = coeff_from_char(mj.at("scalar").get<std::string>().at(0));
    for (const Json& dj : mj.at("deltas"))
      m.deltas.push_back(Delta{dj.at(0).get<std::uint32_t>(), dj.at(1).get<std::uint32_t>()});
    ms.push_back(std::move(m));
  }
  return Polynomial::from_monomials(std::move(ms));
}

}  // namespace mwp
