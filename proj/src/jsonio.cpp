#include "bilv/jsonio.hpp"

#include <fstream>

#include "bilv/errors.hpp"

namespace bilv {

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : t.mon.entries()) exps[v.name()] = e;
    arr.push_back({{"coeff", rat_str(t.coeff)}, {"exps", exps}});
  }
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw BadInput("poly json must be an array of terms");
  std::vector<Poly::Term> terms;
  for (const auto& tj : j) {
    if (!tj.is_object() || !tj.contains("coeff") || !tj.contains("exps"))
      throw BadInput("poly term needs coeff and exps");
    Rational c = rat_parse(tj.at("coeff").get<std::string>());
    std::vector<Monomial::Entry> ents;
    for (const auto& [name, ev] : tj.at("exps").items()) {
      auto v = VarId::parse(name);
      if (!v) throw BadInput("unknown variable name: " + name);
      if (!ev.is_number_unsigned() || ev.get<uint64_t>() == 0 || ev.get<uint64_t>() > 0xffff)
        throw BadInput("bad exponent for " + name);
      ents.emplace_back(*v, static_cast<uint32_t>(ev.get<uint64_t>()));
    }
    terms.push_back({Monomial::from_entries(std::move(ents)), c});
  }
  return Poly::from_terms(std::move(terms));
}

BFile bfile_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k")) throw BadInput("b-file needs an integer field k");
  BFile out;
  if (!j.at("k").is_number_integer()) throw BadInput("b-file k must be an integer");
  out.k = j.at("k").get<int>();
  if (out.k < 1 || out.k > 100) throw BadInput("b-file k out of range");
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw BadInput("b-file params must be an object");
    for (const auto& [name, val] : j.at("params").items()) {
      auto v = VarId::parse(name);
      if (!v || v->kind() != VarKind::B) throw BadInput("bad b parameter key: " + name);
      int i = v->b_i(), jj = v->b_j();
      int d = jj - i;
      if (jj > 2 * out.k + 1 || (d != out.k && d != out.k + 1))
        throw BadInput("b parameter key not admissible for k: " + name);
      out.params[{i, jj}] = rat_parse(val.get<std::string>());
    }
  }
  return out;
}

BFile bfile_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open b-file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw BadInput("b-file is not valid json: " + std::string(e.what()));
  }
  return bfile_from_json(j);
}

}  // namespace bilv
