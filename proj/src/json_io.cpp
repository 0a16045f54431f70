#include "ysym/json_io.hpp"

#include <stdexcept>

namespace ysym {

namespace {

Json word_json(const Permutation& p) { return Json(p.word()); }

Permutation word_from_json(const Json& j) {
  const auto word = j.get<std::vector<int>>();
  return Permutation::from_word(word);
}

Json terms_json(const AlgebraElement& f) {
  Json terms = Json::array();
  for (const auto& [p, c] : f.sorted_terms()) terms.push_back({{"perm", word_json(p)}, {"coeff", c.str()}});
  return terms;
}

}  // namespace

Json to_json(const AlgebraElement& f) { return {{"degree", f.degree()}, {"terms", terms_json(f)}}; }

AlgebraElement algebra_from_json(const Json& j) {
  const int n = j.at("degree").get<int>();
  AlgebraElement out(n);
  for (const auto& t : j.at("terms")) {
    const Permutation p = word_from_json(t.at("perm"));
    if (p.degree() != n) throw std::invalid_argument("algebra json: term degree differs from element degree");
    out.add_term(p, Rational::parse(t.at("coeff").get<std::string>()));
  }
  return out;
}

Json to_json(const SymElement& f) {
  return {{"degree", f.degree()}, {"d", f.d}, {"terms", terms_json(f.terms)}};
}

Json to_json(const Certificate& cert) {
  Json summands = Json::array();
  for (const auto& s : cert.summands)
    summands.push_back({{"left", to_json(s.left)}, {"generator", s.generator.str()}, {"right", word_json(s.right)}});
  return {{"target", cert.target.str()},
          {"k", cert.k},
          {"d", cert.d},
          {"scale", cert.scale.str()},
          {"summands", std::move(summands)}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.target = Filling::parse(j.at("target").get<std::string>());
  cert.k = j.at("k").get<int>();
  cert.d = j.at("d").get<int>();
  cert.scale = Rational::parse(j.at("scale").get<std::string>());
  for (const auto& s : j.at("summands")) {
    const auto right = s.at("right").get<std::vector<int>>();
    cert.summands.push_back({algebra_from_json(s.at("left")), Filling::parse(s.at("generator").get<std::string>()),
                             right.empty() ? Permutation::identity(0) : Permutation::from_word(right)});
  }
  return cert;
}

Json to_json(const CornerReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry = {{"id", c.id}, {"pass", c.pass}, {"instances", c.instances}};
    if (!c.pass) entry["residual"] = to_json(c.residual);
    checks.push_back(std::move(entry));
  }
  return {{"shape", report.shape.str()}, {"subshape", report.subshape.str()}, {"checks", std::move(checks)}};
}

}  // namespace ysym
