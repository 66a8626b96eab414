#include "deltalab/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace deltalab::serialize {

using exactcalc::Interval;
using exactcalc::kSmoothInf;
using exactcalc::parse_rational;
using exactcalc::PiecewisePolynomial;
using exactcalc::Polynomial;
using exactcalc::Rational;
using exactcalc::Scalar;
using exactcalc::to_string;

namespace {

ordered_json coefficient_to_json(const Scalar& c) {
  if (c.is_rational()) return to_string(c.rational_part());
  return ordered_json::array({to_string(c.rational_part()), to_string(c.lambda_part())});
}

Scalar coefficient_from_json(const ordered_json& j, const std::optional<Rational>& relation) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_array() && j.size() == 2) {
    if (!relation)
      throw std::invalid_argument("lambda coefficient present but no relation_r in document");
    return Scalar::with_lambda(parse_rational(j[0].get<std::string>()),
                               parse_rational(j[1].get<std::string>()), *relation);
  }
  throw std::invalid_argument("bad coefficient encoding");
}

ordered_json polynomial_to_json(const Polynomial& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coefficients()) arr.push_back(coefficient_to_json(c));
  return arr;
}

Polynomial polynomial_from_json(const ordered_json& j, const std::optional<Rational>& relation) {
  std::vector<Scalar> coeffs;
  for (const auto& c : j) coeffs.push_back(coefficient_from_json(c, relation));
  return Polynomial(std::move(coeffs));
}

}  // namespace

ordered_json to_json(const Scalar& s) { return coefficient_to_json(s); }

ordered_json to_json(const PiecewisePolynomial& p) {
  ordered_json j;
  if (const auto rel = p.relation()) j["relation_r"] = to_string(*rel);
  if (p.smoothness() == kSmoothInf)
    j["smoothness"] = "inf";
  else
    j["smoothness"] = p.smoothness();
  if (p.domain())
    j["domain"] = ordered_json::array({to_string(p.domain()->lo), to_string(p.domain()->hi)});
  ordered_json breaks = ordered_json::array();
  for (const auto& b : p.breakpoints()) breaks.push_back(to_string(b));
  j["breakpoints"] = std::move(breaks);
  ordered_json pieces = ordered_json::array();
  for (const auto& piece : p.pieces()) pieces.push_back(polynomial_to_json(piece));
  j["pieces"] = std::move(pieces);
  return j;
}

PiecewisePolynomial piecewise_from_json(const ordered_json& j) {
  std::optional<Rational> relation;
  if (j.contains("relation_r")) relation = parse_rational(j.at("relation_r").get<std::string>());
  int smoothness = -1;
  if (j.contains("smoothness")) {
    const auto& s = j.at("smoothness");
    smoothness = s.is_string() ? kSmoothInf : s.get<int>();
  }
  std::optional<Interval> domain;
  if (j.contains("domain"))
    domain = Interval(parse_rational(j.at("domain")[0].get<std::string>()),
                      parse_rational(j.at("domain")[1].get<std::string>()));
  std::vector<Rational> breaks;
  for (const auto& b : j.at("breakpoints")) breaks.push_back(parse_rational(b.get<std::string>()));
  std::vector<Polynomial> pieces;
  for (const auto& piece : j.at("pieces")) pieces.push_back(polynomial_from_json(piece, relation));
  return PiecewisePolynomial::from_pieces(std::move(breaks), std::move(pieces), smoothness,
                                          std::move(domain));
}

ordered_json to_json(const mollifiers::MollifierDescription& d) {
  auto bumps_to_json = [](const std::vector<mollifiers::BumpSpec>& bumps) {
    ordered_json arr = ordered_json::array();
    for (const auto& b : bumps) {
      ordered_json jb;
      jb["support"] = ordered_json::array({to_string(b.support.lo), to_string(b.support.hi)});
      jb["smoothness"] = b.smoothness;
      ordered_json moments = ordered_json::array();
      for (const auto& [order, value] : b.moments)
        moments.push_back(ordered_json::array({order, to_string(value)}));
      jb["moments"] = std::move(moments);
      arr.push_back(std::move(jb));
    }
    return arr;
  };
  ordered_json j;
  j["smoothness"] = d.smoothness;
  j["f_bumps"] = bumps_to_json(d.f_bumps);
  j["g_bumps"] = bumps_to_json(d.g_bumps);
  return j;
}

mollifiers::MollifierDescription mollifier_description_from_json(const ordered_json& j) {
  auto bumps_from_json = [](const ordered_json& arr) {
    std::vector<mollifiers::BumpSpec> bumps;
    for (const auto& jb : arr) {
      mollifiers::BumpSpec spec{Interval(parse_rational(jb.at("support")[0].get<std::string>()),
                                         parse_rational(jb.at("support")[1].get<std::string>())),
                                jb.at("smoothness").get<int>(),
                                {}};
      for (const auto& m : jb.at("moments"))
        spec.moments.push_back({m[0].get<int>(), parse_rational(m[1].get<std::string>())});
      bumps.push_back(std::move(spec));
    }
    return bumps;
  };
  mollifiers::MollifierDescription d;
  d.smoothness = j.at("smoothness").get<int>();
  d.f_bumps = bumps_from_json(j.at("f_bumps"));
  d.g_bumps = bumps_from_json(j.at("g_bumps"));
  return d;
}

ordered_json to_json(const models::PiecewiseModel& m) {
  ordered_json j;
  j["class_order"] = m.class_order();
  j["left"] = to_json(m.left());
  j["right"] = to_json(m.right());
  return j;
}

models::PiecewiseModel model_from_json(const ordered_json& j) {
  return models::PiecewiseModel(piecewise_from_json(j.at("left")),
                                piecewise_from_json(j.at("right")),
                                j.at("class_order").get<int>());
}

models::PiecewiseModel resolve_model(const ordered_json& j) {
  if (j.is_string()) return models::named_model(j.get<std::string>());
  if (j.is_object() && j.contains("name")) return models::named_model(j.at("name").get<std::string>());
  return model_from_json(j);
}

mollifiers::Mollifier resolve_mollifier(const std::string& ref) {
  if (ref == "default") return mollifiers::default_mollifier();
  if (ref == "alternate" || ref == "alt") return mollifiers::alternate_mollifier();
  std::ifstream in(ref);
  if (!in) throw std::invalid_argument("cannot open mollifier description '" + ref + "'");
  ordered_json j;
  in >> j;
  return mollifiers::build_mollifier(mollifier_description_from_json(j));
}

models::PiecewiseModel resolve_model_ref(const std::string& ref) {
  if (std::ifstream in(ref); in) {
    ordered_json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw std::invalid_argument("bad model description '" + ref + "': " + e.what());
    }
    return resolve_model(j);
  }
  return models::named_model(ref);
}

}  // namespace deltalab::serialize
