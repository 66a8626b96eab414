#ifndef DELTALAB_SERIALIZE_HPP
#define DELTALAB_SERIALIZE_HPP

#include <json.hpp>

#include "deltalab/association.hpp"
#include "deltalab/models.hpp"
#include "deltalab/mollifier.hpp"

namespace deltalab::serialize {

using nlohmann::ordered_json;

/// Structured-text form of a piecewise polynomial. Every number is an exact
/// "n/d" string; lambda coefficients are ["a", "b"] pairs and the relation
/// constant appears once per document. Round-trips exactly.
ordered_json to_json(const exactcalc::PiecewisePolynomial& p);
exactcalc::PiecewisePolynomial piecewise_from_json(const ordered_json& j);

ordered_json to_json(const exactcalc::Scalar& s);

ordered_json to_json(const mollifiers::MollifierDescription& d);
mollifiers::MollifierDescription mollifier_description_from_json(const ordered_json& j);

ordered_json to_json(const models::PiecewiseModel& m);
models::PiecewiseModel model_from_json(const ordered_json& j);

/// Resolves a model reference: a name ("heaviside", "nu_plus:1", ...) or an
/// inline JSON object with "left"/"right"/"class_order".
models::PiecewiseModel resolve_model(const ordered_json& j);

/// Resolves "default", "alternate", or a path to a mollifier description file.
mollifiers::Mollifier resolve_mollifier(const std::string& ref);

/// Resolves a model reference string: a path to a model description file when
/// one exists there, otherwise a built-in name like "nu_plus:2".
models::PiecewiseModel resolve_model_ref(const std::string& ref);

}  // namespace deltalab::serialize

#endif
