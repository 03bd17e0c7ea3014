#pragma once

#include "linkhom/conjectures.hpp"
#include "linkhom/macdonald.hpp"
#include "linkhom/poincare.hpp"
#include "linkhom/qt_arith.hpp"
#include "linkhom/symfunc.hpp"
#include "linkhom/words.hpp"

#include <json.hpp>

namespace linkhom {

// Terms in graded-lex order; coefficients serialized as decimal strings so
// arbitrary-precision values survive.
nlohmann::json to_json(const RationalQat& x);
RationalQat rationalqat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Poly& p);

nlohmann::json to_json(const RatFunc& x);
RatFunc ratfunc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BarredWord& w);
BarredWord barredword_from_json(const nlohmann::json& j);

nlohmann::json symfunc_to_json(const SymFunc& f, const std::string& basis = "m");
SymFunc symfunc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MacExpansion& x);

nlohmann::json to_json(const PoincareSeries& s);

nlohmann::json to_json(const ConjectureReport& r);

}  // namespace linkhom
