#pragma once

// JSON encodings for the CLI surface.
//
// Scalar:         {"mode":"cyclotomic","r":R,"coeffs":["p/q",...]}   (coefficients of q^0, q^1, ...)
//                 {"mode":"rational","q":"p/q","value":"p/q"}
// AlgebraElement: [{"k":k,"n":n,"m":m,"coeff":<Scalar>}, ...]
// Form1 / Form2:  {"e_a":<elem>, ...} / {"e_ab":<elem>, ...}   (zero entries omitted)

#include <json.hpp>

#include "qsl2/calculus.hpp"
#include "qsl2/connection.hpp"
#include "qsl2/dirac.hpp"
#include "qsl2/verify.hpp"

namespace qsl2 {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldContext& ctx, const Json& j);

Json element_to_json(const AlgebraElement& f);
AlgebraElement element_from_json(const FieldContext& ctx, const Json& j);

Json form1_to_json(const Form1& w);
Json form2_to_json(const Form2& w);
Json tensor11_to_json(const Tensor11& t);
Json tensor21_to_json(const Tensor21& t);
Json connection_to_json(const Connection& A);
Json eigen_record_to_json(const EigenRecord& rec);
Json check_result_to_json(const CheckResult& res);

}  // namespace qsl2
