#pragma once

#include <json.hpp>

#include "dra/dyn_polynomial.hpp"
#include "dra/osp.hpp"
#include "dra/pbw.hpp"
#include "dra/verma.hpp"

namespace dra {

using json = nlohmann::json;

json scalar_to_json(const DynamicalScalar &f);
DynamicalScalar scalar_from_json(const json &j);

json element_to_json(const AlgebraElement &a);
AlgebraElement element_from_json(const json &j);

json dyn_polynomial_to_json(const DynPolynomial &p);

json irrep_to_json(const IrrepData &rep);
json decomposition_to_json(const DecompositionReport &rep);

std::string irrep_to_latex(const IrrepData &rep);

} // namespace dra
