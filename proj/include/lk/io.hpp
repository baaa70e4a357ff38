#pragma once

#include "lk/lk_rep.hpp"
#include "lk/root_system.hpp"

#include <json.hpp>

namespace lk {

using json = nlohmann::json;

/// [[coeff, e_r, e_t], ...] sorted by (e_t, e_r); coeff is a decimal string.
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

/// {"type", "rank", "roots", "cartan"} with roots in matrix index order.
json to_json(const RootSystem& rs);

/// {"generator", "size", "entries"}; entries are rows.
json generator_to_json(int k, const RepMatrix& m);
RepMatrix generator_from_json(const json& j);

/// [{"k", "root", "poly"}, ...] over every (k, beta).
json ttable_to_json(const RootSystem& rs, const TTable& T);
TTable ttable_from_json(const RootSystem& rs, const json& j);

}  // namespace lk
