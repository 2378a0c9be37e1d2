#pragma once

#include <string>

#include "json.hpp"
#include "skein/bases.hpp"
#include "skein/genfun.hpp"
#include "skein/gram.hpp"
#include "skein/paths.hpp"
#include "skein/tl.hpp"

namespace skein::io {

using nlohmann::json;

// Laurent / delta polynomial renderings. Coefficients serialize as decimal
// strings so arbitrary precision survives the round trip.
json laurent_json(const alg::LaurentPoly& p);
json delta_json(const alg::DeltaPoly& p);
json rational_json(const alg::RationalFunc& r);
std::string rational_text(const alg::RationalFunc& r);

// Matching text format: local partner indices, bottom group | top group,
// cross-side partners tagged with b/t. e_1 in TL_2 reads "[2,1|2,1]".
std::string matching_text(const tl::PlanarMatching& m);
json matching_json(const tl::PlanarMatching& m);

std::string tuple_text(const bases::StepTuple& t);  // "1,2,1"
json tuple_json(const bases::StepTuple& t);

json path_json(const paths::DyckPath& p, int mark = -1);

json gram_matrix_json(const gram::GramMatrix& m);
json meander_matrix_json(const gram::MeanderMatrix& m);
std::string gram_matrix_table(const gram::GramMatrix& m);
std::string meander_matrix_table(const gram::MeanderMatrix& m);

json det_json(const alg::RationalFunc& det, const gram::DetFactored& f);

json series_json(const gf::TruncSeries& s);
std::string series_table(const gf::TruncSeries& s);

}  // namespace skein::io
