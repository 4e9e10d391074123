#pragma once

#include <json.hpp>

#include "sqdyn/bounds.hpp"
#include "sqdyn/chebyshev.hpp"
#include "sqdyn/classify.hpp"
#include "sqdyn/dynamics.hpp"

// JSON views of the library's result types. Field elements and polynomial
// coefficients appear as codes, matching the textual CLI forms.
namespace sqdyn::report {

using nlohmann::ordered_json;

ordered_json to_json(const fpoly::Poly& f);
ordered_json to_json(const dynamics::OrbitSummary& o);
ordered_json to_json(const dynamics::SignSequence& s);
ordered_json to_json(const dynamics::RunResult& r);
ordered_json to_json(const dynamics::PreimageLevel& p);
ordered_json to_json(const classify::FormMatch& m);
ordered_json to_json(const classify::ClassificationReport& r);
ordered_json to_json(const classify::OracleResult& r);
ordered_json to_json(const classify::IntPoly& f);
ordered_json to_json(const bounds::WeilResult& w);
ordered_json to_json(const bounds::BoundReport& b);
ordered_json to_json(const bounds::EnvelopeResult& e);
ordered_json to_json(const bounds::RunBoundReport& r);

}  // namespace sqdyn::report
