#pragma once

// JSON forms of the library types (nlohmann ADL hooks).

#include <json.hpp>

#include "opstat/core.hpp"
#include "opstat/enumerate.hpp"
#include "opstat/motzkin.hpp"
#include "opstat/paths.hpp"
#include "opstat/qpoly.hpp"
#include "opstat/statistics.hpp"

namespace opstat {

/// [[coeff, e_p, e_q, e_t, e_x], ...] in canonical order; a coefficient that
/// does not fit in a long is written as a decimal string.
inline void to_json(nlohmann::json& j, const LaurentPolynomial& f) {
  j = nlohmann::json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    nlohmann::json coeff = c.fits_slong_p() ? nlohmann::json(c.get_si()) : nlohmann::json(c.get_str());
    j.push_back({coeff, e[0], e[1], e[2], e[3]});
  }
}

inline void to_json(nlohmann::json& j, const OrderedSetPartition& pi) { j = pi.to_string(); }
inline void to_json(nlohmann::json& j, const Permutation& s) { j = s.images(); }
inline void to_json(nlohmann::json& j, const PathDiagram& h) {
  j = {{"path", h.path.to_string()}, {"labels", h.labels}};
}
inline void to_json(nlohmann::json& j, const MotzkinDiagram& d) {
  std::string steps;
  for (MotzkinStep s : d.steps) steps += static_cast<char>(s);
  j = {{"path", steps}, {"labels", d.labels}};
}

inline void to_json(nlohmann::json& j, const PartitionType& t) {
  j = {{"O", t.openers}, {"C", t.closers}, {"S", t.singletons}, {"T", t.transients}};
}

inline void to_json(nlohmann::json& j, const CoordStats& c) {
  j = nlohmann::json::object();
  for (StatName name : kCoordinateNames) j[std::string(to_string(name))] = c.get(name);
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"theorem", r.theorem}, {"params", r.params}, {"pass", r.pass}, {"lhs", r.lhs}, {"rhs", r.rhs}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
}

}  // namespace opstat
