#ifndef SPHORB_JSON_IO_HPP
#define SPHORB_JSON_IO_HPP

// JSON views of the core objects.  Schema choices that matter downstream:
// rationals are {"num": "...", "den": "..."} with decimal strings (never
// floats), weights are arrays of rationals, and key order is whatever
// nlohmann::json's object ordering produces so output is byte-stable.

#include <string>

#include "json.hpp"
#include "sphorb/hasse.hpp"
#include "sphorb/hilbert.hpp"
#include "sphorb/ktypes.hpp"
#include "sphorb/rational.hpp"
#include "sphorb/restricted.hpp"
#include "sphorb/sequences.hpp"
#include "sphorb/symmetric_pair.hpp"

namespace sphorb {

// Weight rendered on the fundamental weights of each k-block ("e.w1 + f.w2"
// style, central parts in brackets).
std::string omega_display(const SymmetricPair& pair, const Weight& w);

nlohmann::json rat_json(const Rat& x);
nlohmann::json weight_json(const Weight& w);
nlohmann::json pair_json(const SymmetricPair& pair);
nlohmann::json sequence_json(const SymmetricPair& pair, const SOSequence& seq);
nlohmann::json restricted_json(const RestrictedSystem& rs);
nlohmann::json poly_json(const Poly1& p);
nlohmann::json geometry_json(const GeometryReport& rep);
nlohmann::json hasse_json(const HasseGraph& g);

nlohmann::json error_json(const std::string& kind, const std::string& message);

}  // namespace sphorb

#endif
