#pragma once

#include <string>

#include "json.hpp"

#include "tpverify/constructions.hpp"
#include "tpverify/involution.hpp"
#include "tpverify/netgraph.hpp"
#include "tpverify/polymat.hpp"
#include "tpverify/qpoly.hpp"
#include "tpverify/seqmat.hpp"
#include "tpverify/verifier.hpp"

namespace tpv {

/// JSON forms used by the CLI dumps and the round-trip tests.
/// Polynomials are arrays of decimal coefficient strings in ascending
/// degree order (so exact integers survive any magnitude); matrices
/// flatten their entries row-major.

nlohmann::json to_json(const QPoly& p);
nlohmann::json to_json(const PolyMatrix& m);
nlohmann::json to_json(const RecurrenceData& data);
nlohmann::json to_json(const Network& net);
/// Network JSON plus a "segments" section (kind, index, vertex ids).
nlohmann::json to_json(const SegmentedNetwork& seg);
/// Ordered list of paths, each the ordered list of its arc ids.
nlohmann::json to_json(const PathFamily& family);
/// Rendered as the tag's display string.
nlohmann::json to_json(const PropertyTag& tag);
nlohmann::json to_json(const CheckResult& check);
nlohmann::json to_json(const Certificate& cert);

QPoly qpoly_from_json(const nlohmann::json& j);
PolyMatrix polymatrix_from_json(const nlohmann::json& j);
RecurrenceData recurrence_from_json(const nlohmann::json& j);
Network network_from_json(const nlohmann::json& j);

/// Pretty-prints to `path`, followed by a newline.
void write_json_file(const nlohmann::json& j, const std::string& path);

}  // namespace tpv
