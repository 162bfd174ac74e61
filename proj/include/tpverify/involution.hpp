#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tpverify/constructions.hpp"
#include "tpverify/netgraph.hpp"

namespace tpv {

enum class PropertyKind : std::uint8_t { none, p1, p2, p3 };

/// Which structural property a family satisfies, and where: flat block
/// families use segment = 0, segment pieces carry their stage index and
/// whether they live on the mirrored side.
struct PropertyTag {
    PropertyKind kind = PropertyKind::none;
    std::size_t segment = 0;
    bool mirrored = false;

    friend bool operator==(const PropertyTag&, const PropertyTag&) = default;
};

/// "None", "P1", "P2(3)", "P1bar(2)", ...
std::string to_string(const PropertyTag& tag);

/// Selection for a flat block family: component c runs
/// P_{I[c]} -> P'_{J[c]} in build_lb(n); I and J strictly ascending.
struct LbContext {
    std::vector<std::size_t> I;
    std::vector<std::size_t> J;
    std::size_t n = 0;
};

/// Structural classification of a flat-block family against the three
/// cancellation patterns (mutually exclusive; checked).
PropertyTag classify_lb(const Network& net, const PathFamily& fam, const LbContext& ctx);

/// The sign-reversing involution on flat-block families: tagged
/// families map to tagged families of opposite weight, untagged
/// families are fixed.
PathFamily phi_lb(const Network& net, const PathFamily& fam, const LbContext& ctx);

/// Per-segment restrictions of a family of a segmented network, one
/// PathFamily per segment position, each holding the components in
/// family order.
struct SegmentedFamily {
    PathFamily flat;
    std::vector<PathFamily> pieces;
};

/// Splits each component along the segment boundaries.  Every
/// component must traverse the segments left to right, entering each
/// one exactly once.
SegmentedFamily decompose(const SegmentedNetwork& seg, const PathFamily& fam);

/// Inverse of decompose: concatenates the pieces, validating that they
/// chain at the boundary vertices.
PathFamily recompose(const SegmentedNetwork& seg, const SegmentedFamily& sf);

/// Classification of a single segment piece: rail components are
/// ignored and the block core is matched against the flat patterns (for
/// mirrored pieces, after reflecting back onto the forward side).
PropertyTag classify_segment(const SegmentedNetwork& seg, const PathFamily& piece,
                             std::size_t stage, bool mirrored);

/// The lifted involution on one segment piece: rails pass through
/// untouched, the flat involution acts on the core.
PathFamily phi_segment(const SegmentedNetwork& seg, const PathFamily& piece, std::size_t stage,
                       bool mirrored);

/// Tag of the piece the full involution would act on: forward stages
/// scanned ascending, then mirrored stages descending; kind none
/// exactly when the family is a fixed point.
PropertyTag classify_h(const SegmentedNetwork& seg, const PathFamily& fam);

/// The sign-reversing involution on families of the segmented network:
/// applies the lifted involution at the first moving piece in scan
/// order, or returns the family unchanged.
PathFamily phi_h(const SegmentedNetwork& seg, const PathFamily& fam);

/// Members whose classification is kind none.
std::vector<PathFamily> fixed_points(
    const std::vector<PathFamily>& families,
    const std::function<PropertyTag(const PathFamily&)>& classifier);

}  // namespace tpv
