#pragma once

#include "racforge/graph.hpp"

namespace racforge {

/// Augmented k-gon antiprism: two k-cycles in antiprism position plus a hub
/// vertex adjacent to all 2k ring vertices. 2k+1 vertices, 6k edges.
/// Roles: central, outer-quad, inner-quad, external-attach, internal-attach.
/// Throws InvalidParameter for k < 3.
LabeledGraph augmented_antiprism(int k);

enum class ExtendMode { Horizontal, Vertical };

/// Glue h onto g: h's external-attach pair is identified with g's (the shared
/// ring edge collapses to one) and one new edge joins the two internal-attach
/// vertices. h's surviving vertices are renamed with an instance suffix.
/// The result re-exposes attach roles on h's far side: the opposite ring side
/// for Horizontal, an adjacent (turned) side for Vertical.
/// Throws InvalidAttachment when attach roles are missing or not adjacent.
LabeledGraph extend(const LabeledGraph& g, const LabeledGraph& h, ExtendMode mode);

enum class SeedClass { A, B };

/// Exact hand-built RAC drawing of augmented_antiprism(4). Class B is the
/// mirror image of class A; the two realize the graph's two embeddings.
Drawing seed_drawing(SeedClass cls);

/// Exact RAC drawing of extend(augmented_antiprism(4), augmented_antiprism(4),
/// Horizontal), vertex names matching that graph.
Drawing extension_drawing();

}  // namespace racforge
