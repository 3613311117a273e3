#pragma once

#include "btg/graph/obligations.hpp"
#include "btg/transformers/transformer.hpp"

namespace btg::graph {

/// Formula in target syntax. Throws MorphismUnchecked unless `check` is the
/// check of `m` and has no Failed obligation.
kernel::Formula transport(const MorphismCheck& check, const Morphism& m, const kernel::Formula& f);

/// Transformer usable in `target`: rule sets are translated rule by rule,
/// generic ones re-specialized with the translated binding, opaque ones
/// replaced by the target transformer `transformer_map` names. Throws
/// MorphismUnchecked, NonTransportable, ShapeMismatch.
transformers::Transformer transport(const MorphismCheck& check, const Morphism& m, const transformers::Transformer& t,
                                    const BiformTheory& target);

/// Translated copy of a rules or generic transformer. Language classes keep
/// their translated sort but lose their signature; the caller re-anchors them.
/// Throws NonTransportable for opaque transformers.
transformers::Transformer translate_transformer(const kernel::Renaming& r, const transformers::Transformer& t,
                                                const kernel::Signature& target, std::string name);

}  // namespace btg::graph
