#pragma once

#include <nlohmann/json.hpp>

#include "zariski/perm.hpp"
#include "zariski/ragged.hpp"
#include "zariski/sepgroup.hpp"
#include "zariski/witness.hpp"
#include "zariski/words.hpp"

// JSON encodings shared by the CLI and its input files.
//
//   permutation        [[point, image], ...] sorted by point, fixed points omitted
//   partial bijection  same shape, any injective pairs
//   ragged matrix      [row, ...], each row an array of permutations
//   matrix pair        {"A": matrix, "B": matrix}
//   word               {"coeffs": [perm, ...], "signs": [1|-1, ...]} (no signs
//                      for semigroup words)
//   separating group   {"components": [[k, [[n, e], ...]], ...]}
//
// Decoders throw ParseError on malformed input.

namespace zariski::codec {

using nlohmann::json;

json encode(const FinPermutation& p);
json encode(const PartialBijection& b);
json encode(const PermMatrix& m);
json encode(const PermPair& p);
json encode(const SemigroupWord<FinPermutation>& w);
json encode(const GroupWord<FinPermutation>& w);
json encode(const GElement& g);
json encode(const NormalForm<FinPermutation>& nf);
json encode(const RewriteStep& step);
json encode(const WitnessTrace& trace);

FinPermutation decode_permutation(const json& j);
PartialBijection decode_partial(const json& j);
PermMatrix decode_matrix(const json& j);
PermPair decode_pair(const json& j);
SemigroupWord<FinPermutation> decode_semigroup_word(const json& j);
GroupWord<FinPermutation> decode_group_word(const json& j);
GElement decode_gelement(const json& j);

/// Parses text as JSON, mapping syntax errors to ParseError.
json parse(std::string_view text);

}  // namespace zariski::codec
