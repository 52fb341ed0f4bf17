#include "zariski/codec.hpp"

#include "zariski/error.hpp"

namespace zariski::codec {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::vector<PointPair> decode_pairs(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of [point, image] pairs");
  std::vector<PointPair> pairs;
  for (const json& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
        !item[1].is_number_unsigned()) {
      throw ParseError("expected [point, image] with non-negative integers");
    }
    pairs.emplace_back(item[0].get<Point>(), item[1].get<Point>());
  }
  return pairs;
}

json encode_pairs(std::span<const PointPair> pairs) {
  json out = json::array();
  for (const auto& [x, y] : pairs) out.push_back({x, y});
  return out;
}

std::vector<FinPermutation> decode_perm_list(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of permutations");
  std::vector<FinPermutation> out;
  for (const json& item : j) out.push_back(decode_permutation(item));
  return out;
}

json encode_perm_list(const std::vector<FinPermutation>& perms) {
  json out = json::array();
  for (const auto& p : perms) out.push_back(encode(p));
  return out;
}

}  // namespace

json encode(const FinPermutation& p) { return encode_pairs(p.pairs()); }
json encode(const PartialBijection& b) { return encode_pairs(b.pairs()); }

json encode(const PermMatrix& m) {
  json out = json::array();
  for (const auto& row : m.rows()) out.push_back(encode_perm_list(row));
  return out;
}

json encode(const PermPair& p) { return {{"A", encode(p.a())}, {"B", encode(p.b())}}; }

json encode(const SemigroupWord<FinPermutation>& w) {
  return {{"coeffs", encode_perm_list(w.coefficients())}};
}

json encode(const GroupWord<FinPermutation>& w) {
  json signs = json::array();
  for (Sign s : w.signs()) signs.push_back(static_cast<int>(s));
  return {{"coeffs", encode_perm_list(w.coefficients())}, {"signs", signs}};
}

json encode(const GElement& g) {
  json comps = json::array();
  for (const auto& [k, exps] : g.components()) {
    json letters = json::array();
    for (const auto& [n, e] : exps) letters.push_back({n, e});
    comps.push_back({k, letters});
  }
  return {{"components", comps}};
}

json encode(const NormalForm<FinPermutation>& nf) {
  json out = {{"kind", to_string(nf.kind)}};
  if (nf.pair) out["pair"] = encode(*nf.pair);
  return out;
}

json encode(const RewriteStep& step) {
  return {{"kind", to_string(step.kind)},
          {"row", step.row},
          {"signature_before", step.signature_before},
          {"signature_after", step.signature_after},
          {"violations_before", step.violations_before},
          {"violations_after", step.violations_after}};
}

json encode(const WitnessTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"case", to_string(s.side)},
                     {"row", s.row},
                     {"q", s.q},
                     {"image", s.image},
                     {"progress_a", s.progress_a},
                     {"progress_b", s.progress_b}});
  }
  return {{"separators", trace.separators},
          {"forbidden_products", trace.forbidden_products.size()},
          {"steps", steps},
          {"partial", encode(trace.partial)},
          {"final", encode(trace.final)}};
}

FinPermutation decode_permutation(const json& j) {
  return guarded("permutation", [&] { return FinPermutation::from_pairs(decode_pairs(j)); });
}

PartialBijection decode_partial(const json& j) {
  return guarded("partial bijection", [&] { return PartialBijection::from_pairs(decode_pairs(j)); });
}

PermMatrix decode_matrix(const json& j) {
  return guarded("matrix", [&] {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<FinPermutation>> rows;
    for (const json& row : j) rows.push_back(decode_perm_list(row));
    return PermMatrix(std::move(rows));
  });
}

PermPair decode_pair(const json& j) {
  return guarded("matrix pair", [&] {
    if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
      throw ParseError("matrix pair needs keys \"A\" and \"B\"");
    }
    return PermPair(decode_matrix(j.at("A")), decode_matrix(j.at("B")));
  });
}

SemigroupWord<FinPermutation> decode_semigroup_word(const json& j) {
  return guarded("semigroup word", [&] {
    return SemigroupWord<FinPermutation>(decode_perm_list(j.at("coeffs")));
  });
}

GroupWord<FinPermutation> decode_group_word(const json& j) {
  return guarded("group word", [&] {
    std::vector<Sign> signs;
    for (const json& s : j.at("signs")) {
      const int v = s.get<int>();
      if (v != 1 && v != -1) throw ParseError("signs must be 1 or -1");
      signs.push_back(v > 0 ? Sign::Positive : Sign::Negative);
    }
    return GroupWord<FinPermutation>(decode_perm_list(j.at("coeffs")), std::move(signs));
  });
}

GElement decode_gelement(const json& j) {
  return guarded("separating group element", [&] {
    std::map<std::uint64_t, Exponents> comps;
    for (const json& c : j.at("components")) {
      Exponents& exps = comps[c.at(0).get<std::uint64_t>()];
      for (const json& letter : c.at(1)) {
        exps[letter.at(0).get<Generator>()] += letter.at(1).get<std::int64_t>();
      }
    }
    return GElement::from_components(comps);
  });
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace zariski::codec
