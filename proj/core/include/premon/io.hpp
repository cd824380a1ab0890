#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "premon/classification.hpp"
#include "premon/irreducibles.hpp"

namespace premon {

using json = nlohmann::ordered_json;

json read_json_file(const std::string& path);  // InputError on failure

// {"n": int, "identity": int, "table": [[int]], "labels": [str]?}
FiniteMonoid monoid_from_json(const json& j);
json monoid_to_json(const FiniteMonoid& m);
FiniteMonoid load_monoid_file(const std::string& path);

// {"kind":"divisibility"} | {"kind":"matrix","rel":[[bool]]}
// | {"kind":"pullback","phi":[int],"codomain":<matrix or {"kind":"chain","n":k}>}
// | {"kind":"phi","A":[int]}
PreorderRel preorder_from_json(const json& j, const FiniteMonoid& m);

json to_json(const LengthSet& s);
json to_json(const FactorWord& w);
json to_json(const ClassVector& v);
json to_json(const MinimalResult& r);
json to_json(const StructureFlags& f);
json to_json(const PremonoidFlags& f);
json to_json(const IrreducibleReport& r);
json to_json(const ClassificationReport& r);
json to_json(const ElementProfile& e);

// Words and sets printed with element labels.
std::string word_text(const FiniteMonoid& m, const FactorWord& w);
std::string set_text(const FiniteMonoid& m, const Bitset& s);

// DOT graph of the strict order between equivalence classes (Hasse edges).
std::string condensation_dot(const Premonoid& p);
// DOT graph of the layer sequence S_k as a unary automaton: one node per
// distinct layer, the back edge closing the cycle.
std::string layer_automaton_dot(const FiniteMonoid& m, const LayerSequence& seq);

}  // namespace premon
