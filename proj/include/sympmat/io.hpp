#pragma once

// JSON and CSV forms shared by the CLI and the Python bindings. Labels are
// signed integers (i* written as -i), rationals are "p/q" strings.

#include <json.hpp>

#include <string>
#include <vector>

#include "sympmat/matroid.hpp"
#include "sympmat/polytope.hpp"
#include "sympmat/strata.hpp"
#include "sympmat/witness.hpp"

namespace sympmat::io {

using Json = nlohmann::ordered_json;

Json pair_to_json(const Pair& p, int n);
Json bases_to_json(const BasisSet& b, int n);
/// Reads [[a, b], ...] of signed labels. Throws InvalidInput.
BasisSet bases_from_json(const Json& j, int n);

/// {"n": int, "bases": [[int, int], ...]}; returns n through `n_out`.
BasisSet read_matroid_document(const Json& doc, int& n_out);

Json to_json(const SymmetricMatroid& m);
Json to_json(const LatticePolytope& p);
Json to_json(const PluckerWitness& w);
Json to_json(const CertificateCheck& c);
Json to_json(const RepresentabilityReport& r, int n);
Json to_json(const StabilizerReport& s);
Json to_json(const CellDimensions& d);
Json to_json(const StratumReport& r);
Json to_json(const Classification& c);
Json to_json(const SchubertVariety& s, int n);

PluckerWitness witness_from_json(const Json& j);

std::string_view to_string(Trichotomy t);
std::string_view to_string(Torus t);
std::string_view to_string(DimensionCase c);

/// Signed-label text such as "[[1,2],[-1,-2]]".
std::string bases_text(const BasisSet& b, int n);
std::string bags_text(const SymmetricMatroid& m);

/// One row per stratum.
std::string strata_csv(const Classification& c);

}  // namespace sympmat::io
