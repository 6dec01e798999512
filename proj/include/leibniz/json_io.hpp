#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "leibniz/cyclic.hpp"
#include "leibniz/invariants.hpp"
#include "leibniz/series.hpp"
#include "leibniz/subalgebras.hpp"

namespace leibniz::io {

// Field order is part of the output contract: reports must be byte-identical
// across runs, so everything goes through ordered_json.
using json = nlohmann::ordered_json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Backend b);

json matrix_to_json(const Matrix& m);
json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, Backend b, const TolerancePolicy& tol);

json element_to_json(const Element& e);

struct ParsedAlgebra {
    LeibnizAlgebra algebra;
    // set when the file used the cyclic presentation form
    std::optional<CyclicPresentation> presentation;
};

// Accepts either the general structure-tensor form
//   {"dim": n, "scalar": "exact"|"float", "products": [{"i":..,"j":..,"coeffs":[..]}]}
// (i, j 1-based; omitted pairs are zero) or the cyclic form
//   {"type": "cyclic", "dim": n, "scalar": .., "coeffs": [alpha_2..alpha_n]}.
// Supplying dim coefficients (an alpha_1) is rejected.
ParsedAlgebra algebra_from_json(const json& j);
ParsedAlgebra load_algebra_file(const std::string& path);

json algebra_to_json(const LeibnizAlgebra& a);
json presentation_to_json(const CyclicPresentation& p);

json check_to_json(const LeibnizCheckResult& r);
json series_to_json(const SeriesReport& r);
json engel_to_json(const EngelReport& r);
json ideal_to_json(const IdealCheckResult& r);
json normalizers_to_json(const NormalizerReport& r);
json cyclicity_to_json(const CyclicityResult& r);
json class_to_json(const CanonicalClass& c);
json maximals_to_json(const MaximalsReport& r);
json killing_to_json(const KillingReport& r);
json derivations_to_json(const DerivationSpace& d);
json semisimplicity_to_json(const SemisimplicityReport& r);

}  // namespace leibniz::io
