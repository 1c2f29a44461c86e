#pragma once

#include <nlohmann/json.hpp>

#include "spinor/blocks.hpp"
#include "spinor/classfield.hpp"
#include "spinor/dvr_matrix.hpp"
#include "spinor/gamma.hpp"
#include "spinor/lattice_oracle.hpp"

namespace spinor {

using Json = nlohmann::json;

// GammaClass <-> {"n": int, "b": [int]}
Json gamma_to_json(const GammaClass& x);
GammaClass gamma_from_json(const Json& j);

// CommAlgebra <-> {"components": [[e, f], ...]}
Json comm_algebra_to_json(const CommAlgebra& a);
CommAlgebra comm_algebra_from_json(const Json& j);

// Host block: a gamma-class object (grid) or a commutative algebra object.
Json block_to_json(const Block& host);
Block block_from_json(const Json& j);

Json coset_set_to_json(const CosetSet& s);
CosetSet coset_set_from_json(const Json& j);

Json placements_to_json(const std::vector<Placement>& ps);

// DvrMatrix <-> {"prime": p, "entries": [["num/den", ...], ...]}
Json dvr_matrix_to_json(const DvrMatrix& m);
DvrMatrix dvr_matrix_from_json(const Json& j);

Json abelian_group_to_json(const AbelianGroup& g);
AbelianGroup abelian_group_from_json(const Json& j);

Json genus_input_to_json(const GenusInput& input);
GenusInput genus_input_from_json(const Json& j);

Json quotient_to_json(const Quotient& q);
Json labeled_complex_to_json(const LabeledComplex& c);
Json oracle_report_to_json(const OracleReport& r);

} // namespace spinor
