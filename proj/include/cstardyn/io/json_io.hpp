#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "cstardyn/cocycle/cocycle.hpp"
#include "cstardyn/crossed/crossed_product.hpp"
#include "cstardyn/equivrep/equivariant_rep.hpp"
#include "cstardyn/multiplier/multiplier.hpp"

namespace cstardyn {

using Json = nlohmann::ordered_json;

/// Well-formed JSON with the wrong shape; `where` is a JSON-pointer-like path.
class JsonFormatError : public std::runtime_error {
 public:
  JsonFormatError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Complex numbers are [re, im]; plain numbers are accepted as real input.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& where);
Json matrix_to_json(const CMatrix& m);
/// Rows of entries; `rows`/`cols` of -1 accept any shape. An empty array is
/// a matrix with no rows and `cols` (or 0) columns.
CMatrix matrix_from_json(const Json& j, const std::string& where, int rows = -1, int cols = -1);
Json vector_to_json(const CVector& v);
CVector vector_from_json(const Json& j, const std::string& where, int size = -1);

/// {"group": {"cyclic": n} | {"symmetric": m} | {"mult": [[..]]}, "space": n,
///  "perm": [[..]]}; perm defaults to the trivial action.
Json system_to_json(const System& system);
System system_from_json(const Json& j, const std::string& where = "/system");

/// {"fiberDims": [..], "rho": [k][x] matrix, "v": [g] {"source": [..], "blocks": [x] matrix}}.
Json rep_to_json(const EquivariantRep& rep);
EquivariantRep rep_from_json(const System& system, const Json& j, const std::string& where = "/rep");

/// {"fiberDims": [..], "u": {"g": {"x": matrix}}}.
Json cocycle_to_json(const CocycleRep& c);
CocycleRep cocycle_from_json(const System& system, const Json& j, const std::string& where = "/cocycle");

/// {"g": n x n matrix}.
Json multiplier_to_json(const Multiplier& t);
Multiplier multiplier_from_json(const System& system, const Json& j, const std::string& where = "/multiplier");

Json report_to_json(const VerificationReport& report);
Json certificate_to_json(const PdCertificate& cert);
Json bounds_to_json(const NormBounds& bounds);

}  // namespace cstardyn
