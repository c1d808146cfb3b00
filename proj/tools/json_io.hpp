#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "lgr/chow.hpp"
#include "lgr/grassmann.hpp"
#include "lgr/matrix.hpp"
#include "lgr/pde_analysis.hpp"
#include "lgr/rational.hpp"
#include "lgr/symplectic.hpp"

// JSON transport for every library value: rationals as "a/b" strings, never
// floats, keys in fixed insertion order so identical inputs give identical
// bytes.
namespace lgr::io {

using Json = nlohmann::ordered_json;

// IoError on malformed JSON text.
Json parse_json(const std::string& text);

// Inline JSON when the argument starts with '[' or '{', else a file path.
Json load_payload(const std::string& arg);

std::string dump(const Json& j);

Rational rational_from(const Json& j);
Matrix matrix_from(const Json& j);
SymMatrix sym_from(const Json& j);
std::vector<Rational> covector_from(const Json& j);
MinorIndexed minor_indexed_from(const Json& j, int n);
SymplecticMatrix symplectic_from(const Json& j);
SpAlgebraElement algebra_from(const Json& j);
ChowSubspace chow_from(const Json& j);

Json to_json(const Rational& r);
Json to_json(const Matrix& m);
Json to_json(const SymMatrix& h);
Json to_json(const std::vector<Rational>& a);
Json to_json(const MinorIndexed& v);
Json to_json(const SymplecticMatrix& m);
Json to_json(const SpAlgebraElement& x);
Json to_json(const ChowSubspace& d);
Json to_json(const Signature& s);
Json to_json(const PointClass& c);
Json to_json(const Goursat2d& g);

}  // namespace lgr::io
