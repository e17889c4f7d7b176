#ifndef HARDY_IO_HPP
#define HARDY_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/interp.hpp"
#include "hardy/pick.hpp"

namespace hardy::io {

using Json = nlohmann::ordered_json;

/// Parses text, turning syntax errors into ErrorCode::invalid_argument.
Json parse(const std::string& text, const std::string& what);

/// Serialises with every number printed as %.17g. Arrays of numbers or of
/// complex pairs stay on one line; everything else is indented by two
/// spaces. Ends with a newline.
std::string dump(const Json& j);

// Complex numbers are [re, im] (a bare number means im = 0). Matrices are
// lists of rows.
cplx complex_from(const Json& j);
Json to_json(cplx z);
Matrix matrix_from(const Json& j);
Json to_json(const Matrix& m);

/// {"p": rows, "q": cols, "coeffs": [[c_00, c_01, ...], ...]} with each
/// coefficient flattened row-major. p and q default to 1.
TaylorSeries series_from(const Json& j);
Json to_json(const TaylorSeries& f);

/// {"zeros": [{"a": z, "m": multiplicity}], "c": unimodular}. m defaults to
/// 1 and c to 1.
BlaschkeProduct blaschke_from(const Json& j);
Json to_json(const BlaschkeProduct& b);

/// {"nodes": [w_j], "xi": [xi_j], "eta": [eta_j]}. Each xi_j and eta_j is a
/// list of complex entries; a bare number stands for a vector of length 1,
/// so a complex scalar is written [[re, im]].
NPData np_data_from(const Json& j);
Json to_json(const NPData& d);

/// "linear_functional": {"points", "u", "gamma"}; "derivative": {"a", "M",
/// "xi", "gamma"}. A scalar gamma or xi entry is read as a 1 x 1 matrix.
std::string problem_kind(const Json& j);
LinearFunctionalProblem linear_functional_from(const Json& j);
DerivativeProblem derivative_from(const Json& j);

/// A list of series or {"parts": [...]}.
std::vector<TaylorSeries> series_list_from(const Json& j);

} // namespace hardy::io

#endif
