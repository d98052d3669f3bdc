#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bicomplex/functional.hpp"

namespace bicomplex::io {

using Json = nlohmann::ordered_json;

/// "%.17g", with negative zero printed as "0".
std::string format_real(double v);

/// Scalar text form "a b c d".
std::string format_scalar(const Bicomplexd& w);
Bicomplexd parse_scalar(std::string_view text);

Json to_json(const Bicomplexd& w);
Json to_json(const TVectord& x);
/// {"m": m, "n": n, "entries": row-major [a, b, c, d] arrays}
Json to_json(const TMatrixd& a);
/// {"n": n, "coeffs": [...]}
Json to_json(const TFunctionald& f);
Json to_json(const NormReport<double>& r);
Json to_json(const ExtensionReport<double>& r);
Json to_json(const SingularityReport& r);
Json to_json(const IdempotentForm<double>& h);

Bicomplexd scalar_from_json(const Json& j);
TVectord vector_from_json(const Json& j);
TMatrixd matrix_from_json(const Json& j);
/// {"n": n, "generators": [vector, ...]}
Submodule<double> submodule_from_json(const Json& j);
Json submodule_to_json(const Submodule<double>& y);

/// A functional file is either {"n", "coeffs"} (a functional on T^n) or
/// {"n", "values"} (values on the generators of a submodule).
struct FunctionalFile {
  long n = 0;
  std::vector<Bicomplexd> coeffs;
  std::vector<Bicomplexd> values;
  bool has_values = false;
};
FunctionalFile functional_from_json(const Json& j);

/// One "a,b,c,d" row per entry.
std::string vector_to_csv(const TVectord& x);
TVectord vector_from_csv(std::string_view text);

/// Serializes with every floating-point number at 17 significant digits.
std::string dump(const Json& j);

Json parse_json(std::string_view text);
std::string read_file(const std::string& path);
/// Reads a vector from a .csv file or a JSON file.
TVectord load_vector(const std::string& path);

}  // namespace bicomplex::io
