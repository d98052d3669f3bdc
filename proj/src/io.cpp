#include "bicomplex/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace bicomplex::io {

namespace {

double parse_real(const std::string& token) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size() || errno == ERANGE) {
    throw ParseError("not a real number: '" + token + "'");
  }
  return v;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string> split_commas(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    const auto field = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    if (first == std::string_view::npos) throw ParseError("empty CSV field in '" + std::string(line) + "'");
    out.emplace_back(field.substr(first, last - first + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double json_real(const Json& j) {
  if (!j.is_number()) throw ParseError("expected a number, got " + j.dump());
  return j.get<double>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

long json_dim(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer() || v.get<long>() < 0) throw ParseError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<long>();
}

void dump_into(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out.push_back(',');
        first = false;
        out += Json(key).dump();
        out.push_back(':');
        dump_into(value, out);
      }
      out.push_back('}');
      break;
    }
    case Json::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const auto& value : j) {
        if (!first) out.push_back(',');
        first = false;
        dump_into(value, out);
      }
      out.push_back(']');
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_real(v) : "null";
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_scalar(const Bicomplexd& w) {
  return format_real(w.a()) + ' ' + format_real(w.b()) + ' ' + format_real(w.c()) + ' ' + format_real(w.d());
}

Bicomplexd parse_scalar(std::string_view text) {
  const auto parts = split_whitespace(text);
  if (parts.size() != 4) throw ParseError("expected four reals 'a b c d', got '" + std::string(text) + "'");
  return {parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]), parse_real(parts[3])};
}

Json to_json(const Bicomplexd& w) { return Json::array({w.a(), w.b(), w.c(), w.d()}); }

Json to_json(const TVectord& x) {
  Json out = Json::array();
  for (const auto& w : x) out.push_back(to_json(w));
  return out;
}

Json to_json(const TMatrixd& a) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) entries.push_back(to_json(a(i, k)));
  return {{"m", a.rows()}, {"n", a.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const TFunctionald& f) { return {{"n", f.dim()}, {"coeffs", to_json(f.coeffs)}}; }

Json to_json(const NormReport<double>& r) {
  return {{"sup_norm", r.sup_norm}, {"idem_norm", r.idem_norm}, {"s1", r.s1}, {"s2", r.s2}};
}

Json to_json(const ExtensionReport<double>& r) {
  return {{"extension", to_json(r.extension)},
          {"restriction_error", r.restriction_error},
          {"x_component_norms", Json::array({r.x_component_norm1, r.x_component_norm2})},
          {"y_component_norms", Json::array({r.y_component_norm1, r.y_component_norm2})},
          {"x_norms", to_json(r.x_norms)},
          {"y_norms", to_json(r.y_norms)}};
}

Json to_json(const SingularityReport& r) {
  return {{"is_singular", r.is_singular},
          {"vanishing_components", r.vanishing_components},
          {"magnitudes", Json::array({r.magnitude1, r.magnitude2})}};
}

Json to_json(const IdempotentForm<double>& h) {
  return {{"h1", Json::array({h.h1.real(), h.h1.imag()})}, {"h2", Json::array({h.h2.real(), h.h2.imag()})}};
}

Bicomplexd scalar_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("a scalar is an array [a, b, c, d], got " + j.dump());
  return {json_real(j[0]), json_real(j[1]), json_real(j[2]), json_real(j[3])};
}

TVectord vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a vector is an array of [a, b, c, d] entries");
  TVectord x(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) x[static_cast<Eigen::Index>(k)] = scalar_from_json(j[k]);
  return x;
}

TMatrixd matrix_from_json(const Json& j) {
  const long m = json_dim(j, "m");
  const long n = json_dim(j, "n");
  const auto& entries = field(j, "entries");
  if (!entries.is_array() || static_cast<long>(entries.size()) != m * n) {
    throw ParseError("matrix needs m*n = " + std::to_string(m * n) + " entries");
  }
  TMatrixd a(m, n);
  for (long i = 0; i < m; ++i)
    for (long k = 0; k < n; ++k) a(i, k) = scalar_from_json(entries[static_cast<std::size_t>(i * n + k)]);
  return a;
}

Submodule<double> submodule_from_json(const Json& j) {
  const long n = json_dim(j, "n");
  const auto& gens = field(j, "generators");
  if (!gens.is_array()) throw ParseError("'generators' must be an array of vectors");
  std::vector<TVectord> out;
  for (const auto& g : gens) {
    auto x = vector_from_json(g);
    if (x.size() != n) throw DimensionMismatch(n, x.size());
    out.push_back(std::move(x));
  }
  return Submodule<double>(n, std::move(out));
}

Json submodule_to_json(const Submodule<double>& y) {
  Json gens = Json::array();
  for (const auto& g : y.generators()) gens.push_back(to_json(g));
  return {{"n", y.ambient_dim()}, {"generators", std::move(gens)}};
}

FunctionalFile functional_from_json(const Json& j) {
  FunctionalFile ff;
  ff.n = json_dim(j, "n");
  if (j.contains("values")) {
    ff.has_values = true;
    for (const auto& w : vector_from_json(j.at("values"))) ff.values.push_back(w);
  } else {
    const auto x = vector_from_json(field(j, "coeffs"));
    if (x.size() != ff.n) throw DimensionMismatch(ff.n, x.size());
    for (const auto& w : x) ff.coeffs.push_back(w);
  }
  return ff;
}

std::string vector_to_csv(const TVectord& x) {
  std::string out;
  for (const auto& w : x) {
    out += format_real(w.a()) + ',' + format_real(w.b()) + ',' + format_real(w.c()) + ',' + format_real(w.d()) + '\n';
  }
  return out;
}

TVectord vector_from_csv(std::string_view text) {
  std::vector<Bicomplexd> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto parts = split_commas(line);
    if (parts.size() != 4) throw ParseError("CSV row needs four fields a,b,c,d: '" + line + "'");
    rows.emplace_back(parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2]), parse_real(parts[3]));
  }
  TVectord x(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) x[static_cast<Eigen::Index>(k)] = rows[k];
  return x;
}

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TVectord load_vector(const std::string& path) {
  const auto text = read_file(path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return vector_from_csv(text);
  return vector_from_json(parse_json(text));
}

}  // namespace bicomplex::io
