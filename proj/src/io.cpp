#include "hankel/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hankel/errors.hpp"

namespace hankel::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) {
    throw InputError(std::string("field '") + name + "': expected an integer");
  }
  return v.get<int>();
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError("field '" + where + "': expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_array()) throw InputError(std::string("field '") + name + "': expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(number(v[i], std::string(name) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

void dump_to(const json& j, int digits, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ", ";
        first = false;
        out += json(it.key()).dump();
        out += ": ";
        dump_to(it.value(), digits, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        dump_to(j[i], digits, out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>(), digits);
      break;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_number(double v, int digits) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string dump(const json& j, int digits) {
  std::string out;
  dump_to(j, digits, out);
  return out;
}

json to_json(const HankelTensor& a) {
  return {{"order", a.order()},
          {"dim", a.dim()},
          {"gen", std::vector<double>(a.gen().begin(), a.gen().end())}};
}

json to_json(const HankelMatrix& m) {
  return {{"size", m.size()},
          {"w", std::vector<double>(m.w().begin(), m.w().end())},
          {"completion", optional_number(m.completion())}};
}

json to_json(const PlaneTensor& p) {
  return {{"degree", p.degree()},
          {"p", std::vector<double>(p.coeffs().begin(), p.coeffs().end())}};
}

json to_json(const VandermondeDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms()) terms.push_back({{"node", t.node}, {"coeff", t.coeff}});
  return {{"terms", terms}};
}

json to_json(const DiscreteMeasure& mu) {
  return {{"nodes", std::vector<double>(mu.nodes().begin(), mu.nodes().end())},
          {"weights", std::vector<double>(mu.weights().begin(), mu.weights().end())}};
}

json to_json(const CopositivityReport& r) {
  return {{"copositive", r.is_copositive},
          {"witness_t", optional_number(r.witness_t)},
          {"min_phi", r.min_phi},
          {"critical_points", r.critical_points}};
}

json to_json(const EigenPair& e) {
  return {{"kind", e.kind == EigenKind::Z ? "Z" : "H"},
          {"value", e.value},
          {"vector", e.vector},
          {"converged", e.converged},
          {"residual", e.residual}};
}

json to_json(const StrongCertificate& c) {
  json j = {{"strong", c.is_strong},
            {"min_eigenvalue", c.min_eigenvalue},
            {"completion", optional_number(c.completion_used)},
            {"matrix", to_json(c.matrix)}};
  j["violation_vector"] = c.violation_vector ? json(*c.violation_vector) : json(nullptr);
  return j;
}

json to_json(const ZBounds& b) {
  return {{"source", b.source == BoundSource::Prop6 ? "prop6" : "prop7"},
          {"upper_for_min", optional_number(b.upper_for_min)},
          {"lower_for_max", optional_number(b.lower_for_max)}};
}

HankelTensor tensor_from_json(const json& j) {
  const int order = int_field(j, "order");
  const int dim = int_field(j, "dim");
  std::vector<double> gen = numbers(j, "gen");
  try {
    return HankelTensor(order, dim, std::move(gen));
  } catch (const Error& e) {
    throw InputError(std::string("field 'gen': ") + e.what());
  }
}

PlaneTensor plane_from_json(const json& j) {
  const int degree = int_field(j, "degree");
  std::vector<double> p = numbers(j, "p");
  try {
    return PlaneTensor(degree, std::move(p));
  } catch (const Error& e) {
    throw InputError(std::string("field 'p': ") + e.what());
  }
}

VandermondeDecomposition decomposition_from_json(const json& j) {
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("field 'terms': expected an array");
  std::vector<VandermondeTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "terms[" + std::to_string(i) + "]";
    if (!terms[i].is_object()) throw InputError("field '" + where + "': expected an object");
    if (!terms[i].contains("node")) throw InputError("missing field '" + where + ".node'");
    if (!terms[i].contains("coeff")) throw InputError("missing field '" + where + ".coeff'");
    out.push_back({number(terms[i]["node"], where + ".node"),
                   number(terms[i]["coeff"], where + ".coeff")});
  }
  try {
    return VandermondeDecomposition(std::move(out));
  } catch (const Error& e) {
    throw InputError(std::string("field 'terms': ") + e.what());
  }
}

DiscreteMeasure measure_from_json(const json& j) {
  std::vector<double> nodes = numbers(j, "nodes");
  std::vector<double> weights = numbers(j, "weights");
  try {
    return DiscreteMeasure(std::move(nodes), std::move(weights));
  } catch (const Error& e) {
    throw InputError(std::string("field 'weights': ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace hankel::io
