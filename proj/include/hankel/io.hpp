#ifndef HANKEL_IO_HPP
#define HANKEL_IO_HPP

#include <json.hpp>
#include <string>

#include "hankel/associated.hpp"
#include "hankel/plane.hpp"
#include "hankel/spectra.hpp"
#include "hankel/tensor.hpp"
#include "hankel/vandermonde.hpp"

// JSON file formats. Readers throw InputError naming the offending field.
namespace hankel::io {

using nlohmann::json;

json to_json(const HankelTensor& a);
json to_json(const HankelMatrix& m);
json to_json(const PlaneTensor& p);
json to_json(const VandermondeDecomposition& d);
json to_json(const DiscreteMeasure& mu);
json to_json(const CopositivityReport& r);
json to_json(const EigenPair& e);
json to_json(const StrongCertificate& c);
json to_json(const ZBounds& b);

HankelTensor tensor_from_json(const json& j);
PlaneTensor plane_from_json(const json& j);
VandermondeDecomposition decomposition_from_json(const json& j);
DiscreteMeasure measure_from_json(const json& j);

json read_file(const std::string& path);

/// Serializes with every number printed to `digits` significant digits
/// (17 is round-trip safe for doubles).
std::string dump(const json& j, int digits = 17);

/// Formats a double with `digits` significant digits.
std::string format_number(double v, int digits = 17);

}  // namespace hankel::io

#endif  // HANKEL_IO_HPP
