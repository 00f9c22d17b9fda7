#pragma once

#include <complex>
#include <string>

#include <json.hpp>

namespace jqdcli {

using Json = nlohmann::ordered_json;

// Serializes with every float printed as %.17g; non-finite values become null.
std::string dump(const Json& j);

inline Json cx_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

}  // namespace jqdcli
