#include "json_out.hpp"

#include <cmath>
#include <cstdio>

namespace jqdcli {

namespace {

void write(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                write(it.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                write(j[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                break;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out += buf;
            break;
        }
        default: out += j.dump(); break;
    }
}

}  // namespace

std::string dump(const Json& j) {
    std::string s;
    write(j, s);
    s += '\n';
    return s;
}

}  // namespace jqdcli
