#include "jqd/errors.hpp"

namespace jqd {

void fail(const std::string& name, ErrorKind kind, const std::string& what) {
    throw Error(name, kind, what);
}
void fail_input(const std::string& name, const std::string& what) {
    throw Error(name, ErrorKind::invalid_input, what);
}
void fail_numeric(const std::string& name, const std::string& what) {
    throw Error(name, ErrorKind::numerical, what);
}

}  // namespace jqd
