#pragma once

#include <string>
#include <vector>

#include <jqd/qdclass.hpp>
#include <jqd/tracer.hpp>

namespace jqdcli {

std::string graph_svg(const jqd::CriticalGraph& g, double half_width);

struct SweepCell {
    int i = 0, j = 0;
    double re = 0, im = 0;
    bool ok = false;
    jqd::Variant variant = jqd::Variant::Degenerate;
    std::string label;  // variant refined by orientation and the zero on the outer circle domain
    bool boundary = false;
    std::string error;
};

std::string sweep_svg(const std::vector<SweepCell>& cells, int res, double x0, double x1, double y0, double y1,
                      std::complex<double> p1);

}  // namespace jqdcli
