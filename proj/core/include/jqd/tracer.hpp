#pragma once

#include <string>
#include <vector>

#include "jqd/limitfield.hpp"
#include "jqd/rational_qd.hpp"
#include "jqd/roots.hpp"

namespace jqd {

struct TraceOptions {
    double budget = 50.0;       // Q-length per arc
    double seed_eps = 1e-6;     // times qd.scale()
    double capture = 1e-4;      // times qd.scale()
    int max_steps = 200000;
    double rtol = 1e-10;        // local error per step relative to |dz|
    double infinity_radius = 1e6;  // times qd.scale()
    int workers = 1;
};

enum class EndKind { critical_point, pole_spiral, pole_radial, closed, infinity, truncated };
const char* to_string(EndKind k);

struct ArcEnd {
    EndKind kind = EndKind::truncated;
    int cp = -1;      // critical point index for critical_point / pole_* ends
    int ray = -1;     // arrival ray at a zero
    Spiral spiral = Spiral::radial;  // ccw / cw for pole_spiral
};

struct TrajectoryArc {
    std::vector<cx> points;
    double q_length = 0;   // Re of the accumulated integral of sqrt(Q) dz
    double im_drift = 0;   // Im of the same integral
    int start_cp = -1;
    int start_ray = -1;
    ArcEnd end;
    int steps = 0;
};

struct GraphEdge {
    int a = -1, b = -1;        // critical point indices
    double q_length = 0;
    std::vector<int> arcs;     // one or two arcs realizing the edge
};

struct CriticalGraph {
    std::vector<CriticalPoint> vertices;
    std::vector<TrajectoryArc> arcs;
    std::vector<GraphEdge> edges;
};

// Unit direction e^{i theta}, theta = -arg(Q)/2 mod pi, sign closest to prev_dir.
cx direction_field(const RationalQD& qd, cx z, cx prev_dir);

// Local ray angles (2 pi k - arg lead) / (m + 2) at critical point i.
std::vector<double> ray_angles(const RationalQD& qd, int i);

// One trajectory from z0 heading along dir0. start_cp >= 0 disarms capture at
// that point until the arc has left its neighbourhood.
TrajectoryArc trace_arc(const RationalQD& qd, cx z0, cx dir0, int start_cp,
                        const TraceOptions& opt = {});

CriticalGraph trace_critical(const RationalQD& qd, const TraceOptions& opt = {});
inline CriticalGraph trace_critical(const NormalizedQD& qd, const TraceOptions& opt = {}) {
    return trace_critical(RationalQD::from_normalized(qd), opt);
}

// Integral of sqrt|Q| |dz| along the polyline, Gauss-Legendre on each chord.
double q_length(const RationalQD& qd, const TrajectoryArc& arc);

struct ClosedProbe {
    cx seed;
    bool closed_candidate = false;
    double return_distance = 0;  // closest approach to the seed after leaving it
    double period = 0;           // Q-length at closest return
};

// Advisory: flags orbits that return within the capture radius of their seed.
std::vector<ClosedProbe> closed_trajectory_probe(const RationalQD& qd, const std::vector<cx>& seeds,
                                                 double budget, const TraceOptions& opt = {});

struct DistanceStats {
    double min = 0, median = 0, p95 = 0, max = 0;
    int n = 0;
};

// Distance of each root to the nearest arc polyline; throws empty_graph.
DistanceStats support_distance(const RootCountingMeasure& mu, const CriticalGraph& graph);

std::string graph_csv(const CriticalGraph& g);

}  // namespace jqd
