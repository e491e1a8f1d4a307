#include "octacover/compose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "octacover/errors.hpp"

namespace octacover {

MapCoefficients compose_pair(const MapCoefficients& o,
                             const MapCoefficients& i) {
    MapCoefficients r;
    r.a = o.a * i.a;
    r.b = o.a * i.b + o.b;
    r.c = o.c * i.c;
    r.d = o.c * i.d + o.d;
    r.e = o.e * i.a + o.g * i.e + o.alpha * i.a * i.d;
    r.f = o.f * i.c + o.g * i.f + o.alpha * i.b * i.c;
    r.g = o.g * i.g;
    r.alpha = o.alpha * i.a * i.c + o.g * i.alpha;
    r.beta = o.e * i.b + o.f * i.d + o.alpha * i.b * i.d + o.g * i.beta +
             o.beta;
    return r;
}

namespace {

// The contraction formula evaluated on composed coefficients, without the
// strictness check (used only to tighten a product bound, never to replace
// it when larger).
double raw_constant(const MapCoefficients& mc,
                    const ScaledTaxicabMetric& metric) {
    const double da = metric.delta * std::fabs(mc.alpha);
    const double cx = mc.a + metric.theta * (std::fabs(mc.e) + da);
    const double cy = mc.c + metric.theta * (std::fabs(mc.f) + da);
    return std::max(std::max(cx, cy), std::fabs(mc.g));
}

}  // namespace

ComposedSystem compose_system(const IfsSystem& base, std::size_t order,
                              const ComposeOptions& opts) {
    if (order < 1) throw Error("composition order must be at least 1");
    const std::size_t N = base.maps.size();
    if (N == 0) throw TooFewMaps(std::size_t{0});

    // count = N^order, refusing early so the intermediate levels also stay
    // under the cap.
    std::size_t count = 1;
    for (std::size_t t = 0; t < order; ++t) {
        if (count > opts.cap / N) {
            double approx = 1.0;
            for (std::size_t u = 0; u < order; ++u) approx *= double(N);
            const auto requested =
                approx >= double(std::numeric_limits<std::size_t>::max())
                    ? std::numeric_limits<std::size_t>::max()
                    : std::size_t(approx);
            throw SystemTooLarge(requested, opts.cap);
        }
        count *= N;
    }

    ComposedSystem sys;
    sys.order = order;
    sys.base_count = N;
    sys.metric = base.metric;
    sys.scale = base.scale;
    sys.n = base.n;
    sys.m = base.m;
    sys.maps = base.maps;

    // Level t holds all length-t compositions in lexicographic factor order;
    // prepending each base map as the new outermost factor keeps that order,
    // with the outermost factor most significant.
    for (std::size_t t = 1; t < order; ++t) {
        std::vector<IfsMap> next;
        next.reserve(sys.maps.size() * N);
        for (std::size_t outer = 0; outer < N; ++outer) {
            const IfsMap& om = base.maps[outer];
            for (const IfsMap& im : sys.maps) {
                IfsMap cm;
                cm.coeffs = compose_pair(om.coeffs, im.coeffs);
                cm.contraction = om.contraction * im.contraction;
                cm.k = om.k;
                cm.l = om.l;
                next.push_back(cm);
            }
        }
        sys.maps = std::move(next);
    }

    if (order > 1) {
        for (IfsMap& map : sys.maps) {
            map.fixed_pt = fixed_point(map.coeffs);
            if (opts.tighten)
                map.contraction = std::min(map.contraction,
                                           raw_constant(map.coeffs, sys.metric));
        }
    }
    return sys;
}

std::vector<std::pair<std::size_t, std::size_t>> factor_labels(
    const ComposedSystem& sys, std::size_t flat_index) {
    std::vector<std::pair<std::size_t, std::size_t>> labels(sys.order);
    std::size_t rest = flat_index;
    for (std::size_t t = sys.order; t-- > 0;) {
        const std::size_t digit = rest % sys.base_count;
        rest /= sys.base_count;
        labels[t] = {digit / sys.m + 1, digit % sys.m + 1};
    }
    return labels;
}

}  // namespace octacover
