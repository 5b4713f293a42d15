#include "cwset/builder.hpp"

#include <stdexcept>

namespace cwset {

namespace {

void validate(const IterationSpec& spec) {
    if (spec.d < 2) throw std::invalid_argument("dilation must be at least 2");
    if (spec.depth < 1) throw std::invalid_argument("depth must be at least 1");
    if (spec.seed.empty()) throw std::invalid_argument("seed region is empty");
}

}  // namespace

IterationSpec IterationSpec::paper(int depth) {
    const Scalar third = Rational(1, 3);
    IterationSpec spec;
    spec.d = 3;
    spec.seed = Region{ConvexPolygon::box(0, 0, third, third)};
    spec.step = {third, third};
    spec.depth = depth;
    return spec;
}

Region scaling_set(const IterationSpec& spec) {
    validate(spec);
    const Scalar shrink = Rational(1, spec.d);
    Region level = spec.seed, out = spec.seed;
    for (int i = 1; i < spec.depth; ++i) {
        level = translate(spec.step, dilate(shrink, level));
        out = out.concat(level);
    }
    return out.normalized();
}

Region wavelet_from_scaling(const IterationSpec& spec) {
    Region e = scaling_set(spec);
    return subtract(dilate(Scalar(spec.d), e), e);
}

Region transport(Transport key, const Region& r) { return transform(transport_matrix(key), r); }

}  // namespace cwset
