#include "teleclone/measure.hpp"

#include <cmath>
#include <numbers>

namespace teleclone {

std::pair<ClassicalSignal, ClassicalSignal> bell_measure(NetworkState& net,
                                                         const ModeExpr& entangled,
                                                         const ModeExpr& input) {
    if (entangled.handle == input.handle) {
        throw UsageError("bell_measure: operands must be distinct modes");
    }
    net.consume(entangled, "bell_measure");
    net.consume(input, "bell_measure");

    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    ClassicalSignal x{((entangled.x - input.x) * inv_sqrt2).pruned(), Axis::x,
                      {entangled.handle, input.handle}};
    ClassicalSignal p{((entangled.y + input.y) * inv_sqrt2).pruned(), Axis::y,
                      {entangled.handle, input.handle}};
    return {std::move(x), std::move(p)};
}

ClassicalSignal combine_signals(std::span<const ClassicalSignal> parts, double scale) {
    if (parts.empty()) {
        throw UsageError("combine_signals: need at least one signal");
    }
    if (!std::isfinite(scale)) {
        throw std::invalid_argument("combine_signals: scale must be finite");
    }
    ClassicalSignal out;
    out.axis_label = parts.front().axis_label;
    for (const ClassicalSignal& part : parts) {
        if (part.axis_label != out.axis_label) {
            throw UsageError("combine_signals: mixed X-type and Y-type signals");
        }
        out.form += part.form;
        out.provenance.insert(out.provenance.end(), part.provenance.begin(),
                              part.provenance.end());
    }
    out.form *= scale;
    out.form = out.form.pruned();
    return out;
}

ModeExpr displace(NetworkState& net, const ModeExpr& mode, const ClassicalSignal& x_sig,
                  double g_x, const ClassicalSignal& p_sig, double g_p) {
    if (x_sig.axis_label != Axis::x || p_sig.axis_label != Axis::y) {
        throw UsageError("displace: signal axes mismatched (need X-type then Y-type)");
    }
    if (!std::isfinite(g_x) || !std::isfinite(g_p)) {
        throw std::invalid_argument("displace: gains must be finite");
    }
    net.consume(mode, "displace");
    LinearForm x = mode.x;
    x.add_scaled(x_sig.form, g_x);
    LinearForm y = mode.y;
    y.add_scaled(p_sig.form, g_p);
    return net.adopt(x.pruned(), y.pruned());
}

}  // namespace teleclone
