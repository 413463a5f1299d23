#pragma once

#include <span>
#include <vector>

#include "teleclone/quad.hpp"

namespace teleclone {

/// A broadcast homodyne result: a classical linear combination of quadratures
/// of the consumed modes. X-type signals only carry amplitude coefficients,
/// Y-type signals only phase coefficients, so signals from one Bell
/// measurement commute (symplectic pairing 0).
struct ClassicalSignal {
    LinearForm form;
    Axis axis_label = Axis::x;
    std::vector<ModeHandle> provenance;
};

/// Joint (Bell) measurement of an entangled mode against an input mode:
/// x = (X_ent - X_in)/sqrt(2), p = (Y_ent + Y_in)/sqrt(2).
/// Both operand modes are consumed.
std::pair<ClassicalSignal, ClassicalSignal> bell_measure(NetworkState& net,
                                                         const ModeExpr& entangled,
                                                         const ModeExpr& input);

/// scale * (parts[0] + parts[1] + ...). All parts must share the axis label.
ClassicalSignal combine_signals(std::span<const ClassicalSignal> parts, double scale);

/// Feedforward displacement: out.x = mode.x + g_x * x_sig, out.y = mode.y +
/// g_p * p_sig. Consumes the mode and returns the displaced output, which
/// still satisfies the symplectic invariant.
ModeExpr displace(NetworkState& net, const ModeExpr& mode, const ClassicalSignal& x_sig,
                  double g_x, const ClassicalSignal& p_sig, double g_p);

}  // namespace teleclone
