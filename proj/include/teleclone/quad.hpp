#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "teleclone/errors.hpp"

namespace teleclone {

/// Quadrature convention: a mode is a = (X + iY)/2 with [X, Y] = 2i, so the
/// vacuum has variance 1 in each quadrature. Every mode in a network is an
/// exact linear combination of independent noise primitives, which makes all
/// second moments exact coefficient-square sums.

using PrimitiveId = std::uint32_t;
using ModeHandle = std::uint32_t;

enum class Axis : std::uint8_t { x = 0, y = 1 };

inline constexpr double kPruneEps = 1e-14;

enum class PrimitiveKind : std::uint8_t { vacuum, squeezed, coherent_input };

/// An independent Gaussian noise source with per-quadrature means/variances.
struct Primitive {
    PrimitiveId id = 0;
    PrimitiveKind kind = PrimitiveKind::vacuum;
    double var_x = 1.0;
    double var_y = 1.0;
    double mean_x = 0.0;
    double mean_y = 0.0;
};

/// A quadrature observable: constant + sum of coefficients over primitive
/// quadratures. Terms are kept sorted by (primitive, axis); coefficients with
/// magnitude below kPruneEps are dropped by the arithmetic helpers, which
/// never changes a variance by more than 1e-12 relative for the coefficient
/// scales occurring in these networks.
class LinearForm {
public:
    struct Term {
        PrimitiveId primitive;
        Axis axis;
        double value;
    };

    LinearForm() = default;
    explicit LinearForm(double constant) : constant_(constant) {}

    static LinearForm term(PrimitiveId p, Axis axis, double coeff);

    double constant() const { return constant_; }
    void set_constant(double c) { constant_ = c; }

    /// Coefficient on (primitive, axis); 0 if absent.
    double coeff(PrimitiveId p, Axis axis) const;

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    LinearForm& operator+=(const LinearForm& rhs) { return add_scaled(rhs, 1.0); }
    LinearForm& operator-=(const LinearForm& rhs) { return add_scaled(rhs, -1.0); }
    LinearForm& operator*=(double s);
    LinearForm& add_scaled(const LinearForm& rhs, double scale);

    friend LinearForm operator+(LinearForm lhs, const LinearForm& rhs) { return lhs += rhs; }
    friend LinearForm operator-(LinearForm lhs, const LinearForm& rhs) { return lhs -= rhs; }
    friend LinearForm operator*(LinearForm f, double s) { return f *= s; }
    friend LinearForm operator*(double s, LinearForm f) { return f *= s; }
    friend LinearForm operator-(LinearForm f) { return f *= -1.0; }

    /// Copy with |coefficient| < eps terms removed.
    LinearForm pruned(double eps = kPruneEps) const;

private:
    double constant_ = 0.0;
    std::vector<Term> terms_;
};

/// Largest absolute coefficient difference over the union of the two
/// supports, including the constants.
double max_coeff_delta(const LinearForm& a, const LinearForm& b);

/// Coefficient-space dot product (no variances involved).
double coeff_dot(const LinearForm& a, const LinearForm& b);

/// An optical mode: amplitude (x) and phase (y) quadrature forms plus the
/// handle used for liveness tracking.
struct ModeExpr {
    LinearForm x;
    LinearForm y;
    ModeHandle handle = 0;
};

/// Sum over primitives p of f[p,X]*g[p,Y] - f[p,Y]*g[p,X]. For a physical
/// mode, symplectic_pairing(mode.x, mode.y) == 1, encoding [X, Y] = 2i.
double symplectic_pairing(const LinearForm& f, const LinearForm& g);

inline double symplectic_invariant(const ModeExpr& m) {
    return symplectic_pairing(m.x, m.y);
}

/// Owns the primitives and mode liveness of one optical network. Modes are
/// value types; consuming operations (beam splitters, measurements,
/// displacements) retire the operand handles so a mode cannot be reused
/// after it has physically been destroyed.
class NetworkState {
public:
    NetworkState() = default;
    NetworkState(NetworkState&&) = default;
    NetworkState& operator=(NetworkState&&) = default;
    NetworkState(const NetworkState&) = default;
    NetworkState& operator=(const NetworkState&) = default;

    ModeExpr vacuum();
    ModeExpr squeezed(double r, Axis axis);
    ModeExpr coherent(double mean_x, double mean_y);

    /// Two-mode squeezed pair built from one Y-squeezed and one X-squeezed
    /// primitive on a 50/50 splitter, oriented so that X1-X2 and Y1+Y2 both
    /// have variance 2*exp(-2r).
    std::pair<ModeExpr, ModeExpr> epr_pair(double r);

    /// out1 = cos(theta)*a + sin(theta)*b, out2 = sin(theta)*a - cos(theta)*b,
    /// applied identically to x and y forms. Consumes both operands.
    std::pair<ModeExpr, ModeExpr> beam_splitter(const ModeExpr& a, const ModeExpr& b,
                                                double theta);

    double variance(const LinearForm& f) const;
    double covariance(const LinearForm& f, const LinearForm& g) const;
    double mean(const LinearForm& f) const;

    const Primitive& primitive(PrimitiveId id) const;
    std::size_t primitive_count() const { return primitives_.size(); }
    const std::vector<Primitive>& primitives() const { return primitives_; }

    bool is_live(const ModeExpr& m) const;
    std::size_t mode_count() const { return mode_live_.size(); }

    /// Retires a mode handle; throws UsageError if it was already consumed.
    void consume(const ModeExpr& m, const char* op);
    /// Registers a fresh live mode and stamps its handle.
    ModeExpr adopt(LinearForm x, LinearForm y);

private:
    const Primitive& check_primitive(PrimitiveId id) const;
    PrimitiveId add_primitive(PrimitiveKind kind, double var_x, double var_y,
                              double mean_x, double mean_y);

    std::vector<Primitive> primitives_;
    std::vector<bool> mode_live_;
};

}  // namespace teleclone
