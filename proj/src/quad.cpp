#include "teleclone/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace teleclone {

namespace {

inline bool key_less(PrimitiveId pa, Axis aa, PrimitiveId pb, Axis ab) {
    return pa != pb ? pa < pb : static_cast<int>(aa) < static_cast<int>(ab);
}

}  // namespace

LinearForm LinearForm::term(PrimitiveId p, Axis axis, double coeff) {
    LinearForm f;
    if (coeff != 0.0) {
        f.terms_.push_back({p, axis, coeff});
    }
    return f;
}

double LinearForm::coeff(PrimitiveId p, Axis axis) const {
    for (const Term& t : terms_) {
        if (t.primitive == p && t.axis == axis) return t.value;
    }
    return 0.0;
}

LinearForm& LinearForm::operator*=(double s) {
    constant_ *= s;
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.value *= s;
    return *this;
}

LinearForm& LinearForm::add_scaled(const LinearForm& rhs, double scale) {
    constant_ += scale * rhs.constant_;
    if (scale == 0.0 || rhs.terms_.empty()) return *this;

    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < rhs.terms_.size()) {
        bool take_left;
        if (i == terms_.size()) {
            take_left = false;
        } else if (j == rhs.terms_.size()) {
            take_left = true;
        } else if (terms_[i].primitive == rhs.terms_[j].primitive &&
                   terms_[i].axis == rhs.terms_[j].axis) {
            double v = terms_[i].value + scale * rhs.terms_[j].value;
            if (std::abs(v) >= kPruneEps) {
                merged.push_back({terms_[i].primitive, terms_[i].axis, v});
            }
            ++i;
            ++j;
            continue;
        } else {
            take_left = key_less(terms_[i].primitive, terms_[i].axis,
                                 rhs.terms_[j].primitive, rhs.terms_[j].axis);
        }
        if (take_left) {
            merged.push_back(terms_[i++]);
        } else {
            Term t = rhs.terms_[j++];
            t.value *= scale;
            if (std::abs(t.value) >= kPruneEps) merged.push_back(t);
        }
    }
    terms_ = std::move(merged);
    return *this;
}

LinearForm LinearForm::pruned(double eps) const {
    LinearForm out;
    out.constant_ = constant_;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (std::abs(t.value) >= eps) out.terms_.push_back(t);
    }
    return out;
}

double max_coeff_delta(const LinearForm& a, const LinearForm& b) {
    LinearForm diff = a;
    diff -= b;
    double worst = std::abs(diff.constant());
    for (const LinearForm::Term& t : diff.terms()) {
        worst = std::max(worst, std::abs(t.value));
    }
    return worst;
}

double coeff_dot(const LinearForm& a, const LinearForm& b) {
    double acc = 0.0;
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        if (ta[i].primitive == tb[j].primitive && ta[i].axis == tb[j].axis) {
            acc += ta[i].value * tb[j].value;
            ++i;
            ++j;
        } else if (key_less(ta[i].primitive, ta[i].axis, tb[j].primitive, tb[j].axis)) {
            ++i;
        } else {
            ++j;
        }
    }
    return acc;
}

double symplectic_pairing(const LinearForm& f, const LinearForm& g) {
    // Sum over primitives: f_X * g_Y - f_Y * g_X. Terms are sorted, so walk
    // the two lists primitive by primitive.
    double acc = 0.0;
    const auto& tf = f.terms();
    const auto& tg = g.terms();
    std::size_t i = 0, j = 0;
    while (i < tf.size() && j < tg.size()) {
        PrimitiveId p = std::min(tf[i].primitive, tg[j].primitive);
        double fx = 0.0, fy = 0.0, gx = 0.0, gy = 0.0;
        while (i < tf.size() && tf[i].primitive == p) {
            (tf[i].axis == Axis::x ? fx : fy) = tf[i].value;
            ++i;
        }
        while (j < tg.size() && tg[j].primitive == p) {
            (tg[j].axis == Axis::x ? gx : gy) = tg[j].value;
            ++j;
        }
        acc += fx * gy - fy * gx;
    }
    return acc;
}

PrimitiveId NetworkState::add_primitive(PrimitiveKind kind, double var_x, double var_y,
                                        double mean_x, double mean_y) {
    PrimitiveId id = static_cast<PrimitiveId>(primitives_.size());
    primitives_.push_back({id, kind, var_x, var_y, mean_x, mean_y});
    return id;
}

ModeExpr NetworkState::adopt(LinearForm x, LinearForm y) {
    ModeHandle h = static_cast<ModeHandle>(mode_live_.size());
    mode_live_.push_back(true);
    return ModeExpr{std::move(x), std::move(y), h};
}

bool NetworkState::is_live(const ModeExpr& m) const {
    return m.handle < mode_live_.size() && mode_live_[m.handle];
}

void NetworkState::consume(const ModeExpr& m, const char* op) {
    if (!is_live(m)) {
        throw UsageError(std::string(op) + ": mode " + std::to_string(m.handle) +
                         " is not live (already consumed or foreign to this network)");
    }
    mode_live_[m.handle] = false;
}

ModeExpr NetworkState::vacuum() {
    PrimitiveId p = add_primitive(PrimitiveKind::vacuum, 1.0, 1.0, 0.0, 0.0);
    return adopt(LinearForm::term(p, Axis::x, 1.0), LinearForm::term(p, Axis::y, 1.0));
}

ModeExpr NetworkState::squeezed(double r, Axis axis) {
    if (!std::isfinite(r) || r < 0.0) {
        throw std::invalid_argument("squeezed: squeezing factor must be finite and >= 0, got " +
                                    std::to_string(r));
    }
    double squeezed_var = std::exp(-2.0 * r);
    double anti_var = std::exp(2.0 * r);
    double var_x = axis == Axis::x ? squeezed_var : anti_var;
    double var_y = axis == Axis::x ? anti_var : squeezed_var;
    PrimitiveId p = add_primitive(PrimitiveKind::squeezed, var_x, var_y, 0.0, 0.0);
    return adopt(LinearForm::term(p, Axis::x, 1.0), LinearForm::term(p, Axis::y, 1.0));
}

ModeExpr NetworkState::coherent(double mean_x, double mean_y) {
    if (!std::isfinite(mean_x) || !std::isfinite(mean_y)) {
        throw std::invalid_argument("coherent: quadrature means must be finite");
    }
    PrimitiveId p = add_primitive(PrimitiveKind::coherent_input, 1.0, 1.0, mean_x, mean_y);
    LinearForm x = LinearForm::term(p, Axis::x, 1.0);
    LinearForm y = LinearForm::term(p, Axis::y, 1.0);
    return adopt(std::move(x), std::move(y));
}

std::pair<ModeExpr, ModeExpr> NetworkState::epr_pair(double r) {
    // Port layout: out1 - out2 picks out the second port and out1 + out2 the
    // first, so the X-squeezed primitive enters second and the Y-squeezed one
    // first. That makes X1-X2 and Y1+Y2 the squeezed combinations, each with
    // variance 2*exp(-2r).
    ModeExpr anti = squeezed(r, Axis::y);
    ModeExpr sq = squeezed(r, Axis::x);
    return beam_splitter(anti, sq, std::numbers::pi / 4.0);
}

std::pair<ModeExpr, ModeExpr> NetworkState::beam_splitter(const ModeExpr& a, const ModeExpr& b,
                                                          double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("beam_splitter: mixing angle must be finite");
    }
    if (a.handle == b.handle) {
        throw UsageError("beam_splitter: operands must be distinct modes");
    }
    consume(a, "beam_splitter");
    consume(b, "beam_splitter");
    double c = std::cos(theta);
    double s = std::sin(theta);
    LinearForm x1 = (c * a.x + s * b.x).pruned();
    LinearForm y1 = (c * a.y + s * b.y).pruned();
    LinearForm x2 = (s * a.x - c * b.x).pruned();
    LinearForm y2 = (s * a.y - c * b.y).pruned();
    ModeExpr out1 = adopt(std::move(x1), std::move(y1));
    ModeExpr out2 = adopt(std::move(x2), std::move(y2));
    return {std::move(out1), std::move(out2)};
}

const Primitive& NetworkState::check_primitive(PrimitiveId id) const {
    if (id >= primitives_.size()) {
        throw IntegrityError("form references primitive " + std::to_string(id) +
                             " but the network has " + std::to_string(primitives_.size()));
    }
    return primitives_[id];
}

const Primitive& NetworkState::primitive(PrimitiveId id) const {
    return check_primitive(id);
}

double NetworkState::variance(const LinearForm& f) const {
    double acc = 0.0;
    for (const LinearForm::Term& t : f.terms()) {
        const Primitive& p = check_primitive(t.primitive);
        acc += t.value * t.value * (t.axis == Axis::x ? p.var_x : p.var_y);
    }
    return acc;
}

double NetworkState::covariance(const LinearForm& f, const LinearForm& g) const {
    // Primitives are independent and X/Y of one primitive are uncorrelated
    // for every supported kind, so only exactly shared (primitive, axis)
    // entries contribute.
    double acc = 0.0;
    const auto& tf = f.terms();
    const auto& tg = g.terms();
    std::size_t i = 0, j = 0;
    while (i < tf.size() && j < tg.size()) {
        if (tf[i].primitive == tg[j].primitive && tf[i].axis == tg[j].axis) {
            const Primitive& p = check_primitive(tf[i].primitive);
            acc += tf[i].value * tg[j].value * (tf[i].axis == Axis::x ? p.var_x : p.var_y);
            ++i;
            ++j;
        } else if (key_less(tf[i].primitive, tf[i].axis, tg[j].primitive, tg[j].axis)) {
            check_primitive(tf[i].primitive);
            ++i;
        } else {
            check_primitive(tg[j].primitive);
            ++j;
        }
    }
    for (; i < tf.size(); ++i) check_primitive(tf[i].primitive);
    for (; j < tg.size(); ++j) check_primitive(tg[j].primitive);
    return acc;
}

double NetworkState::mean(const LinearForm& f) const {
    double acc = f.constant();
    for (const LinearForm::Term& t : f.terms()) {
        const Primitive& p = check_primitive(t.primitive);
        acc += t.value * (t.axis == Axis::x ? p.mean_x : p.mean_y);
    }
    return acc;
}

}  // namespace teleclone
