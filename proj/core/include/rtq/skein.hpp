/**
 * @file skein.hpp
 * @brief Independent ground truth: the twist-rule computation of the
 *        Poincare polynomial <<tau_{u/v}>>_j and its t = -1 specialization.
 *
 * Webs X[j,k] are opaque basis labels (orientation, color j, weight k). The
 * six twist rules act label-linearly:
 *
 *   T UP[j,k] = sum_{h=k}^{j} t^{-h} q^{k^2+h}          [h;k]+  UP[j,h]
 *   T OP[j,k] = sum_{h=k}^{j} t^{-h} a^k q^{k(k-2j)+h}  [h;k]+  RI[j,h]
 *   T RI[j,k] = sum_{h=k}^{j} t^{-h} a^h q^{k^2+h(1-2j)}[h;k]+  OP[j,h]
 *   R UP[j,k] = sum_{h=0}^{k} t^{-h} a^h q^{k(2j-k)+h(1-2j)} [j-h;k-h]- OP[j,h]
 *   R OP[j,k] = sum_{h=0}^{k} t^{-h} a^k q^{-k^2+h}     [j-h;k-h]- UP[j,h]
 *   R RI[j,k] = sum_{h=0}^{k} t^{-h} q^{-k(k-2j)+h}     [j-h;k-h]- RI[j,h]
 *
 * The q-exponent of the third rule is printed garbled in the source; the
 * k^2 reading used here is forced by the pattern of the first two rules and
 * is guarded by the full oracle-vs-quiver acceptance sweep.
 */
#pragma once

#include "rtq/laurent.hpp"
#include "rtq/tangle.hpp"

#include <map>
#include <string>

namespace rtq {

/// Finite map from weights k to coefficients, at a fixed orientation and
/// color. Weight keys with zero coefficient are never stored.
class WebPoly {
public:
    WebPoly(Orientation orient, int color) : orient_(orient), color_(color) {}

    Orientation orientation() const { return orient_; }
    int color() const { return color_; }
    const std::map<int, LaurentPoly3>& terms() const { return terms_; }

    void add(int weight, const LaurentPoly3& coeff);
    LaurentPoly3 coeff(int weight) const;
    bool operator==(const WebPoly& o) const;

    /// Display style "coeff * X[j,k] + ...", weights ascending.
    std::string to_string() const;

private:
    Orientation orient_;
    int color_;
    std::map<int, LaurentPoly3> terms_;
};

/// Applies one twist letter to every term.
WebPoly twist_apply(TwistLetter letter, const WebPoly& w);

/// <<tau_{u/v}>>_j: starts from UP[j,0] and applies the twist word.
WebPoly poincare(const Fraction& f, int j);

/// t -> -1 specialization: <tau>_j from <<tau>>_j.
WebPoly specialize_t(const WebPoly& w);

}  // namespace rtq
