#include "rtq/skein.hpp"

#include "rtq/qalg.hpp"

#include <sstream>
#include <stdexcept>

namespace rtq {

void WebPoly::add(int weight, const LaurentPoly3& coeff) {
    if (weight < 0 || weight > color_) throw std::invalid_argument("WebPoly: weight out of range");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(weight, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly3 WebPoly::coeff(int weight) const {
    auto it = terms_.find(weight);
    return it == terms_.end() ? LaurentPoly3() : it->second;
}

bool WebPoly::operator==(const WebPoly& o) const {
    return orient_ == o.orient_ && color_ == o.color_ && terms_ == o.terms_;
}

std::string WebPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ")*" << rtq::to_string(orient_) << '[' << color_ << ',' << k
           << ']';
    }
    return os.str();
}

namespace {

Orientation twisted_orientation(TwistLetter l, Orientation o) {
    if (l == TwistLetter::T) {
        switch (o) {
            case Orientation::UP: return Orientation::UP;
            case Orientation::OP: return Orientation::RI;
            case Orientation::RI: return Orientation::OP;
        }
    } else {
        switch (o) {
            case Orientation::UP: return Orientation::OP;
            case Orientation::OP: return Orientation::UP;
            case Orientation::RI: return Orientation::RI;
        }
    }
    throw std::logic_error("twisted_orientation");
}

}  // namespace

WebPoly twist_apply(TwistLetter letter, const WebPoly& w) {
    const int j = w.color();
    WebPoly out(twisted_orientation(letter, w.orientation()), j);
    const long long jj = j;
    for (const auto& [k, c] : w.terms()) {
        if (letter == TwistLetter::T) {
            for (int h = k; h <= j; ++h) {
                LaurentPoly3 factor = quantum_binomial(h, k);
                switch (w.orientation()) {
                    case Orientation::UP:
                        factor.mul_monomial(1, static_cast<long long>(k) * k + h, 0, -h);
                        break;
                    case Orientation::OP:
                        factor.mul_monomial(1, static_cast<long long>(k) * (k - 2 * jj) + h, k, -h);
                        break;
                    case Orientation::RI:
                        factor.mul_monomial(1, static_cast<long long>(k) * k + h * (1 - 2 * jj), h,
                                            -h);
                        break;
                }
                out.add(h, c * factor);
            }
        } else {
            for (int h = 0; h <= k; ++h) {
                LaurentPoly3 factor = quantum_binomial_neg(j - h, k - h);
                switch (w.orientation()) {
                    case Orientation::UP:
                        factor.mul_monomial(1, static_cast<long long>(k) * (2 * jj - k) + h * (1 - 2 * jj),
                                            h, -h);
                        break;
                    case Orientation::OP:
                        factor.mul_monomial(1, -static_cast<long long>(k) * k + h, k, -h);
                        break;
                    case Orientation::RI:
                        factor.mul_monomial(1, -static_cast<long long>(k) * (k - 2 * jj) + h, 0, -h);
                        break;
                }
                out.add(h, c * factor);
            }
        }
    }
    return out;
}

WebPoly poincare(const Fraction& f, int j) {
    if (j < 0) throw std::invalid_argument("poincare: negative color");
    WebPoly w(Orientation::UP, j);
    w.add(0, LaurentPoly3::one());
    for (TwistLetter l : continued_fraction(f).letters_in_time_order()) {
        w = twist_apply(l, w);
    }
    return w;
}

WebPoly specialize_t(const WebPoly& w) {
    WebPoly out(w.orientation(), w.color());
    for (const auto& [k, c] : w.terms()) out.add(k, c.substitute_t_minus1());
    return out;
}

}  // namespace rtq
