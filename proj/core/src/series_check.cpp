#include "rtq/series_check.hpp"

#include "rtq/qalg.hpp"

#include <numeric>
#include <sstream>

namespace rtq {

namespace {

/// Iterates over all d in N^m with |d| = j.
class Compositions {
public:
    Compositions(int m, int j) : d_(static_cast<std::size_t>(m), 0) {
        if (m == 0) {
            done_ = j != 0;
        } else {
            d_[0] = j;
        }
    }
    bool done() const { return done_; }
    const std::vector<int>& value() const { return d_; }
    void next() {
        // colexicographic successor: move one unit from the first nonzero
        // entry to the next slot, dumping its remainder back in front.
        const std::size_t m = d_.size();
        std::size_t i = 0;
        while (i < m && d_[i] == 0) ++i;
        if (i + 1 >= m) {
            done_ = true;
            return;
        }
        int take = d_[i];
        d_[i] = 0;
        d_[0] = take - 1;
        d_[i + 1] += 1;
    }

private:
    std::vector<int> d_;
    bool done_ = false;
};

WebPoly expand_common(const QuiverData& qd, int j, ExpandMode mode, bool almost) {
    if (almost != qd.reduced) {
        throw std::invalid_argument("expansion: reduced flag does not match the form");
    }
    if (j < 0) throw std::invalid_argument("expansion: negative color");
    const int m = qd.size();
    std::vector<std::size_t> active;
    std::vector<std::size_t> inactive;
    // Basis entries are standard indices: actives are those <= u.
    const int u = static_cast<int>(qd.tangle.u);
    for (std::size_t p = 0; p < qd.basis.size(); ++p) {
        if (qd.basis[p] <= u && qd.basis[p] >= 1 && u > 0) {
            active.push_back(p);
        } else {
            inactive.push_back(p);
        }
    }

    WebPoly out(qd.state.orientation, j);
    for (Compositions comp(m, j); !comp.done(); comp.next()) {
        const std::vector<int>& d = comp.value();
        long long sdot = 0;
        long long adot = 0;
        long long tdot = 0;
        long long quad = 0;
        long long kdot = 0;
        for (int p = 0; p < m; ++p) {
            std::size_t pp = static_cast<std::size_t>(p);
            sdot += static_cast<long long>(qd.S[pp]) * d[pp];
            adot += static_cast<long long>(qd.A[pp]) * d[pp];
            tdot += static_cast<long long>(qd.T[pp]) * d[pp];
            kdot += static_cast<long long>(qd.K[pp]) * d[pp];
            for (int r = 0; r < m; ++r) {
                quad += static_cast<long long>(qd.Q[pp][static_cast<std::size_t>(r)]) * d[pp] *
                        d[static_cast<std::size_t>(r)];
            }
        }
        std::vector<int> da;
        std::vector<int> di;
        int ka = 0;
        for (std::size_t p : active) {
            da.push_back(d[p]);
            ka += d[p];
        }
        int ki = 0;
        for (std::size_t p : inactive) {
            di.push_back(d[p]);
            ki += d[p];
        }

        LaurentPoly3 term = quantum_multinomial(ka, da) * quantum_multinomial(ki, di);
        if (almost) {
            term *= (mode == ExpandMode::Graded) ? t_pochhammer(static_cast<int>(kdot))
                                                 : q_pochhammer(static_cast<int>(kdot));
        }
        if (mode == ExpandMode::Graded) {
            term.mul_monomial(1, sdot + quad, adot, tdot);
        } else {
            term.mul_monomial((sdot % 2 != 0) ? BigInt(-1) : BigInt(1), sdot + quad, adot, 0);
        }
        out.add(ka, term);
    }
    return out;
}

}  // namespace

WebPoly expand_quiver_form(const QuiverData& qd, int j, ExpandMode mode) {
    return expand_common(qd, j, mode, false);
}

WebPoly expand_almost_form(const QuiverData& qd, int j, ExpandMode mode) {
    return expand_common(qd, j, mode, true);
}

ShiftResult compare_up_to_shift(const WebPoly& a, const WebPoly& b) {
    ShiftResult res;
    if (a.orientation() != b.orientation() || a.color() != b.color()) {
        res.mismatch = "orientation or color differ";
        return res;
    }
    if (a.terms().size() != b.terms().size()) {
        res.mismatch = "different numbers of web labels";
        return res;
    }
    if (a.terms().empty()) {
        res.ok = true;
        return res;
    }
    auto ita = a.terms().begin();
    auto itb = b.terms().begin();
    if (ita->first != itb->first) {
        res.mismatch = "web label sets differ";
        return res;
    }
    const Exp3 ea = ita->second.terms().begin()->first;
    const Exp3 eb = itb->second.terms().begin()->first;
    Exp3 shift = ea - eb;

    for (; ita != a.terms().end(); ++ita, ++itb) {
        if (itb == b.terms().end() || ita->first != itb->first) {
            res.mismatch = "web label sets differ";
            return res;
        }
        LaurentPoly3 shifted = itb->second;
        shifted.mul_monomial(1, shift.q, shift.a, shift.t);
        if (!(shifted == ita->second)) {
            std::ostringstream os;
            os << "coefficient of weight " << ita->first << " differs after shift";
            res.mismatch = os.str();
            return res;
        }
    }
    res.ok = true;
    res.shift = shift;
    return res;
}

VerifyRecord verify_tangle_color(const ArcDiagram& d, const QuiverData& qd, int j) {
    VerifyRecord rec;
    rec.tangle = d.fraction();
    rec.color = j;
    WebPoly oracle = poincare(d.fraction(), j);
    WebPoly expansion = expand_quiver_form(qd, j);
    ShiftResult cmp = compare_up_to_shift(oracle, expansion);
    rec.ok = cmp.ok;
    rec.shift = cmp.shift;
    rec.detail = cmp.mismatch;
    return rec;
}

std::vector<Fraction> coprime_fractions(int max_total) {
    std::vector<Fraction> out;
    out.emplace_back(0, 1);
    for (int total = 2; total <= max_total; ++total) {
        for (int u = 1; u < total; ++u) {
            int v = total - u;
            if (std::gcd(u, v) == 1) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<VerifyRecord> verify_sweep(int max_total, int jmax) {
    std::vector<VerifyRecord> out;
    for (const Fraction& f : coprime_fractions(max_total)) {
        ArcDiagram d = ArcDiagram::build(f);
        QuiverData qd = compute_quiver(d);
        for (int j = 0; j <= jmax; ++j) out.push_back(verify_tangle_color(d, qd, j));
    }
    return out;
}

std::string to_json_line(const VerifyRecord& r) {
    std::ostringstream os;
    os << "{\"tangle\":\"" << r.tangle.to_string() << "\",\"j\":" << r.color << ",\"status\":\""
       << (r.ok ? "ok" : "mismatch") << "\"";
    if (r.ok) {
        os << ",\"shift\":[" << r.shift.q << ',' << r.shift.a << ',' << r.shift.t << ']';
    } else {
        os << ",\"detail\":\"" << r.detail << "\"";
    }
    os << '}';
    return os.str();
}

}  // namespace rtq
