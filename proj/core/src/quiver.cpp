#include "rtq/quiver.hpp"

#include "rtq/loops.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rtq {

int QuiverData::position_of(int standard_index) const {
    for (std::size_t p = 0; p < basis.size(); ++p) {
        if (basis[p] == standard_index) return static_cast<int>(p);
    }
    return -1;
}

QuiverData compute_quiver(const ArcDiagram& d) {
    const int n = d.total();
    const int w = d.omega();
    const int za = d.middle_role() == PunctureRole::XPlus ? 1 : 0;
    auto dA = [&](int k) { return d.xi(k).active ? 1 : 0; };
    auto dI = [&](int k) { return d.xi(k).active ? 0 : 1; };

    QuiverData qd;
    qd.tangle = d.fraction();
    qd.state = d.state();
    qd.reduced = false;
    qd.basis.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) qd.basis[static_cast<std::size_t>(i - 1)] = i;
    qd.K.assign(static_cast<std::size_t>(n), 0);
    qd.S.resize(static_cast<std::size_t>(n));
    qd.A.resize(static_cast<std::size_t>(n));
    qd.T.resize(static_cast<std::size_t>(n));
    qd.Q.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));

    const Pt pY = d.puncture(PunctureRole::Y);
    const Pt pXm = d.puncture(PunctureRole::XMinus);
    const Pt pXp = d.puncture(PunctureRole::XPlus);

    std::vector<int> qdiag(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        PlanarLoop g = loop_gamma(d, i);
        int wy = winding(g, pY);
        int wxm = winding(g, pXm);
        int wxp = winding(g, pXp);
        int corr = dA(i) * dI(w) - dI(i) * dA(w);
        std::size_t ii = static_cast<std::size_t>(i - 1);
        qd.S[ii] = wy + wxm + wxp + corr;
        qd.A[ii] = 2 * wxp + za * corr;
        qd.T[ii] = -qd.S[ii];
        qdiag[ii] = wy + wxm - 3 * wxp - 2 * za * corr;
        qd.Q[ii][ii] = qdiag[ii];
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            int phi = phi2(loop_tilde(d, j, i));
            int wxp = winding(loop_gamma_pair(d, j, i), pXp);
            qd.Q[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                qdiag[static_cast<std::size_t>(i - 1)] + phi - 2 * wxp +
                za * (dA(i) * dI(j) - dA(j) * dI(i));
        }
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (qd.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                qd.Q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                throw ConstructionFailure("Q is not symmetric");
            }
        }
    }
    std::size_t wi = static_cast<std::size_t>(w - 1);
    if (qd.S[wi] != 0 || qd.A[wi] != 0 || qd.T[wi] != 0 || qd.Q[wi][wi] != 0) {
        throw ConstructionFailure("omega normalization failed");
    }
    return qd;
}

std::vector<std::vector<int>> compute_q_conf2(const ArcDiagram& d) {
    const int n = d.total();
    const int w = d.omega();
    const int za = d.middle_role() == PunctureRole::XPlus ? 1 : 0;
    auto dA = [&](int k) { return d.xi(k).active ? 1 : 0; };
    auto dI = [&](int k) { return d.xi(k).active ? 0 : 1; };

    std::vector<std::vector<int>> Q(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Loop2 g2 = loop_conf2(d, j, i);
            int value = 2 * phi2(g2) - psi2_xplus(d, g2);
            int delta = za * (2 * dI(i) * dI(j) * dA(w) - 2 * dA(i) * dA(j) * dI(w) +
                              dA(i) * dI(j) * dA(w) + dI(i) * dA(j) * dA(w) -
                              dI(i) * dA(j) * dI(w) - dA(i) * dI(j) * dI(w));
            Q[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = value + delta;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                Q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                throw ConstructionFailure("Conf^2 Q is not symmetric");
            }
        }
    }
    return Q;
}

QuiverData reduce_almost(const QuiverData& qd, const BlockPartition& bp) {
    if (qd.reduced) throw std::invalid_argument("reduce_almost: data already reduced");
    const int n = qd.size();

    std::set<int> y_block;
    std::set<int> dropped;
    for (auto [a, b] : bp.pairs) {
        int pa = qd.position_of(a);
        int pb = qd.position_of(b);
        if (pa < 0 || pb < 0) throw std::invalid_argument("reduce_almost: pair outside basis");
        std::size_t ia = static_cast<std::size_t>(pa);
        std::size_t ib = static_cast<std::size_t>(pb);
        int sdiff = qd.S[ia] - qd.S[ib];
        if (sdiff != 1 && sdiff != -1) {
            throw ConstructionFailure("partition inconsistency: S difference is not 1");
        }
        std::size_t x = sdiff == 1 ? ia : ib;  // member with larger S
        std::size_t y = sdiff == 1 ? ib : ia;
        if (qd.A[x] != qd.A[y] || qd.S[x] != qd.S[y] + 1 || qd.T[x] != qd.T[y] - 1 ||
            qd.Q[x][x] != qd.Q[y][y] + 1) {
            throw ConstructionFailure("partition inconsistency: pair relations fail");
        }
        y_block.insert(qd.basis[y]);
        dropped.insert(qd.basis[x]);
    }

    QuiverData out;
    out.tangle = qd.tangle;
    out.state = qd.state;
    out.reduced = true;
    for (int p = 0; p < n; ++p) {
        int idx = qd.basis[static_cast<std::size_t>(p)];
        if (dropped.count(idx)) continue;
        out.basis.push_back(idx);
        out.K.push_back(y_block.count(idx) ? 1 : 0);
        out.S.push_back(qd.S[static_cast<std::size_t>(p)]);
        out.A.push_back(qd.A[static_cast<std::size_t>(p)]);
        out.T.push_back(qd.T[static_cast<std::size_t>(p)]);
    }
    const int m = static_cast<int>(out.basis.size());
    out.Q.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            int pr = qd.position_of(out.basis[static_cast<std::size_t>(r)]);
            int pc = qd.position_of(out.basis[static_cast<std::size_t>(c)]);
            out.Q[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                qd.Q[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)];
        }
    }
    return out;
}

ClosedFormN1 closed_form_n1(int n) {
    if (n < 1) throw std::invalid_argument("closed_form_n1: need n >= 1");
    ClosedFormN1 cf;
    Fraction f(n, 1);
    TwistWord word = continued_fraction(f);
    TangleState st = state_of(word);

    auto make = [&](int m) {
        QuiverData q;
        q.tangle = f;
        q.state = st;
        q.basis.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) q.basis[static_cast<std::size_t>(i)] = i + 1;
        q.K.assign(static_cast<std::size_t>(m), 0);
        q.S.assign(static_cast<std::size_t>(m), 0);
        q.A.assign(static_cast<std::size_t>(m), 0);
        q.T.assign(static_cast<std::size_t>(m), 0);
        q.Q.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
        return q;
    };

    // Full data in the arc ordering: S_i = n-i+1, A = 0, Q_{ij} = n-k on the
    // band k = max(i,j) <= n and 0 on the last band.
    cf.full = make(n + 1);
    for (int i = 1; i <= n + 1; ++i) {
        cf.full.S[static_cast<std::size_t>(i - 1)] = n - i + 1;
        cf.full.T[static_cast<std::size_t>(i - 1)] = i - n - 1;
    }
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = 1; j <= n + 1; ++j) {
            int k = std::max(i, j);
            cf.full.Q[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                k <= n ? n - k : 0;
        }
    }

    if (n % 2 == 0) {
        const int m = n / 2 + 1;
        cf.reduced = make(m);
        cf.reduced.reduced = true;
        for (int i = 1; i <= m; ++i) {
            std::size_t ii = static_cast<std::size_t>(i - 1);
            cf.reduced.K[ii] = i <= n / 2 ? 1 : 0;
            cf.reduced.S[ii] = i <= n / 2 ? n - 2 * i + 1 : 0;
            cf.reduced.T[ii] = -cf.reduced.S[ii];
        }
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= m; ++j) {
                int k = std::max(i, j);
                cf.reduced.Q[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    k <= n / 2 ? n - 2 * k : 0;
            }
        }
    } else {
        const int m = (n + 3) / 2;
        const int half = (n - 1) / 2;
        cf.reduced = make(m);
        cf.reduced.reduced = true;
        for (int i = 1; i <= m; ++i) {
            std::size_t ii = static_cast<std::size_t>(i - 1);
            cf.reduced.K[ii] = i <= half ? 1 : 0;
            int s = 0;
            if (i <= half) {
                s = n - 2 * i + 1;
            } else if (i == half + 1) {
                s = 1;
            }
            cf.reduced.S[ii] = s;
            cf.reduced.T[ii] = -s;
        }
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= m; ++j) {
                int k = std::max(i, j);
                cf.reduced.Q[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    k <= half ? n - 2 * k : 0;
            }
        }
    }
    return cf;
}

std::string QuiverData::to_json() const {
    std::ostringstream os;
    auto vec = [&](const std::vector<int>& v) {
        std::ostringstream t;
        t << '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) t << ',';
            t << v[i];
        }
        t << ']';
        return t.str();
    };
    os << "{\"tangle\":\"" << tangle.to_string() << "\",";
    os << "\"state\":{\"orientation\":\"" << rtq::to_string(state.orientation)
       << "\",\"punctures\":\"" << rtq::to_string(state.arrangement[0]) << '|'
       << rtq::to_string(state.arrangement[1]) << '|' << rtq::to_string(state.arrangement[2])
       << "\"},";
    os << "\"reduced\":" << (reduced ? "true" : "false") << ',';
    os << "\"basis\":" << vec(basis) << ',';
    os << "\"K\":" << vec(K) << ',';
    os << "\"S\":" << vec(S) << ',';
    os << "\"A\":" << vec(A) << ',';
    os << "\"T\":" << vec(T) << ',';
    os << "\"Q\":[";
    for (std::size_t r = 0; r < Q.size(); ++r) {
        if (r) os << ',';
        os << vec(Q[r]);
    }
    os << "]}";
    return os.str();
}

std::string QuiverData::to_csv() const {
    std::ostringstream os;
    os << "basis";
    for (int b : basis) os << ",xi" << b;
    os << '\n';
    for (std::size_t r = 0; r < Q.size(); ++r) {
        os << "xi" << basis[r];
        for (int x : Q[r]) os << ',' << x;
        os << '\n';
    }
    return os.str();
}

std::string QuiverData::to_pretty() const {
    std::ostringstream os;
    os << rtq::to_string(state.orientation) << ", tangle " << tangle.to_string()
       << (reduced ? " (reduced)" : "") << "\n";
    os << (reduced ? "[ K | S | A | T ]" : "[ S | A | T ]") << "\n";
    for (std::size_t i = 0; i < S.size(); ++i) {
        os << "  ";
        if (reduced) os << K[i] << " | ";
        os << S[i] << " | " << A[i] << " | " << T[i] << "\n";
    }
    os << "Q =\n";
    for (const auto& row : Q) {
        os << " ";
        for (int x : row) os << ' ' << x;
        os << "\n";
    }
    return os.str();
}

}  // namespace rtq
