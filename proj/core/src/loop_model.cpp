#include "loopkit/loop_model.hpp"

#include <map>
#include <sstream>

namespace loopkit {

namespace {

int cyclic_distance(int i, int j, int m) {
    int d = (j - i) % m;
    if (d < 0) d += m;
    return d < m - d ? d : m - d;
}

std::map<std::string, int> index_of(const std::vector<Matching>& basis) {
    std::map<std::string, int> idx;
    for (std::size_t k = 0; k < basis.size(); ++k) idx[basis[k].word()] = static_cast<int>(k);
    return idx;
}

// Composite action of a generator word (applied right to left, like operator
// products) on a basis matching, tracking the accumulated tau factor.
TLResult apply_word(const TLAction& action, const std::vector<int>& sites, const Matching& m) {
    TLResult acc{m, TauPoly(1)};
    for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
        TLResult step = action(*it, acc.image);
        acc.image = step.image;
        acc.factor *= step.factor;
    }
    return acc;
}

bool same(const TLResult& a, const TLResult& b) {
    return a.image == b.image && a.factor == b.factor;
}

std::string describe(const TLResult& r) {
    return r.factor.str() + " * " + r.image.word();
}

}  // namespace

TLResult apply_e(int site, const Matching& m) {
    int len = m.size();
    if (site < 1 || site > len)
        throw ValidationError("site " + std::to_string(site) + " outside 1.." +
                              std::to_string(len));
    int a = site;
    int b = site % len + 1;
    if (m.partner(a) == b) return {m, TauPoly::tau()};
    int pa = m.partner(a);
    int pb = m.partner(b);
    std::vector<int> partner(len + 1);
    for (int i = 1; i <= len; ++i) partner[i] = m.partner(i);
    partner[a] = b;
    partner[b] = a;
    partner[pa] = pb;
    partner[pb] = pa;
    std::string w(len, '?');
    for (int i = 1; i <= len; ++i) w[i - 1] = i < partner[i] ? '(' : ')';
    return {Matching::parse(w), TauPoly(1)};
}

TauMatrix tl_generator(int n, int site) {
    std::vector<Matching> basis = enumerate_matchings(n);
    auto idx = index_of(basis);
    TauMatrix e(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        TLResult r = apply_e(site, basis[col]);
        e(idx.at(r.image.word()), static_cast<int>(col)) += r.factor;
    }
    return e;
}

TLCheckReport check_tl_relations(int n, const TLAction& action) {
    if (n < 2) throw ValidationError("relation check needs n >= 2");
    int m = 2 * n;
    std::vector<Matching> basis = enumerate_matchings(n);
    TLCheckReport report;
    auto complain = [&](const std::string& what, const Matching& pi, const TLResult& lhs,
                        const TLResult& rhs) {
        report.ok = false;
        std::ostringstream msg;
        msg << what << " fails on " << pi.word() << ": " << describe(lhs) << " vs "
            << describe(rhs);
        report.violations.push_back(msg.str());
    };

    const TauPoly tau = TauPoly::tau();
    for (int i = 1; i <= m; ++i) {
        for (const Matching& pi : basis) {
            TLResult lhs = apply_word(action, {i, i}, pi);
            TLResult rhs = apply_word(action, {i}, pi);
            rhs.factor *= tau;
            if (!same(lhs, rhs))
                complain("e_" + std::to_string(i) + "^2 = tau e_" + std::to_string(i), pi, lhs,
                         rhs);
        }
        for (int delta : {1, m - 1}) {
            int j = (i - 1 + delta) % m + 1;
            for (const Matching& pi : basis) {
                TLResult lhs = apply_word(action, {i, j, i}, pi);
                TLResult rhs = apply_word(action, {i}, pi);
                if (!same(lhs, rhs))
                    complain("e_" + std::to_string(i) + " e_" + std::to_string(j) + " e_" +
                                 std::to_string(i) + " = e_" + std::to_string(i),
                             pi, lhs, rhs);
            }
        }
        for (int j = i + 1; j <= m; ++j) {
            if (cyclic_distance(i, j, m) < 2) continue;
            for (const Matching& pi : basis) {
                TLResult lhs = apply_word(action, {i, j}, pi);
                TLResult rhs = apply_word(action, {j, i}, pi);
                if (!same(lhs, rhs))
                    complain("e_" + std::to_string(i) + " e_" + std::to_string(j) +
                                 " commutator",
                             pi, lhs, rhs);
            }
        }
    }
    return report;
}

TauMatrix hamiltonian(int n) {
    std::vector<Matching> basis = enumerate_matchings(n);
    auto idx = index_of(basis);
    int dim = static_cast<int>(basis.size());
    TauMatrix h(dim, dim);
    for (int site = 1; site <= 2 * n; ++site)
        for (int col = 0; col < dim; ++col) {
            TLResult r = apply_e(site, basis[col]);
            h(idx.at(r.image.word()), col) -= r.factor;
        }
    return h;
}

RationalMatrix hamiltonian_at(int n, const Rational& tau_value) {
    TauMatrix h = hamiltonian(n);
    RationalMatrix out(h.rows(), h.cols());
    for (int i = 0; i < h.rows(); ++i)
        for (int j = 0; j < h.cols(); ++j) out(i, j) = h(i, j).evaluate(tau_value);
    return out;
}

Rational GroundState::sum() const {
    Rational s = 0;
    for (const Rational& v : values) s += v;
    return s;
}

const Rational& GroundState::value_of(const Matching& m) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == m) return values[i];
    throw ValidationError("matching " + m.word() + " is not in the size-" + std::to_string(n) +
                          " basis");
}

GroundState ground_state_tau1(int n) {
    if (n < 1) throw ValidationError("ground state needs n >= 1");
    GroundState gs;
    gs.n = n;
    gs.basis = enumerate_matchings(n);
    int dim = static_cast<int>(gs.basis.size());

    RationalMatrix h = hamiltonian_at(n, Rational(1));
    RationalMatrix shifted = h;
    for (int i = 0; i < dim; ++i) shifted(i, i) += 2 * n;
    std::vector<Rational> v = kernel_vector(shifted);

    // Fully nested is the lexicographically first basis element.
    const Rational& anchor = v[0];
    if (anchor == 0) throw VerificationError("kernel vanishes on the nested matching");
    gs.values.resize(dim);
    for (int i = 0; i < dim; ++i) gs.values[i] = v[i] / anchor;

    for (int i = 0; i < dim; ++i) {
        Rational residual = 2 * n * gs.values[i];
        for (int j = 0; j < dim; ++j) residual += h(i, j) * gs.values[j];
        if (residual != 0)
            throw VerificationError("eigen-relation residual at " + gs.basis[i].word());
        if (gs.values[i] <= 0)
            throw VerificationError("non-positive component at " + gs.basis[i].word());
    }
    return gs;
}

}  // namespace loopkit
