#include "loopkit/qkz.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {

std::vector<int> little_arches(const Matching& pi) {
    std::vector<int> arches;
    for (int i = 1; i < pi.size(); ++i)
        if (pi.partner(i) == i + 1) arches.push_back(i);
    return arches;
}

// Weak-invariant guard for the reduced sequence; a correct reduction can
// never leave the lattice, so this firing means an implementation bug.
void check_reduced(const std::vector<int>& entries) {
    for (std::size_t j = 0; j < entries.size(); ++j) {
        int bound = 2 * static_cast<int>(j + 1) - 1;
        bool ok = entries[j] >= 1 && entries[j] <= bound &&
                  (j == 0 || entries[j] >= entries[j - 1]);
        if (!ok)
            throw VerificationError("reduced sequence leaves the weak lattice at position " +
                                    std::to_string(j + 1));
    }
}

}  // namespace

TauPoly coeff_C(const ASequence& a, const Matching& pi, ArchChoice choice) {
    if (a.size() != pi.half_size())
        throw ValidationError("sequence size " + std::to_string(a.size()) +
                              " does not match half-size " + std::to_string(pi.half_size()));
    std::vector<int> entries = a.entries();
    std::string word = pi.word();
    TauPoly result = 1;
    while (!entries.empty()) {
        Matching cur = Matching::parse(word);
        std::vector<int> arches = little_arches(cur);
        int i = choice == ArchChoice::leftmost ? arches.front() : arches.back();
        int k = static_cast<int>(std::count(entries.begin(), entries.end(), i));
        if (k == 0) return {};
        result *= cheb_u(k - 1);

        std::vector<int> reduced;
        reduced.reserve(entries.size() - 1);
        int copies_left = k - 1;
        for (int e : entries) {
            if (e < i) {
                reduced.push_back(e);
            } else if (e == i) {
                if (copies_left > 0) {
                    --copies_left;
                    reduced.push_back(i - 1);
                }
            } else {
                reduced.push_back(e - 2);
            }
        }
        // Both branches above can produce a 0 entry; such sequences
        // contribute nothing.
        if (std::any_of(reduced.begin(), reduced.end(), [](int e) { return e == 0; }))
            return {};
        check_reduced(reduced);
        entries = std::move(reduced);
        word.erase(i - 1, 2);
    }
    return result;
}

TauPoly coeff_C_product(const ASequence& a, const Matching& pi) {
    if (!a.is_strict()) throw ValidationError("product form needs a strict sequence");
    if (a.size() != pi.half_size())
        throw ValidationError("sequence size " + std::to_string(a.size()) +
                              " does not match half-size " + std::to_string(pi.half_size()));
    TauPoly result = 1;
    for (int r = 1; r <= pi.size(); ++r) {
        int s = pi.partner(r);
        if (s < r) continue;
        int inside = 0;
        for (int e : a.entries())
            if (e >= r && e < s) ++inside;
        int k = inside - (s - r + 1) / 2;
        if (k < 0) return {};
        result *= cheb_u(k);
        if (result.is_zero()) return result;
    }
    return result;
}

CoeffMatrix matrix_C(int n) {
    CoeffMatrix m;
    m.sequences = enumerate_strict_sequences(n);
    m.matchings = enumerate_matchings(n);
    int dim = static_cast<int>(m.sequences.size());
    m.entries = TauMatrix(dim, dim);
    for (int row = 0; row < dim; ++row)
        for (int col = 0; col < dim; ++col)
            m.entries(row, col) = coeff_C(m.sequences[row], m.matchings[col]);
    return m;
}

namespace {

std::mutex g_ctilde_mutex;
std::map<int, CoeffMatrix> g_ctilde_cache;

}  // namespace

CoeffMatrix matrix_Ctilde(int n) {
    std::lock_guard<std::mutex> lock(g_ctilde_mutex);
    auto it = g_ctilde_cache.find(n);
    if (it != g_ctilde_cache.end()) return it->second;
    CoeffMatrix m = matrix_C(n);
    m.entries = unitriangular_inverse(m.entries);
    m.inverse = true;
    g_ctilde_cache.emplace(n, m);
    return m;
}

MultiPoly phi_integrand(int p, int r, const std::vector<int>& caps) {
    if (static_cast<int>(caps.size()) != r) throw ValidationError("caps arity mismatch");
    MultiPoly acc = MultiPoly::constant(r, 1);
    std::vector<int> e(r, 0);
    for (int l = 0; l < r; ++l) {
        MultiPoly factor(r);
        for (int k = 0; k <= std::min(p, caps[l]); ++k) {
            e.assign(r, 0);
            e[l] = k;
            factor.add_term(e, TauPoly::monomial(binomial(p, k), k));
        }
        acc = mp_mul(acc, factor, caps);
    }
    for (int l = 0; l < r; ++l)
        for (int m = l + 1; m < r; ++m) {
            MultiPoly diff(r);
            e.assign(r, 0);
            e[m] = 1;
            diff.add_term(e, 1);
            e.assign(r, 0);
            e[l] = 1;
            diff.add_term(e, -1);
            acc = mp_mul(acc, diff, caps);

            MultiPoly mixed(r);
            e.assign(r, 0);
            mixed.add_term(e, 1);
            e[m] = 1;
            mixed.add_term(e, TauPoly::tau());
            e[l] = 1;
            mixed.add_term(e, 1);
            acc = mp_mul(acc, mixed, caps);
        }
    return acc;
}

namespace {

std::vector<int> offsets_below(const std::vector<int>& c) {
    std::vector<int> target(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) target[i] = c[i] - 1;
    return target;
}

void validate_offsets(const std::vector<int>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 1)
            throw ValidationError("offset c_" + std::to_string(i + 1) + " must be positive");
        if (i > 0 && c[i] <= c[i - 1])
            throw ValidationError("offsets must be strictly increasing");
    }
}

}  // namespace

TauPoly phi(int p, const std::vector<int>& c) {
    if (p < 0) throw ValidationError("p must be non-negative");
    validate_offsets(c);
    std::vector<int> target = offsets_below(c);
    return phi_integrand(p, static_cast<int>(c.size()), target).coefficient_of(target);
}

TauPoly psi_nested(const Matching& pi, int p) {
    if (p < 0) throw ValidationError("p must be non-negative");
    int r = pi.half_size();
    if (r == 0) return 1;
    CoeffMatrix ct = matrix_Ctilde(r);
    int row = -1;
    for (std::size_t i = 0; i < ct.matchings.size(); ++i)
        if (ct.matchings[i] == pi) {
            row = static_cast<int>(i);
            break;
        }
    if (row < 0) throw VerificationError("matching missing from its own basis");

    std::vector<int> caps(r);
    for (int l = 0; l < r; ++l) caps[l] = 2 * l;  // strict sequences top out at 2(l+1)-1
    MultiPoly integrand = phi_integrand(p, r, caps);

    TauPoly acc;
    for (std::size_t col = 0; col < ct.sequences.size(); ++col) {
        const TauPoly& weight = ct.entries(row, static_cast<int>(col));
        if (weight.is_zero()) continue;
        acc += weight * integrand.coefficient_of(offsets_below(ct.sequences[col].entries()));
    }
    return acc;
}

TauPoly psi(const Matching& pi) { return psi_nested(pi, 0); }

SumRuleReport sum_rule(int r, int p) {
    if (r < 1) throw ValidationError("sum rule needs r >= 1");
    if (p < 0) throw ValidationError("p must be non-negative");
    SumRuleReport report;
    report.r = r;
    report.p = p;
    for (const Matching& pi : enumerate_matchings(r))
        report.lhs += TauPoly::monomial(1, pi.even_openings()) * psi_nested(pi, p);
    report.rhs = psi_nested(Matching::unit_chain(r), p + 1);
    report.equal = report.lhs == report.rhs;
    return report;
}

namespace {

void enumerate_open(int p, int r, std::vector<int>& prefix,
                    const std::function<void(const std::vector<int>&)>& visit) {
    if (static_cast<int>(prefix.size()) == r) {
        visit(prefix);
        return;
    }
    int i = static_cast<int>(prefix.size()) + 1;
    int lo = prefix.empty() ? p + 1 : prefix.back() + 1;
    for (int v = lo; v <= 2 * p + 2 * i - 1; ++v) {
        if (!prefix.empty() && prefix.back() % 2 == 0 && v == prefix.back() + 1) continue;
        prefix.push_back(v);
        enumerate_open(p, r, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

TauPoly sum_open(int p, int r) {
    if (r < 1) throw ValidationError("sum needs r >= 1");
    if (p < 0) throw ValidationError("p must be non-negative");
    std::vector<int> caps(r);
    for (int l = 0; l < r; ++l) caps[l] = p + 2 * l;  // offsets reach p + 2(l+1) - 1
    MultiPoly integrand = phi_integrand(p, r, caps);
    TauPoly acc;
    std::vector<int> prefix;
    enumerate_open(p, r, prefix, [&](const std::vector<int>& a) {
        std::vector<int> target(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) target[i] = a[i] - p - 1;
        acc += integrand.coefficient_of(target);
    });
    return acc;
}

NInterpolation interpolate_in_n(const Matching& pi, int p_max) {
    NInterpolation out;
    out.pattern = pi;
    out.young = pi.young();
    out.boxes = out.young.box_count();
    out.p_max = p_max;
    if (p_max < out.boxes)
        throw ValidationError("p_max " + std::to_string(p_max) + " below the box count " +
                              std::to_string(out.boxes));
    int r = pi.half_size();

    std::vector<TauPoly> samples(p_max + 1);
    for (int p = 0; p <= p_max; ++p) samples[p] = psi_nested(pi, p);

    int tau_deg = 0;
    for (const TauPoly& s : samples) tau_deg = std::max(tau_deg, s.degree());
    out.tau_degree = tau_deg;

    out.by_tau_power.resize(tau_deg + 1);
    out.n_degree = 0;
    for (int t = 0; t <= tau_deg; ++t) {
        std::vector<std::pair<int, Rational>> points;
        points.reserve(p_max + 1);
        for (int p = 0; p <= p_max; ++p)
            points.emplace_back(r + p, Rational(samples[p].coeff(t)));
        NPoly q = interpolate_rational(points);
        if (q.degree() > out.boxes)
            throw VerificationError("tau^" + std::to_string(t) + " coefficient has degree " +
                                    std::to_string(q.degree()) + " above the box count " +
                                    std::to_string(out.boxes));
        out.n_degree = std::max(out.n_degree, q.degree());
        out.tau1 += q;
        out.by_tau_power[t] = std::move(q);
    }

    BigInt b_factorial = factorial(out.boxes);
    out.factorial_clears_denominators = true;
    for (const NPoly& q : out.by_tau_power)
        for (const Rational& c : q.coefficients())
            if (!is_integer(c * b_factorial)) out.factorial_clears_denominators = false;

    out.leading = out.by_tau_power.size() > static_cast<std::size_t>(out.boxes)
                      ? out.by_tau_power[out.boxes].coeff(out.boxes)
                      : Rational(0);
    out.expected_leading = Rational(out.young.standard_tableaux(), b_factorial);
    out.leading_ok = out.leading == out.expected_leading;
    return out;
}

std::pair<Rational, Rational> zeileq_sides(const Rational& tau_value,
                                           const std::vector<Rational>& u) {
    int r = static_cast<int>(u.size());
    if (r < 1) throw ValidationError("need at least one variable");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i < j && u[i] == u[j])
                throw ValidationError("variables must be pairwise distinct");
            if (tau_value + u[i] + u[j] == 0)
                throw ValidationError("point lies on a pole of the summand");
        }
    Rational lhs = 0;
    for (int j = 0; j < r; ++j) {
        Rational num = tau_value + 2 * u[j];
        for (int i = 0; i < r; ++i) {
            num *= 1 - u[j] * u[i];
            if (i != j) num *= 1 + u[i] * (tau_value + u[j]);
        }
        Rational den = 1;
        for (int i = 0; i < r; ++i) {
            if (i != j) den *= u[j] - u[i];
            den *= tau_value + u[i] + u[j];
        }
        lhs += num / den;
    }
    Rational prod = 1;
    for (const Rational& v : u) prod *= v * v;
    Rational rhs = 1 - prod;
    if (r % 2 == 0) rhs = -rhs;
    return {lhs, rhs};
}

bool verify_zeileq(int r, int trials) {
    if (r < 1) throw ValidationError("need r >= 1");
    if (trials < 1) throw ValidationError("need at least one trial");
    std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(r));
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> u;
        Rational tau_value;
        while (true) {
            u.clear();
            tau_value = Rational(num(rng), den(rng));
            for (int i = 0; i < r; ++i) u.emplace_back(num(rng), den(rng));
            bool clear = true;
            for (int i = 0; i < r && clear; ++i)
                for (int j = 0; j < r && clear; ++j) {
                    if (i < j && u[i] == u[j]) clear = false;
                    if (tau_value + u[i] + u[j] == 0) clear = false;
                }
            if (clear) break;
        }
        auto [lhs, rhs] = zeileq_sides(tau_value, u);
        if (lhs != rhs) {
            std::ostringstream msg;
            msg << "identity fails at tau=" << format_rational(tau_value) << ", u=(";
            for (std::size_t i = 0; i < u.size(); ++i)
                msg << (i ? "," : "") << format_rational(u[i]);
            msg << "): lhs=" << format_rational(lhs) << " rhs=" << format_rational(rhs);
            throw VerificationError(msg.str());
        }
    }
    return true;
}

}  // namespace loopkit
