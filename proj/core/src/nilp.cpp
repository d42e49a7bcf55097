#include "loopkit/nilp.hpp"

#include <set>
#include <utility>

#include "loopkit/combinatorics.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/matrix.hpp"
#include "loopkit/multi_poly.hpp"
#include "loopkit/parallel.hpp"
#include "loopkit/qkz.hpp"

namespace loopkit {

namespace {

constexpr int kBruteCap = 10;   // p + r beyond this explodes combinatorially
constexpr int kDetCap = 10;

void check_args(int p, int r, int cap) {
    if (p < 0) throw ValidationError("p must be non-negative");
    if (r < 0) throw ValidationError("r must be non-negative");
    if (p + r > cap)
        throw ResourceError("p + r = " + std::to_string(p + r) + " above cap " +
                            std::to_string(cap));
}

using Point = std::pair<int, int>;

struct BruteFrame {
    // start of path j (1-based), and the inclusive endpoint bounds for L_j
    std::function<Point(int)> start;
    std::function<int(int)> max_end;
    bool pin_first_end = false;
};

// Walks all east/south paths from `from` down to the diagonal point (end,
// end), keeping vertices disjoint from `occupied`, then continues with the
// remaining paths.
void walk_path(const BruteFrame& frame, int r, int j, int end, Point at, int south_steps,
               std::set<Point>& occupied, int total_south, std::vector<BigInt>& weight_by_south);

void place_path(const BruteFrame& frame, int r, int j, int prev_end, std::set<Point>& occupied,
                int total_south, std::vector<BigInt>& weight_by_south) {
    if (j > r) {
        if (static_cast<int>(weight_by_south.size()) <= total_south)
            weight_by_south.resize(total_south + 1, 0);
        weight_by_south[total_south] += 1;
        return;
    }
    Point start = frame.start(j);
    int lo = std::max(prev_end + 1, start.first);  // east steps cannot go left
    int hi = std::min(frame.max_end(j), start.second);  // nor south steps up
    if (frame.pin_first_end && j == 1) {
        if (lo > 1 || hi < 1) return;
        lo = hi = 1;
    }
    for (int end = lo; end <= hi; ++end)
        walk_path(frame, r, j, end, start, 0, occupied, total_south, weight_by_south);
}

void walk_path(const BruteFrame& frame, int r, int j, int end, Point at, int south_steps,
               std::set<Point>& occupied, int total_south, std::vector<BigInt>& weight_by_south) {
    if (occupied.count(at)) return;
    occupied.insert(at);
    if (at.first == end && at.second == end) {
        place_path(frame, r, j + 1, end, occupied, total_south + south_steps, weight_by_south);
    } else {
        if (at.first < end)
            walk_path(frame, r, j, end, {at.first + 1, at.second}, south_steps, occupied,
                      total_south, weight_by_south);
        if (at.second > end)
            walk_path(frame, r, j, end, {at.first, at.second - 1}, south_steps + 1, occupied,
                      total_south, weight_by_south);
    }
    occupied.erase(at);
}

TauPoly brute(const BruteFrame& frame, int r) {
    std::vector<BigInt> weight_by_south;
    std::set<Point> occupied;
    place_path(frame, r, 1, 0, occupied, 0, weight_by_south);
    return TauPoly(std::move(weight_by_south));
}

// Sums det of the single-path count matrix over admissible endpoint tuples.
// entry(k, L) must give the tau-weighted path count from start k to (L, L).
TauPoly lgv_sum(int r, int max_last, const std::function<int(int)>& max_end, bool pin_first,
                const std::function<TauPoly(int, int)>& entry) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> ends;
    std::function<void()> extend = [&] {
        int j = static_cast<int>(ends.size()) + 1;
        if (j > r) {
            tuples.push_back(ends);
            return;
        }
        int lo = ends.empty() ? 1 : ends.back() + 1;
        int hi = max_end(j);
        if (pin_first && j == 1) lo = hi = 1;
        for (int e = lo; e <= hi && e <= max_last; ++e) {
            ends.push_back(e);
            extend();
            ends.pop_back();
        }
    };
    extend();

    std::vector<TauPoly> dets(tuples.size());
    parallel_for(0, static_cast<int>(tuples.size()), [&](int t) {
        TauMatrix m(r, r);
        for (int k = 1; k <= r; ++k)
            for (int j = 1; j <= r; ++j) m(k - 1, j - 1) = entry(k, tuples[t][j - 1]);
        dets[t] = determinant(m);
    });
    TauPoly total;
    for (const TauPoly& d : dets) total += d;
    return total;
}

BigInt asm_count(int m) {
    Rational acc = 1;
    for (int k = 0; k < m; ++k) acc *= Rational(factorial(3 * k + 1), factorial(m + k));
    auto v = as_integer(acc);
    if (!v) throw VerificationError("alternating-sign-matrix product is not integral");
    return *v;
}

// S(L, p): the round-number product whose ratios give the tau = 1 G count.
Rational s_product(int L, int p) {
    if (L % 2 != 0) throw ValidationError("S(L, p) needs even L");
    Rational acc = asm_count(L / 2);
    BigInt L2 = BigInt(L) * L;
    if (p % 2 == 0) {
        for (int l = 1; l <= p / 2; ++l)
            for (int k = l; k <= 2 * l - 1; ++k) acc *= Rational(L2 - 4 * k * k);
        for (int l = 0; l <= p / 2 - 1; ++l) {
            BigInt odd2 = BigInt(2 * l + 1) * (2 * l + 1);
            for (int e = 0; e < p / 2 - l; ++e) acc /= Rational(L2 - odd2);
        }
    } else {
        for (int l = 1; l <= (p + 1) / 2; ++l)
            for (int k = l; k <= 2 * l - 2; ++k) acc *= Rational(L2 - 4 * k * k);
        for (int l = 0; l <= (p - 3) / 2; ++l) {
            BigInt odd2 = BigInt(2 * l + 1) * (2 * l + 1);
            for (int e = 0; e < (p - 1) / 2 - l; ++e) acc /= Rational(L2 - odd2);
        }
    }
    return acc;
}

}  // namespace

TauPoly f_bruteforce(int p, int r) {
    check_args(p, r, kBruteCap);
    if (r == 0) return 1;
    BruteFrame frame;
    frame.start = [p](int j) { return Point{j - p, 2 * j - 1}; };
    frame.max_end = [](int j) { return 2 * j - 1; };
    frame.pin_first_end = true;
    return brute(frame, r);
}

TauPoly g_bruteforce(int p, int r) {
    check_args(p, r, kBruteCap);
    if (r == 0) return 1;
    BruteFrame frame;
    frame.start = [p](int j) { return Point{j, p + 2 * j - 1}; };
    frame.max_end = [p](int j) { return p + 2 * j - 1; };
    return brute(frame, r);
}

TauPoly f_lgv(int p, int r) {
    check_args(p, r, kDetCap);
    if (r == 0) return 1;
    auto entry = [p](int k, int L) {
        return TauPoly::monomial(binomial(p + k - 1, 2 * k - L - 1), 2 * k - L - 1);
    };
    return lgv_sum(
        r, 2 * r - 1, [](int j) { return 2 * j - 1; }, true, entry);
}

TauPoly g_lgv(int p, int r) {
    check_args(p, r, kDetCap);
    if (r == 0) return 1;
    auto entry = [p](int k, int L) {
        return TauPoly::monomial(binomial(p + k - 1, p + 2 * k - L - 1), p + 2 * k - L - 1);
    };
    return lgv_sum(
        r, p + 2 * r - 1, [p](int j) { return p + 2 * j - 1; }, false, entry);
}

TauPoly f_ct(int p, int r) {
    check_args(p, r, kDetCap);
    if (r == 0) return 1;
    std::vector<int> caps(r);
    for (int l = 0; l < r; ++l) caps[l] = 2 * l;
    MultiPoly acc = phi_integrand(p, r, caps);
    std::vector<int> e(r, 0);
    for (int l = 0; l < r; ++l) {
        MultiPoly factor(r);
        e.assign(r, 0);
        factor.add_term(e, 1);
        e[l] = 1;
        factor.add_term(e, 1);
        acc = mp_mul(acc, factor, caps);
    }
    return acc.coefficient_of(caps);
}

TauPoly g_ct(int p, int r) {
    check_args(p, r, kDetCap);
    if (r == 0) return 1;
    std::vector<int> caps(r);
    for (int l = 0; l < r; ++l) caps[l] = p + 2 * l;
    MultiPoly acc = MultiPoly::constant(r, 1);
    std::vector<int> e(r, 0);
    for (int l = 0; l < r; ++l) {
        // (1 + tau u_l)^{p + l} (1 + u_l), truncated at the cap
        MultiPoly factor(r);
        for (int k = 0; k <= std::min(p + l, caps[l]); ++k) {
            e.assign(r, 0);
            e[l] = k;
            factor.add_term(e, TauPoly::monomial(binomial(p + l, k), k));
        }
        acc = mp_mul(acc, factor, caps);
        MultiPoly edge(r);
        e.assign(r, 0);
        edge.add_term(e, 1);
        e[l] = 1;
        edge.add_term(e, 1);
        acc = mp_mul(acc, edge, caps);
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
        }
    for (int l = 0; l < r; ++l)
        for (int m = l; m < r; ++m) {
            // truncated geometric series for 1 / (1 - u_l u_m)
            MultiPoly geo(r);
            int top = l == m ? caps[l] / 2 : std::min(caps[l], caps[m]);
            for (int k = 0; k <= top; ++k) {
                e.assign(r, 0);
                e[l] += k;
                e[m] += k;
                geo.add_term(e, 1);
            }
            acc = mp_mul(acc, geo, caps);
        }
    return acc.coefficient_of(caps);
}

BigInt g_kratt(int p, int r) {
    if (p < 0 || r < 0) throw ValidationError("p and r must be non-negative");
    Rational acc = 1;
    if (r % 2 == 0) {
        for (int i = 0; i <= r - 1; ++i)
            acc *= Rational(factorial(3 * p + 3 * i + 1),
                            factorial(3 * p + 2 * i + 1) * factorial(p + 2 * i));
        for (int i = 0; i <= (r - 2) / 2; ++i)
            acc *= Rational(factorial(2 * p + 2 * i + 1) * factorial(2 * i));
    } else {
        acc = Rational(BigInt(1) << p);
        for (int i = 1; i <= r - 1; ++i)
            acc *= Rational(factorial(3 * p + 3 * i + 1),
                            factorial(3 * p + 2 * i + 1) * factorial(p + 2 * i));
        for (int i = 1; i <= (r - 1) / 2; ++i)
            acc *= Rational(factorial(2 * p + 2 * i) * factorial(2 * i - 1));
    }
    auto v = as_integer(acc);
    if (!v || *v <= 0) throw VerificationError("closed product form is not a positive integer");
    return *v;
}

BigInt g_sratio(int p, int r) {
    if (p < 0 || r < 0) throw ValidationError("p and r must be non-negative");
    Rational ratio = s_product(2 * (p + r), p) / s_product(2 * p, p);
    auto v = as_integer(ratio);
    if (!v || *v <= 0)
        throw VerificationError("product ratio is not a positive integer at p=" +
                                std::to_string(p) + ", r=" + std::to_string(r));
    return *v;
}

CrossCheck cross_check(int p, int r) {
    CrossCheck c;
    c.p = p;
    c.r = r;
    auto mismatch = [&](const std::string& what) {
        c.ok = false;
        c.failures.push_back(what);
    };

    c.f_brute = f_bruteforce(p, r);
    c.f_det = f_lgv(p, r);
    c.f_const = f_ct(p, r);
    if (c.f_det != c.f_brute) mismatch("F: determinant vs brute force");
    if (c.f_const != c.f_brute) mismatch("F: constant term vs brute force");

    c.g_brute = g_bruteforce(p, r);
    c.g_det = g_lgv(p, r);
    c.g_const = g_ct(p, r);
    if (c.g_det != c.g_brute) mismatch("G: determinant vs brute force");
    if (c.g_const != c.g_brute) mismatch("G: constant term vs brute force");
    if (r >= 1) {
        c.open_sum = sum_open(p, r);
        if (c.open_sum != c.g_det) mismatch("G: open-boundary sum vs determinant");
    } else {
        c.open_sum = 1;
    }

    auto eval1 = [](const TauPoly& t) {
        auto v = as_integer(t.evaluate(Rational(1)));
        if (!v) throw VerificationError("tau = 1 value is not an integer");
        return *v;
    };
    c.g_tau1 = eval1(c.g_det);
    c.kratt = g_kratt(p, r);
    c.sratio = g_sratio(p, r);
    if (c.kratt != c.g_tau1) mismatch("G at tau=1 vs closed product form");
    if (c.sratio != c.g_tau1) mismatch("G at tau=1 vs product ratio");

    c.f_tau1 = eval1(c.f_det);
    c.psi_tau1 = eval1(psi_nested(Matching::unit_chain(r), p + 1));
    if (c.psi_tau1 != c.f_tau1) mismatch("F at tau=1 vs nested unit chain component");
    return c;
}

}  // namespace loopkit
