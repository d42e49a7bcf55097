#include "loopkit_cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loopkit/combinatorics.hpp"
#include "loopkit/errors.hpp"
#include "loopkit/exact.hpp"
#include "loopkit/interpolate.hpp"
#include "loopkit/json_io.hpp"
#include "loopkit/loop_model.hpp"
#include "loopkit/nilp.hpp"
#include "loopkit/parallel.hpp"
#include "loopkit/qkz.hpp"

namespace loopkit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kDefaultMaxN = 6;
constexpr int kDefaultMaxP = 6;
constexpr int kDefaultMaxR = 5;

enum class Format { human, json, csv };

struct Settings {
    Format format = Format::human;
    bool evaluate = false;
    Rational tau;
    int max_n = kDefaultMaxN;
    int max_p = kDefaultMaxP;
    int max_r = kDefaultMaxR;
};

void check_cap(const std::string& name, int value, int cap) {
    if (value > cap)
        throw ResourceError(name + "=" + std::to_string(value) + " exceeds the cap " +
                            std::to_string(cap) + "; raise it with --max-" + name);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << csv_field(fields[i]);
    }
    out << '\n';
}

std::string join(const std::vector<int>& values) {
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) text += ',';
        text += std::to_string(values[i]);
    }
    return text;
}

ordered_json poly_json(const TauPoly& p) {
    return ordered_json::parse(tau_poly_to_json(p));
}

ordered_json npoly_json(const NPoly& p) {
    ordered_json j;
    j["var"] = "n";
    auto coeffs = ordered_json::array();
    for (const Rational& c : p.coefficients()) coeffs.push_back(format_rational(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump() << '\n'; }

const char* yesno(bool b) { return b ? "yes" : "no"; }
const char* truefalse(bool b) { return b ? "true" : "false"; }

int cmd_matchings(const Settings& s, int n, std::ostream& out) {
    check_cap("n", n, s.max_n);
    std::vector<Matching> items = enumerate_matchings(n);
    if (s.format == Format::json) {
        ordered_json j;
        j["n"] = n;
        j["count"] = items.size();
        auto list = ordered_json::array();
        for (const Matching& m : items) {
            ordered_json e;
            e["word"] = m.word();
            e["openings"] = m.openings().entries();
            e["young"] = m.young().rows();
            list.push_back(std::move(e));
        }
        j["matchings"] = std::move(list);
        emit_json(out, j);
    } else if (s.format == Format::csv) {
        csv_row(out, {"word", "openings", "young"});
        for (const Matching& m : items)
            csv_row(out, {m.word(), join(m.openings().entries()), join(m.young().rows())});
    } else {
        int index_width = static_cast<int>(std::to_string(items.size()).size());
        std::size_t openings_width = 0;
        for (const Matching& m : items)
            openings_width = std::max(openings_width, join(m.openings().entries()).size());
        for (std::size_t i = 0; i < items.size(); ++i) {
            const Matching& m = items[i];
            out << std::setw(index_width) << i + 1 << "  " << m.word() << "  " << std::left
                << std::setw(static_cast<int>(openings_width)) << join(m.openings().entries())
                << std::right << "  " << m.young().str() << '\n';
        }
    }
    return 0;
}

int cmd_ground_state(const Settings& s, int n, std::ostream& out) {
    check_cap("n", n, s.max_n);
    GroundState g = ground_state_tau1(n);
    if (s.format == Format::json) {
        ordered_json j;
        j["n"] = n;
        auto list = ordered_json::array();
        for (std::size_t i = 0; i < g.basis.size(); ++i) {
            ordered_json e;
            e["matching"] = g.basis[i].word();
            e["value"] = format_rational(g.values[i]);
            list.push_back(std::move(e));
        }
        j["components"] = std::move(list);
        j["sum"] = format_rational(g.sum());
        emit_json(out, j);
    } else if (s.format == Format::csv) {
        csv_row(out, {"matching", "value"});
        for (std::size_t i = 0; i < g.basis.size(); ++i)
            csv_row(out, {g.basis[i].word(), format_rational(g.values[i])});
    } else {
        int width = 2 * n < 3 ? 3 : 2 * n;
        for (std::size_t i = 0; i < g.basis.size(); ++i)
            out << std::left << std::setw(width) << g.basis[i].word() << "  "
                << format_rational(g.values[i]) << '\n';
        out << std::left << std::setw(width) << "sum" << "  " << format_rational(g.sum())
            << '\n';
    }
    return 0;
}

int cmd_psi(const Settings& s, const std::string& word, int p, std::ostream& out) {
    Matching pattern = Matching::parse(word);
    check_cap("n", pattern.half_size(), s.max_n);
    check_cap("p", p, s.max_p);
    TauPoly value = psi_nested(pattern, p);
    int total = pattern.half_size() + p;
    if (s.format == Format::json) {
        ordered_json j;
        j["pattern"] = pattern.word();
        j["p"] = p;
        j["n"] = total;
        if (s.evaluate) {
            j["tau"] = format_rational(s.tau);
            j["value"] = format_rational(value.evaluate(s.tau));
        } else {
            j["tau_poly"] = poly_json(value);
        }
        emit_json(out, j);
    } else if (s.format == Format::csv) {
        if (s.evaluate) {
            csv_row(out, {"pattern", "p", "n", "tau", "value"});
            csv_row(out, {pattern.word(), std::to_string(p), std::to_string(total),
                          format_rational(s.tau), format_rational(value.evaluate(s.tau))});
        } else {
            csv_row(out, {"pattern", "p", "n", "tau_poly"});
            csv_row(out, {pattern.word(), std::to_string(p), std::to_string(total),
                          value.str()});
        }
    } else {
        if (s.evaluate)
            out << format_rational(value.evaluate(s.tau)) << '\n';
        else
            out << value.str() << '\n';
    }
    return 0;
}

int cmd_sum_rule(const Settings& s, int r, int p, std::ostream& out) {
    check_cap("r", r, s.max_r);
    check_cap("p", p, s.max_p);
    SumRuleReport rep = sum_rule(r, p);
    std::string lhs, rhs;
    bool equal;
    if (s.evaluate) {
        Rational lv = rep.lhs.evaluate(s.tau);
        Rational rv = rep.rhs.evaluate(s.tau);
        lhs = format_rational(lv);
        rhs = format_rational(rv);
        equal = lv == rv;
    } else {
        lhs = rep.lhs.str();
        rhs = rep.rhs.str();
        equal = rep.equal;
    }
    if (s.format == Format::json) {
        ordered_json j;
        j["r"] = r;
        j["p"] = p;
        if (s.evaluate) {
            j["tau"] = format_rational(s.tau);
            j["lhs"] = lhs;
            j["rhs"] = rhs;
        } else {
            j["lhs"] = poly_json(rep.lhs);
            j["rhs"] = poly_json(rep.rhs);
        }
        j["equal"] = equal;
        emit_json(out, j);
    } else if (s.format == Format::csv) {
        csv_row(out, {"r", "p", "lhs", "rhs", "equal"});
        csv_row(out, {std::to_string(r), std::to_string(p), lhs, rhs, truefalse(equal)});
    } else {
        out << "lhs: " << lhs << '\n';
        out << "rhs: " << rhs << '\n';
        out << "equal: " << yesno(equal) << '\n';
    }
    return equal ? 0 : 3;
}

int cmd_sum_open(const Settings& s, int p, int r, std::ostream& out) {
    check_cap("p", p, s.max_p);
    check_cap("r", r, s.max_r);
    TauPoly value = sum_open(p, r);
    if (s.format == Format::json) {
        ordered_json j;
        j["p"] = p;
        j["r"] = r;
        if (s.evaluate) {
            j["tau"] = format_rational(s.tau);
            j["value"] = format_rational(value.evaluate(s.tau));
        } else {
            j["tau_poly"] = poly_json(value);
        }
        emit_json(out, j);
    } else if (s.format == Format::csv) {
        if (s.evaluate) {
            csv_row(out, {"p", "r", "tau", "value"});
            csv_row(out, {std::to_string(p), std::to_string(r), format_rational(s.tau),
                          format_rational(value.evaluate(s.tau))});
        } else {
            csv_row(out, {"p", "r", "tau_poly"});
            csv_row(out, {std::to_string(p), std::to_string(r), value.str()});
        }
    } else {
        if (s.evaluate)
            out << format_rational(value.evaluate(s.tau)) << '\n';
        else
            out << value.str() << '\n';
    }
    return 0;
}

int cmd_nilp(const Settings& s, const std::string& family, int p, int r,
             const std::string& method, std::ostream& out) {
    check_cap("p", p, s.max_p);
    check_cap("r", r, s.max_r);
    TauPoly value;
    if (family == "F")
        value = method == "brute" ? f_bruteforce(p, r)
                                  : method == "ct" ? f_ct(p, r) : f_lgv(p, r);
    else
        value = method == "brute" ? g_bruteforce(p, r)
                                  : method == "ct" ? g_ct(p, r) : g_lgv(p, r);
    Rational tau1 = value.evaluate(Rational(1));
    if (s.format == Format::json) {
        ordered_json j;
        j["family"] = family;
        j["p"] = p;
        j["r"] = r;
        j["method"] = method;
        if (s.evaluate) {
            j["tau"] = format_rational(s.tau);
            j["value"] = format_rational(value.evaluate(s.tau));
        } else {
            j["tau_poly"] = poly_json(value);
            j["tau1"] = format_rational(tau1);
        }
        emit_json(out, j);
    } else if (s.format == Format::csv) {
        if (s.evaluate) {
            csv_row(out, {"family", "p", "r", "method", "tau", "value"});
            csv_row(out, {family, std::to_string(p), std::to_string(r), method,
                          format_rational(s.tau), format_rational(value.evaluate(s.tau))});
        } else {
            csv_row(out, {"family", "p", "r", "method", "tau_poly", "tau1"});
            csv_row(out, {family, std::to_string(p), std::to_string(r), method, value.str(),
                          format_rational(tau1)});
        }
    } else {
        if (s.evaluate) {
            out << format_rational(value.evaluate(s.tau)) << '\n';
        } else {
            out << value.str() << '\n';
            out << "tau=1: " << format_rational(tau1) << '\n';
        }
    }
    return 0;
}

int cmd_closed_form(const Settings& s, int p, int r, std::ostream& out) {
    check_cap("p", p, s.max_p);
    check_cap("r", r, s.max_r);
    BigInt kratt = g_kratt(p, r);
    BigInt sratio = g_sratio(p, r);
    bool equal = kratt == sratio;
    if (s.format == Format::json) {
        ordered_json j;
        j["p"] = p;
        j["r"] = r;
        j["kratt"] = format_bigint(kratt);
        j["sratio"] = format_bigint(sratio);
        j["equal"] = equal;
        emit_json(out, j);
    } else if (s.format == Format::csv) {
        csv_row(out, {"p", "r", "kratt", "sratio", "equal"});
        csv_row(out, {std::to_string(p), std::to_string(r), format_bigint(kratt),
                      format_bigint(sratio), truefalse(equal)});
    } else {
        out << "kratt: " << format_bigint(kratt) << '\n';
        out << "sratio: " << format_bigint(sratio) << '\n';
        out << "equal: " << yesno(equal) << '\n';
    }
    return equal ? 0 : 3;
}

int cmd_interpolate(const Settings& s, const std::string& word, int p_max, bool p_max_set,
                    std::ostream& out) {
    Matching pattern = Matching::parse(word);
    check_cap("n", pattern.half_size(), s.max_n);
    int boxes = pattern.young().box_count();
    // The derived default needs boxes + 2 samples whatever the cap says; an
    // explicit request is still capped.
    if (p_max_set)
        check_cap("p", p_max, s.max_p);
    else
        p_max = boxes + 2;
    NInterpolation in = interpolate_in_n(pattern, p_max);
    bool ok = in.leading_ok && in.factorial_clears_denominators;
    if (s.format == Format::json) {
        ordered_json j;
        j["pattern"] = pattern.word();
        j["young"] = in.young.rows();
        j["boxes"] = in.boxes;
        j["p_max"] = in.p_max;
        j["n_degree"] = in.n_degree;
        j["tau_degree"] = in.tau_degree;
        j["tau1"] = npoly_json(in.tau1);
        auto powers = ordered_json::array();
        for (const NPoly& c : in.by_tau_power) powers.push_back(npoly_json(c));
        j["by_tau_power"] = std::move(powers);
        j["leading"] = format_rational(in.leading);
        j["expected_leading"] = format_rational(in.expected_leading);
        j["integral_after_factorial"] = in.factorial_clears_denominators;
        j["leading_ok"] = in.leading_ok;
        emit_json(out, j);
    } else if (s.format == Format::csv) {
        csv_row(out, {"pattern", "young", "boxes", "p_max", "n_degree", "tau_degree", "tau1",
                      "leading", "expected_leading"});
        csv_row(out, {pattern.word(), in.young.str(), std::to_string(in.boxes),
                      std::to_string(in.p_max), std::to_string(in.n_degree),
                      std::to_string(in.tau_degree), in.tau1.str(),
                      format_rational(in.leading), format_rational(in.expected_leading)});
    } else {
        out << "pattern: " << pattern.word() << '\n';
        out << "young: " << in.young.str() << "  (" << in.boxes
            << (in.boxes == 1 ? " box)" : " boxes)") << '\n';
        out << "p-max: " << in.p_max << '\n';
        out << "tau=1: " << in.tau1.str() << '\n';
        for (std::size_t t = 0; t < in.by_tau_power.size(); ++t)
            if (!in.by_tau_power[t].is_zero())
                out << "tau^" << t << ": " << in.by_tau_power[t].str() << '\n';
        out << "degrees: n " << in.n_degree << ", tau " << in.tau_degree << '\n';
        out << "leading: " << format_rational(in.leading) << " (expected "
            << format_rational(in.expected_leading) << ")" << '\n';
    }
    return ok ? 0 : 3;
}

struct Check {
    std::string name;
    bool pass = true;
    std::string witness;
};

template <typename Body>
void run_check(std::vector<Check>& checks, const std::string& name, Body body) {
    Check c{name, true, ""};
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.witness = e.what();
    }
    checks.push_back(std::move(c));
}

void fail(Check& c, const std::string& witness) {
    if (!c.pass) return;
    c.pass = false;
    c.witness = witness;
}

void suite_tl(int n, std::vector<Check>& checks) {
    for (int size = 2; size <= n; ++size)
        run_check(checks, "tl relations n=" + std::to_string(size), [&](Check& c) {
            TLCheckReport rep = check_tl_relations(size);
            if (!rep.ok) fail(c, rep.violations.front());
        });
}

void suite_coeffs(int n, std::vector<Check>& checks) {
    for (int size = 1; size <= n; ++size) {
        std::string tag = " n=" + std::to_string(size);
        run_check(checks, "coefficient matrix unitriangular" + tag, [&](Check& c) {
            CoeffMatrix m = matrix_C(size);
            int dim = m.entries.rows();
            for (int row = 0; row < dim; ++row) {
                if (m.entries(row, row) != TauPoly(1))
                    fail(c, "diagonal at a=(" + m.sequences[row].str() + ")");
                for (int col = row + 1; col < dim; ++col)
                    if (!m.entries(row, col).is_zero())
                        fail(c, "a=(" + m.sequences[row].str() + "), pi=" +
                                    m.matchings[col].word());
            }
        });
        run_check(checks, "recursion, product and arch choice agree" + tag, [&](Check& c) {
            for (const ASequence& a : enumerate_strict_sequences(size))
                for (const Matching& pi : enumerate_matchings(size)) {
                    TauPoly left = coeff_C(a, pi, ArchChoice::leftmost);
                    if (left != coeff_C(a, pi, ArchChoice::rightmost) ||
                        left != coeff_C_product(a, pi))
                        fail(c, "a=(" + a.str() + "), pi=" + pi.word());
                }
        });
        run_check(checks, "support and degree follow diagram containment" + tag,
                  [&](Check& c) {
                      for (const ASequence& a : enumerate_strict_sequences(size)) {
                          YoungDiagram ya = young_of(a);
                          for (const Matching& pi : enumerate_matchings(size)) {
                              TauPoly entry = coeff_C(a, pi);
                              YoungDiagram ypi = pi.young();
                              std::string witness = "a=(" + a.str() + "), pi=" + pi.word();
                              if (!ya.contains(ypi)) {
                                  if (!entry.is_zero()) fail(c, witness);
                              } else if (ya == ypi) {
                                  if (entry != TauPoly(1)) fail(c, witness);
                              } else if (!entry.is_zero() &&
                                         entry.degree() >
                                             ya.box_count() - ypi.box_count() - 2) {
                                  fail(c, witness);
                              }
                          }
                      }
                  });
    }
}

void suite_sumrule(int r, int p, std::vector<Check>& checks) {
    for (int r2 = 1; r2 <= r; ++r2)
        for (int p2 = 0; p2 <= p; ++p2)
            run_check(checks,
                      "sum rule r=" + std::to_string(r2) + ", p=" + std::to_string(p2),
                      [&](Check& c) {
                          SumRuleReport rep = sum_rule(r2, p2);
                          if (!rep.equal)
                              fail(c, "lhs " + rep.lhs.str() + ", rhs " + rep.rhs.str());
                      });
    for (int r2 = 1; r2 <= r; ++r2)
        run_check(checks, "component sum at tau=1 r=" + std::to_string(r2), [&](Check& c) {
            Rational total = 0;
            for (const Matching& pi : enumerate_matchings(r2))
                total += psi(pi).evaluate(Rational(1));
            Rational chain = psi(Matching::unit_chain(r2 + 1)).evaluate(Rational(1));
            if (total != chain)
                fail(c, format_rational(total) + " vs " + format_rational(chain));
        });
}

void suite_zeileq(int r, int trials, std::vector<Check>& checks) {
    for (int r2 = 1; r2 <= r; ++r2)
        run_check(checks,
                  "rational identity r=" + std::to_string(r2) + " (" +
                      std::to_string(trials) + " trials)",
                  [&](Check&) { verify_zeileq(r2, trials); });
}

void suite_oracle(int n, std::vector<Check>& checks) {
    for (int size = 2; size <= n; ++size)
        run_check(checks, "eigenvector oracle n=" + std::to_string(size), [&](Check& c) {
            GroundState g = ground_state_tau1(size);
            for (std::size_t i = 0; i < g.basis.size(); ++i) {
                Rational expected = psi(g.basis[i]).evaluate(Rational(1));
                if (expected != g.values[i])
                    fail(c, g.basis[i].word() + ": polynomial " + format_rational(expected) +
                                ", kernel " + format_rational(g.values[i]));
            }
        });
}

void suite_nilp(int p, int r, std::vector<Check>& checks) {
    for (int p2 = 0; p2 <= p; ++p2)
        for (int r2 = 0; r2 <= r; ++r2)
            run_check(checks,
                      "path families p=" + std::to_string(p2) + ", r=" + std::to_string(r2),
                      [&](Check& c) {
                          CrossCheck cc = cross_check(p2, r2);
                          if (!cc.ok) fail(c, cc.failures.front());
                      });
}

int cmd_verify(const Settings& s, const std::string& suite, int n, int p, int r, int trials,
               std::ostream& out) {
    check_cap("n", n, s.max_n);
    check_cap("p", p, s.max_p);
    check_cap("r", r, s.max_r);
    std::vector<Check> checks;
    if (suite == "tl" || suite == "all") suite_tl(n, checks);
    if (suite == "coeffs" || suite == "all") suite_coeffs(n, checks);
    if (suite == "sumrule" || suite == "all") suite_sumrule(r, p, checks);
    if (suite == "zeileq" || suite == "all") suite_zeileq(r, trials, checks);
    if (suite == "oracle" || suite == "all") suite_oracle(n, checks);
    if (suite == "nilp" || suite == "all") suite_nilp(p, r, checks);

    int failed = 0;
    for (const Check& c : checks)
        if (!c.pass) ++failed;

    if (s.format == Format::json) {
        ordered_json j;
        j["suite"] = suite;
        j["n"] = n;
        j["p"] = p;
        j["r"] = r;
        j["trials"] = trials;
        auto list = ordered_json::array();
        for (const Check& c : checks) {
            ordered_json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            if (!c.pass) e["witness"] = c.witness;
            list.push_back(std::move(e));
        }
        j["checks"] = std::move(list);
        j["pass"] = failed == 0;
        emit_json(out, j);
    } else if (s.format == Format::csv) {
        csv_row(out, {"name", "pass", "witness"});
        for (const Check& c : checks)
            csv_row(out, {c.name, truefalse(c.pass), c.witness});
    } else {
        for (const Check& c : checks) {
            out << (c.pass ? "PASS  " : "FAIL  ") << c.name;
            if (!c.pass) out << "  [" << c.witness << "]";
            out << '\n';
        }
        if (failed)
            out << failed << " of " << checks.size() << " checks failed\n";
        else
            out << "all " << checks.size() << " checks passed\n";
    }
    return failed ? 3 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact loop-model ground states, lattice-path families and identity checks"};
    app.require_subcommand(1);

    Settings settings;
    bool as_json = false, as_csv = false;
    std::string tau_text = "symbolic";
    int threads = 0;

    auto* json_flag = app.add_flag("--json", as_json, "machine-readable JSON output");
    auto* csv_flag = app.add_flag("--csv", as_csv, "CSV output");
    json_flag->excludes(csv_flag);
    csv_flag->excludes(json_flag);
    app.add_option("--tau", tau_text,
                   "'symbolic' (default) or an exact rational such as 1 or -2/3");
    auto* threads_opt =
        app.add_option("--threads", threads, "worker threads (0 = hardware default)")
            ->check(CLI::NonNegativeNumber);
    auto* max_n_opt = app.add_option("--max-n", settings.max_n, "cap on the matching size n")
                          ->check(CLI::PositiveNumber);
    app.add_option("--max-p", settings.max_p, "cap on the nesting level p")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--max-r", settings.max_r, "cap on the pattern size r")
        ->check(CLI::NonNegativeNumber);

    int n = 1, p = 0, r = 1, p_max = 0, trials = 10;
    std::string pattern, family, method = "lgv", suite;

    auto* matchings = app.add_subcommand("matchings", "list all matchings of size n");
    matchings->add_option("--n", n, "half the number of matched points")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* ground = app.add_subcommand(
        "ground-state", "normalized kernel of the loop Hamiltonian at tau=1");
    ground->add_option("--n", n, "matching size")->required()->check(CLI::PositiveNumber);

    auto* psi_cmd =
        app.add_subcommand("psi", "ground-state component of a pattern as a tau polynomial");
    psi_cmd->add_option("--pattern", pattern, "balanced parenthesis word")->required();
    psi_cmd->add_option("--p", p, "nesting level (default 0)")->check(CLI::NonNegativeNumber);

    auto* psi_nested_cmd = app.add_subcommand(
        "psi-nested", "component of a pattern wrapped in p surrounding arches");
    psi_nested_cmd->add_option("--pattern", pattern, "balanced parenthesis word")->required();
    psi_nested_cmd->add_option("--p", p, "nesting level")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* sum_rule_cmd = app.add_subcommand(
        "sum-rule", "weighted component sum against the nested-chain component");
    sum_rule_cmd->add_option("--r", r, "pattern size")->required()->check(CLI::PositiveNumber);
    sum_rule_cmd->add_option("--p", p, "nesting level (default 0)")
        ->check(CLI::NonNegativeNumber);

    auto* sum_open_cmd =
        app.add_subcommand("sum-open", "open-boundary sum over admissible sequences");
    sum_open_cmd->add_option("--p", p, "nesting level")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sum_open_cmd->add_option("--r", r, "number of variables")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* nilp_cmd =
        app.add_subcommand("nilp", "weighted non-intersecting lattice-path counts");
    nilp_cmd->add_option("family", family, "path family, F (pinned) or G (free)")
        ->required()
        ->check(CLI::IsMember({"F", "G"}));
    nilp_cmd->add_option("--p", p, "region parameter")
        ->required()
        ->check(CLI::NonNegativeNumber);
    nilp_cmd->add_option("--r", r, "number of paths")
        ->required()
        ->check(CLI::NonNegativeNumber);
    nilp_cmd->add_option("--method", method, "brute, lgv or ct (default lgv)")
        ->check(CLI::IsMember({"brute", "lgv", "ct"}));

    auto* closed_cmd = app.add_subcommand(
        "closed-form", "product formulas for the free family at tau=1");
    closed_cmd->add_option("--p", p, "region parameter")
        ->required()
        ->check(CLI::NonNegativeNumber);
    closed_cmd->add_option("--r", r, "number of paths")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* interp_cmd = app.add_subcommand(
        "interpolate", "component of a pattern as a polynomial in the total size");
    interp_cmd->add_option("--pattern", pattern, "balanced parenthesis word")->required();
    auto* p_max_opt =
        interp_cmd->add_option("--p-max", p_max, "largest sampled nesting level")
            ->check(CLI::NonNegativeNumber);

    auto* verify_cmd =
        app.add_subcommand("verify", "run a named property suite and report each check");
    verify_cmd
        ->add_option("--suite", suite, "tl, coeffs, sumrule, zeileq, oracle, nilp or all")
        ->required()
        ->check(CLI::IsMember({"tl", "coeffs", "sumrule", "zeileq", "oracle", "nilp", "all"}));
    verify_cmd->add_option("--n", n, "largest matching size (default 4)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--p", p, "largest nesting level (default 2)")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--r", r, "largest pattern size (default 3)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--trials", trials, "random trials per size (default 10)")
        ->check(CLI::PositiveNumber);

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        settings.format = as_json ? Format::json : as_csv ? Format::csv : Format::human;
        if (tau_text != "symbolic") {
            settings.evaluate = true;
            settings.tau = parse_rational(tau_text);
        }
        if (max_n_opt->count() == 0) {
            if (const char* env = std::getenv("LOOPKIT_MAX_N")) {
                std::string text(env);
                std::size_t pos = 0;
                int value = 0;
                bool numeric = true;
                try {
                    value = std::stoi(text, &pos);
                } catch (...) {
                    numeric = false;
                }
                if (!numeric || pos != text.size() || value < 1)
                    throw ValidationError("LOOPKIT_MAX_N must be a positive integer, got \"" +
                                          text + "\"");
                settings.max_n = value;
            }
        }
        if (settings.max_n > kDefaultMaxN)
            err << "warning: n cap raised to " << settings.max_n << "; expect long runtimes\n";
        if (settings.max_p > kDefaultMaxP)
            err << "warning: p cap raised to " << settings.max_p << "; expect long runtimes\n";
        if (settings.max_r > kDefaultMaxR)
            err << "warning: r cap raised to " << settings.max_r << "; expect long runtimes\n";
        if (threads_opt->count() > 0) set_thread_count(threads);

        if (app.got_subcommand(matchings)) return cmd_matchings(settings, n, out);
        if (app.got_subcommand(ground)) return cmd_ground_state(settings, n, out);
        if (app.got_subcommand(psi_cmd)) return cmd_psi(settings, pattern, p, out);
        if (app.got_subcommand(psi_nested_cmd)) return cmd_psi(settings, pattern, p, out);
        if (app.got_subcommand(sum_rule_cmd)) return cmd_sum_rule(settings, r, p, out);
        if (app.got_subcommand(sum_open_cmd)) return cmd_sum_open(settings, p, r, out);
        if (app.got_subcommand(nilp_cmd))
            return cmd_nilp(settings, family, p, r, method, out);
        if (app.got_subcommand(closed_cmd)) return cmd_closed_form(settings, p, r, out);
        if (app.got_subcommand(interp_cmd))
            return cmd_interpolate(settings, pattern, p_max, p_max_opt->count() > 0, out);
        if (app.got_subcommand(verify_cmd)) {
            if (verify_cmd->count("--n") == 0) n = 4;
            if (verify_cmd->count("--p") == 0) p = 2;
            if (verify_cmd->count("--r") == 0) r = 3;
            return cmd_verify(settings, suite, n, p, r, trials, out);
        }
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const VerificationError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace loopkit::cli
