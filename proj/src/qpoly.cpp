#include "wspindex/qpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace wspindex {

// --- GroupElement ---------------------------------------------------------

bool GroupElement::operator<(const GroupElement& o) const {
    return std::lexicographical_compare(phases.begin(), phases.end(),
                                        o.phases.begin(), o.phases.end());
}

GroupElement GroupElement::add(const GroupElement& o) const {
    if (phases.size() != o.phases.size())
        throw ShapeMismatchError("group elements of different rank");
    GroupElement out;
    out.phases.reserve(phases.size());
    for (std::size_t i = 0; i < phases.size(); ++i)
        out.phases.push_back((phases[i] + o.phases[i]).mod1());
    return out;
}

GroupElement GroupElement::inverse() const {
    GroupElement out;
    out.phases.reserve(phases.size());
    for (const auto& p : phases) out.phases.push_back((-p).mod1());
    return out;
}

long long GroupElement::order() const {
    long long m = 1;
    for (const auto& p : phases) m = std::lcm(m, p.den());
    return m;
}

bool GroupElement::is_identity() const {
    return std::all_of(phases.begin(), phases.end(),
                       [](const Rational& p) { return p.is_zero(); });
}

std::string GroupElement::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < phases.size(); ++i) {
        if (i) s += ", ";
        s += phases[i].str();
    }
    return s + ")";
}

const std::vector<GroupElement>& SymmetryGroup::all_elements() const {
    if (!elements_materialized)
        throw OrderCapExceededError(order, "group of order " + std::to_string(order) +
                                               " was not materialized (enumeration cap)");
    return elements;
}

bool is_symmetry(const QPoly& poly, const GroupElement& g) {
    if (g.phases.size() != poly.t) return false;
    for (const auto& mono : poly.monomials) {
        Rational dot(0);
        for (std::size_t i = 0; i < poly.t; ++i)
            dot += Rational(mono.exponents[i]) * g.phases[i];
        if (!dot.is_integer()) return false;
    }
    return true;
}

bool SymmetryGroup::contains(const GroupElement& g, const QPoly& poly) const {
    return is_symmetry(poly, g);
}

// --- parser ---------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
};

long long lex_uint(Lexer& lx, const char* what) {
    lx.skip_ws();
    if (lx.pos >= lx.text.size() || !std::isdigit((unsigned char)lx.text[lx.pos]))
        throw SyntaxError(lx.pos, std::string("expected ") + what);
    long long v = 0;
    while (lx.pos < lx.text.size() && std::isdigit((unsigned char)lx.text[lx.pos])) {
        v = v * 10 + (lx.text[lx.pos] - '0');
        if (v < 0) throw ArithmeticOverflow("integer literal too large");
        ++lx.pos;
    }
    return v;
}

// Variable = letter followed by digits, so "xy" lexes as x then y while "x1"
// stays one name. This keeps single-letter juxtaposition like x^2y natural.
std::optional<std::string> lex_var(Lexer& lx) {
    lx.skip_ws();
    if (lx.pos >= lx.text.size() || !std::isalpha((unsigned char)lx.text[lx.pos]))
        return std::nullopt;
    std::string name(1, lx.text[lx.pos++]);
    while (lx.pos < lx.text.size() && std::isdigit((unsigned char)lx.text[lx.pos]))
        name += lx.text[lx.pos++];
    return name;
}

struct TermAccumulator {
    Rational coefficient{1};
    std::map<std::string, long long> exponents;
};

} // namespace

ParsedPoly parse_poly(const std::string& text) {
    Lexer lx{text};
    std::vector<std::string> variables;
    std::map<std::string, std::size_t> var_index;
    std::vector<TermAccumulator> terms;

    auto intern = [&](const std::string& name) {
        auto it = var_index.find(name);
        if (it != var_index.end()) return it->second;
        var_index.emplace(name, variables.size());
        variables.push_back(name);
        return variables.size() - 1;
    };

    bool first_term = true;
    while (true) {
        if (lx.eof()) {
            if (first_term) throw SyntaxError(lx.pos, "empty polynomial");
            throw SyntaxError(lx.pos, "expected a term after '+'");
        }
        TermAccumulator term;
        bool saw_factor = false;

        // optional sign / coefficient
        bool negative = false;
        bool saw_coeff = false;
        while (lx.peek() == '-' ) { negative = !negative; ++lx.pos; }
        if (negative) term.coefficient = Rational(-1);
        if (std::isdigit((unsigned char)lx.peek())) {
            saw_coeff = true;
            long long num = lex_uint(lx, "coefficient");
            long long den = 1;
            if (lx.peek() == '/') {
                ++lx.pos;
                den = lex_uint(lx, "coefficient denominator");
                if (den == 0) throw SyntaxError(lx.pos, "zero coefficient denominator");
            }
            term.coefficient *= Rational(num, den);
            if (lx.peek() == '*') {
                ++lx.pos;
                if (!std::isalpha((unsigned char)lx.peek()))
                    throw SyntaxError(lx.pos, "expected a factor after '*'");
            }
        }

        while (true) {
            std::size_t at = lx.pos;
            lx.skip_ws();
            at = lx.pos;
            auto name = lex_var(lx);
            if (!name) {
                if (!saw_factor && !saw_coeff)
                    throw SyntaxError(at, "expected a monomial factor");
                break;
            }
            saw_factor = true;
            long long exponent = 1;
            if (lx.peek() == '^') {
                ++lx.pos;
                if (lx.peek() == '-')
                    throw SyntaxError(lx.pos, "negative exponent");
                exponent = lex_uint(lx, "exponent");
            }
            term.exponents[*name] += exponent;
            if (lx.peek() == '*') {
                ++lx.pos;
                if (!std::isalpha((unsigned char)lx.peek()))
                    throw SyntaxError(lx.pos, "expected a factor after '*'");
            }
        }

        if (!saw_factor && term.exponents.empty())
            throw SyntaxError(lx.pos, "constant terms are not allowed");
        if (term.coefficient.is_zero())
            throw SyntaxError(lx.pos, "zero coefficient makes a zero monomial");
        for (const auto& [name, e] : term.exponents) {
            if (e <= 0) throw SyntaxError(lx.pos, "factor with zero exponent");
            intern(name);
        }
        terms.push_back(std::move(term));
        first_term = false;

        if (lx.eof()) break;
        if (lx.peek() != '+')
            throw SyntaxError(lx.pos, "expected '+' between terms");
        ++lx.pos;
    }

    // assemble rows; combine duplicate exponent vectors
    ParsedPoly out;
    out.variables = variables;
    out.t = variables.size();
    std::map<std::vector<long long>, Rational> combined;
    std::vector<std::vector<long long>> row_order;
    for (const auto& term : terms) {
        std::vector<long long> row(out.t, 0);
        for (const auto& [name, e] : term.exponents) row[var_index[name]] = e;
        bool all_zero = std::all_of(row.begin(), row.end(), [](long long e) { return e == 0; });
        if (all_zero) throw SyntaxError(text.size(), "zero polynomial term");
        auto it = combined.find(row);
        if (it == combined.end()) {
            combined.emplace(row, term.coefficient);
            row_order.push_back(row);
        } else {
            it->second += term.coefficient;
            if (it->second.is_zero())
                throw SyntaxError(text.size(), "terms cancel to the zero monomial");
        }
    }
    for (const auto& row : row_order)
        out.monomials.push_back(Monomial{row, combined[row]});
    if (out.monomials.empty()) throw SyntaxError(text.size(), "zero polynomial");
    return out;
}

namespace {

std::string render_rows(const std::vector<std::string>& variables,
                        const std::vector<Monomial>& monomials) {
    std::ostringstream os;
    for (std::size_t r = 0; r < monomials.size(); ++r) {
        if (r) os << " + ";
        const auto& m = monomials[r];
        bool coeff_shown = !(m.coefficient == Rational(1));
        if (coeff_shown) {
            if (m.coefficient.is_integer())
                os << m.coefficient.num();
            else
                os << m.coefficient.num() << "/" << m.coefficient.den();
        }
        bool first = !coeff_shown;
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (!first) os << "*";
            os << variables[i];
            if (m.exponents[i] != 1) os << "^" << m.exponents[i];
            first = false;
        }
    }
    return os.str();
}

} // namespace

std::string render_poly(const ParsedPoly& poly) {
    return render_rows(poly.variables, poly.monomials);
}

std::string render_poly(const QPoly& poly) {
    return render_rows(poly.variables, poly.monomials);
}

// --- weights ----------------------------------------------------------------

QPoly compute_weights(const ParsedPoly& parsed) {
    std::size_t s = parsed.monomials.size();
    std::size_t t = parsed.t;
    std::vector<std::vector<Rational>> a(s, std::vector<Rational>(t));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < t; ++j)
            a[i][j] = Rational(parsed.monomials[i].exponents[j]);
    std::vector<Rational> ones(s, Rational(1));

    auto solved = solve_rational(a, ones);
    if (!solved.consistent)
        throw NoSolutionError("polynomial is not quasi-homogeneous: B*q = 1 has no solution");
    if (!solved.unique)
        throw WeightsNotUniqueError("fractional degrees are not uniquely determined (rank " +
                                    std::to_string(solved.rank) + " < " + std::to_string(t) + ")");
    for (std::size_t j = 0; j < t; ++j)
        if (solved.solution[j].sign() <= 0)
            throw NonPositiveWeightError("weight q_" + std::to_string(j + 1) + " = " +
                                         solved.solution[j].str() + " is not positive");

    QPoly out;
    out.t = t;
    out.variables = parsed.variables;
    out.monomials = parsed.monomials;
    out.weights = solved.solution;
    long long d = 1;
    for (const auto& q : out.weights) d = std::lcm(d, q.den());
    out.degree = d;
    for (const auto& q : out.weights)
        out.degree_numerators.push_back(q.num() * (d / q.den()));
    // gcd(d, k_1, ..., k_t) = 1 holds automatically since d is the lcm of
    // the reduced denominators; assert rather than renormalize.
    long long g = d;
    for (long long k : out.degree_numerators) g = std::gcd(g, k);
    if (g != 1)
        throw InternalInconsistencyError("degree data not coprime: gcd = " + std::to_string(g));
    return out;
}

QPoly make_qpoly(const std::string& text) { return compute_weights(parse_poly(text)); }

// --- nondegeneracy ------------------------------------------------------------

namespace {

// Atom shapes for invertible polynomials: x^a (Fermat head) or x^a*y (link).
struct MonomialShape {
    bool atomic = false;
    std::size_t lead = 0;   // variable with exponent >= 1 (the "x" above)
    long long lead_exp = 0;
    std::optional<std::size_t> tail; // the "y", exponent forced to 1
};

MonomialShape classify_monomial(const std::vector<long long>& row) {
    MonomialShape shape;
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) support.push_back(j);
    if (support.size() == 1) {
        shape.atomic = true;
        shape.lead = support[0];
        shape.lead_exp = row[support[0]];
        return shape;
    }
    if (support.size() == 2) {
        for (int pick = 0; pick < 2; ++pick) {
            std::size_t lead = support[pick], tail = support[1 - pick];
            if (row[tail] == 1) {
                shape.atomic = true;
                shape.lead = lead;
                shape.lead_exp = row[lead];
                shape.tail = tail;
                return shape;
            }
        }
    }
    return shape;
}

} // namespace

NondegeneracyReport check_nondegeneracy(const ParsedPoly& parsed) {
    NondegeneracyReport report;
    std::size_t s = parsed.monomials.size();
    std::size_t t = parsed.t;

    {
        std::vector<std::vector<Rational>> a(s, std::vector<Rational>(t));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < t; ++j)
                a[i][j] = Rational(parsed.monomials[i].exponents[j]);
        auto solved = solve_rational(a, std::vector<Rational>(s, Rational(1)));
        report.weights_unique = solved.consistent && solved.unique;
    }

    if (s != t) {
        report.singularity = Singularity::Assumed;
        report.detail = "not invertible (" + std::to_string(s) + " monomials, " +
                        std::to_string(t) + " variables); isolated singularity not certified";
        return report;
    }

    // Invertible case: try to split into Fermat / chain / loop atoms.
    std::vector<MonomialShape> shapes;
    for (const auto& m : parsed.monomials) {
        auto shape = classify_monomial(m.exponents);
        if (!shape.atomic) {
            report.singularity = Singularity::Assumed;
            report.detail = "monomial outside Fermat/chain/loop shapes; not certified";
            return report;
        }
        shapes.push_back(shape);
    }

    // Each variable must lead exactly one monomial; x^a*y with a tail makes an
    // edge lead -> tail. Chains are paths ending at a Fermat head, loops are
    // cycles. Anything else (branched targets) fails the admissibility
    // criterion and the singularity at the origin is non-isolated.
    std::vector<int> lead_count(t, 0);
    for (const auto& sh : shapes) lead_count[sh.lead]++;
    for (std::size_t j = 0; j < t; ++j) {
        if (lead_count[j] == 0) {
            report.singularity = Singularity::Refuted;
            report.detail = "variable " + parsed.variables[j] + " never leads a monomial";
            return report;
        }
        if (lead_count[j] > 1) {
            report.singularity = Singularity::Refuted;
            report.detail = "variable " + parsed.variables[j] + " leads two monomials";
            return report;
        }
    }

    std::vector<std::optional<std::size_t>> next(t);
    std::vector<long long> lead_exp(t, 0);
    for (const auto& sh : shapes) {
        next[sh.lead] = sh.tail;
        lead_exp[sh.lead] = sh.lead_exp;
    }
    std::vector<int> indegree(t, 0);
    for (std::size_t j = 0; j < t; ++j)
        if (next[j]) indegree[*next[j]]++;
    for (std::size_t j = 0; j < t; ++j)
        if (indegree[j] > 1) {
            report.singularity = Singularity::Refuted;
            report.detail = "variable " + parsed.variables[j] +
                            " is the tail of two monomials (branched chain)";
            return report;
        }

    // Fermat heads with exponent 1 mean the gradient does not vanish at 0.
    for (std::size_t j = 0; j < t; ++j)
        if (!next[j] && lead_exp[j] < 2) {
            report.singularity = Singularity::Refuted;
            report.detail = "linear monomial in " + parsed.variables[j] +
                            ": origin is not a singular point";
            return report;
        }

    // Walk the functional graph: every component must be a chain into a
    // Fermat head or a standalone loop.
    std::vector<int> state(t, 0); // 0 unvisited, 1 in progress, 2 done
    std::ostringstream atoms;
    bool first_atom = true;
    for (std::size_t start = 0; start < t; ++start) {
        if (state[start] != 0 || indegree[start] != 0) continue;
        // chain starting here
        std::size_t cur = start;
        std::size_t len = 0;
        while (true) {
            if (state[cur] == 1) break; // ran into a loop; handled below
            state[cur] = 2;
            ++len;
            if (!next[cur]) break;
            cur = *next[cur];
            if (state[cur] == 2) {
                report.singularity = Singularity::Refuted;
                report.detail = "chain feeds a variable already consumed";
                return report;
            }
        }
        if (!first_atom) atoms << " + ";
        atoms << (len == 1 ? "Fermat" : "chain") << "(" << len << ")";
        first_atom = false;
    }
    for (std::size_t start = 0; start < t; ++start) {
        if (state[start] != 0) continue;
        std::size_t cur = start, len = 0;
        while (state[cur] == 0) {
            state[cur] = 2;
            ++len;
            if (!next[cur]) {
                report.singularity = Singularity::Refuted;
                report.detail = "cycle candidate terminates unexpectedly";
                return report;
            }
            cur = *next[cur];
        }
        if (cur != start) {
            report.singularity = Singularity::Refuted;
            report.detail = "rho-shaped component (tail into a cycle)";
            return report;
        }
        if (!first_atom) atoms << " + ";
        atoms << "loop(" << len << ")";
        first_atom = false;
    }

    report.singularity = Singularity::Verified;
    report.detail = atoms.str();
    return report;
}

NondegeneracyReport check_nondegeneracy(const QPoly& poly) {
    ParsedPoly p;
    p.t = poly.t;
    p.variables = poly.variables;
    p.monomials = poly.monomials;
    return check_nondegeneracy(p);
}

// --- symmetry group -------------------------------------------------------

SymmetryGroup symmetry_group(const QPoly& poly, long long cap) {
    if (poly.weights.empty())
        throw ValidationError("weights must be computed before the symmetry group");
    IntMat b = poly.exponent_matrix();
    auto snf = smith_normal_form(b);
    if (snf.rank < poly.t)
        throw InfiniteGroupError("weights are not unique; the symmetry group is infinite");

    // theta = V * psi with psi_i in (1/d_i) Z mod 1, d_i the invariant factors.
    SymmetryGroup group;
    __int128 order = 1;
    for (long long d : snf.invariants) order *= d;
    if (order > INT64_MAX) throw ArithmeticOverflow("group order exceeds int64");
    group.order = (long long)order;

    std::size_t t = poly.t;
    auto element_from_psi = [&](const std::vector<Rational>& psi) {
        GroupElement g;
        g.phases.assign(t, Rational(0));
        for (std::size_t i = 0; i < t; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < t; ++j)
                acc += Rational(snf.v[i][j]) * psi[j];
            g.phases[i] = acc.mod1();
        }
        return g;
    };

    for (std::size_t i = 0; i < snf.invariants.size(); ++i) {
        if (snf.invariants[i] == 1) continue;
        std::vector<Rational> psi(t, Rational(0));
        psi[i] = Rational(1, snf.invariants[i]);
        group.generators.push_back(element_from_psi(psi));
        group.generator_orders.push_back(snf.invariants[i]);
    }

    if (group.order <= cap) {
        std::vector<long long> idx(snf.invariants.size(), 0);
        while (true) {
            std::vector<Rational> psi(t, Rational(0));
            for (std::size_t i = 0; i < snf.invariants.size(); ++i)
                psi[i] = Rational(idx[i], snf.invariants[i]);
            group.elements.push_back(element_from_psi(psi));
            std::size_t carry = 0;
            while (carry < idx.size()) {
                if (++idx[carry] < snf.invariants[carry]) break;
                idx[carry] = 0;
                ++carry;
            }
            if (carry == idx.size()) break;
        }
        std::sort(group.elements.begin(), group.elements.end());
        group.elements.erase(std::unique(group.elements.begin(), group.elements.end()),
                             group.elements.end());
        if ((long long)group.elements.size() != group.order)
            throw InternalInconsistencyError(
                "group enumeration produced " + std::to_string(group.elements.size()) +
                " elements, Smith form predicts " + std::to_string(group.order));
        group.elements_materialized = true;
    }
    return group;
}

bool phase_containment_holds(const QPoly& poly, const GroupElement& g) {
    if (g.phases.size() != poly.t) return false;
    for (std::size_t i = 0; i < poly.t; ++i) {
        // mu_{d/k_i} containment, with the reduced denominator of q_i
        if (!(g.phases[i] * Rational(poly.weights[i].den())).is_integer())
            return false;
    }
    return true;
}

} // namespace wspindex
