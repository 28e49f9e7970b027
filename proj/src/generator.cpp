#include "tusv/generator.hpp"

#include <numeric>
#include <stdexcept>

namespace tusv {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("term value overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("term value overflow");
    return r;
}

// z(z-1)/2 resp. z(z+1)/2 without intermediate overflow: one factor is even.
long long half_prod(long long z, long long w) {
    return (z % 2 == 0) ? checked_mul(z / 2, w) : checked_mul(z, w / 2);
}

long long kind_value(const GeneratorKind& k, long long z) {
    struct V {
        long long z;
        long long operator()(Square) const { return checked_mul(z, z); }
        long long operator()(Triangular) const { return half_prod(z, checked_add(z, 1)); }
        long long operator()(Polygonal p) const {
            return checked_add(checked_mul(p.m - 2, half_prod(z, z - 1)), z);
        }
        long long operator()(SecondPolygonal p) const {
            return checked_add(checked_mul(p.m - 2, half_prod(z, checked_add(z, 1))), -z);
        }
        long long operator()(GenPoly g) const {
            return checked_add(checked_mul(g.c, half_prod(z, z - 1)), checked_mul(g.d, z));
        }
        long long operator()(GenPolyMirror g) const {
            return checked_add(checked_mul(g.c, half_prod(z, checked_add(z, 1))),
                               checked_mul(-g.d, z));
        }
        long long operator()(Zero) const { return 0; }
    };
    return std::visit(V{z}, k);
}

} // namespace

void validate(const Generator& g) {
    if (g.coeff < 1 && !std::holds_alternative<Zero>(g.kind)) bad("coefficient must be >= 1");
    if (auto* p = std::get_if<Polygonal>(&g.kind); p && p->m < 3) bad("polygonal order must be >= 3");
    if (auto* p = std::get_if<SecondPolygonal>(&g.kind); p && p->m < 3) bad("polygonal order must be >= 3");
    if (auto* p = std::get_if<GenPoly>(&g.kind); p && (p->c < 1 || p->d < 1)) bad("gp needs c >= 1 and d >= 1");
    if (auto* p = std::get_if<GenPolyMirror>(&g.kind); p && (p->c < 1 || p->d < 1)) bad("gp needs c >= 1 and d >= 1");
}

Generator make_square(long long coeff, Domain dom) {
    Generator g{Square{}, coeff, dom};
    validate(g);
    return g;
}

Generator make_triangular(long long coeff, Domain dom) {
    Generator g{Triangular{}, coeff, dom};
    validate(g);
    return g;
}

Generator make_polygonal(long long m, long long coeff, Domain dom) {
    Generator g{Polygonal{m}, coeff, dom};
    validate(g);
    return g;
}

Generator make_second_polygonal(long long m, long long coeff, Domain dom) {
    Generator g{SecondPolygonal{m}, coeff, dom};
    validate(g);
    return g;
}

Generator make_genpoly(long long c, long long d, long long coeff, Domain dom) {
    Generator g{GenPoly{c, d}, coeff, dom};
    validate(g);
    return g;
}

Generator make_zero() { return Generator{Zero{}, 1, Domain::naturals}; }

long long eval(const Generator& g, long long z) {
    if (g.domain == Domain::naturals && z < 0)
        throw std::invalid_argument("negative index under naturals domain");
    return checked_mul(g.coeff, kind_value(g.kind, z));
}

std::optional<GenPoly> to_genpoly(const Generator& g) {
    struct V {
        std::optional<GenPoly> operator()(Square) const { return GenPoly{2, 1}; }
        std::optional<GenPoly> operator()(Triangular) const { return GenPoly{1, 1}; }
        std::optional<GenPoly> operator()(Polygonal p) const { return GenPoly{p.m - 2, 1}; }
        std::optional<GenPoly> operator()(SecondPolygonal p) const {
            if (p.m == 3) return std::nullopt; // d would be 0; value set is T's
            return GenPoly{p.m - 2, p.m - 3};
        }
        std::optional<GenPoly> operator()(GenPoly g) const { return g; }
        std::optional<GenPoly> operator()(GenPolyMirror) const { return std::nullopt; }
        std::optional<GenPoly> operator()(Zero) const { return std::nullopt; }
    };
    return std::visit(V{}, g.kind);
}

std::pair<Generator, Generator> integer_domain_split(const Generator& g) {
    auto rep = to_genpoly(g);
    if (!rep || g.domain != Domain::integers)
        throw std::invalid_argument("integer_domain_split needs an Integers-domain gp-representable term");
    Generator pos{GenPoly{rep->c, rep->d}, g.coeff, Domain::naturals};
    Generator mirror;
    if (rep->c > rep->d)
        mirror = Generator{GenPoly{rep->c, rep->c - rep->d}, g.coeff, Domain::naturals};
    else
        mirror = Generator{GenPolyMirror{rep->c, rep->d}, g.coeff, Domain::naturals};
    return {pos, mirror};
}

bool gp_strict(long long c, long long d) { return c % d != 0; }

namespace {

std::string signed_term(long long e) {
    if (e == 0) return "";
    return (e > 0 ? "+" : "-") + std::to_string(e > 0 ? e : -e);
}

} // namespace

std::string canonical_display(long long c, long long d, char var) {
    // f(z) = (c z^2 + e z)/2 with e = 2d - c; c and e share parity.
    long long e = 2 * d - c;
    long long cc = c, ee = e, denom = 2;
    if (c % 2 == 0) { cc = c / 2; ee = e / 2; denom = 1; }
    long long g = ee == 0 ? cc : std::gcd(cc, ee < 0 ? -ee : ee);
    cc /= g;
    ee /= g;
    std::string v(1, var);
    std::string lead = g > 1 ? std::to_string(g) : "";
    std::string body;
    if (ee == 0)
        body = v + "^2";
    else
        body = v + "(" + (cc > 1 ? std::to_string(cc) : "") + v + signed_term(ee) + ")";
    return lead + body + (denom == 2 ? "/2" : "");
}

std::string term_display(const Generator& g, char var) {
    std::string coeff = g.coeff > 1 ? std::to_string(g.coeff) : "";
    std::string v(1, var);
    struct V {
        const std::string& coeff;
        const std::string& v;
        char var;
        std::string operator()(Square) const { return coeff + v + "^2"; }
        std::string operator()(Triangular) const { return coeff + "T_" + v; }
        std::string operator()(Polygonal p) const {
            return (coeff.empty() ? "" : coeff + "*") + "p" + std::to_string(p.m) + "(" + v + ")";
        }
        std::string operator()(SecondPolygonal p) const {
            return (coeff.empty() ? "" : coeff + "*") + "pbar" + std::to_string(p.m) + "(" + v + ")";
        }
        std::string operator()(GenPoly g) const {
            std::string s = canonical_display(g.c, g.d, var);
            return coeff.empty() ? s : coeff + "*[" + s + "]";
        }
        std::string operator()(GenPolyMirror g) const {
            std::string s = canonical_display(g.c, g.d, var);
            std::string body = (coeff.empty() ? s : coeff + "*[" + s + "]");
            return body + "@-" + v;
        }
        std::string operator()(Zero) const { return "0"; }
    };
    std::string s = std::visit(V{coeff, v, var}, g.kind);
    if (g.domain == Domain::integers) s += "@int";
    return s;
}

std::string form_display(const TernaryForm& f) {
    static constexpr char slots[3] = {'x', 'y', 'z'};
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (std::holds_alternative<Zero>(f.terms[i].kind)) continue;
        if (!out.empty()) out += "+";
        out += term_display(f.terms[i], slots[i]);
    }
    return out.empty() ? "0" : out;
}

namespace {

// Walk one index direction (z = start, start+sign, ...), applying fn to every
// value in [0, bound]. The value polynomials are convex, so once a value both
// exceeds bound and has started strictly increasing, the direction is done.
template <typename Fn>
void walk_direction(const Generator& g, long long bound, int sign, Fn&& fn) {
    long long prev = -1;
    bool have_prev = false;
    for (long long z = 0;; ++z) {
        long long v = checked_mul(g.coeff, kind_value(g.kind, sign * z));
        if (v >= 0 && v <= bound) fn(v);
        if (v > bound && have_prev && v > prev) break;
        if (std::holds_alternative<Zero>(g.kind)) break;
        prev = v;
        have_prev = true;
    }
}

} // namespace

std::vector<long long> value_stream(const Generator& g, long long bound) {
    if (bound < 0) throw std::invalid_argument("bound must be >= 0");
    std::vector<long long> out;
    walk_direction(g, bound, +1, [&](long long v) { out.push_back(v); });
    if (g.domain == Domain::integers) {
        std::vector<long long> neg;
        walk_direction(g, bound, -1, [&](long long v) { neg.push_back(v); });
        out.insert(out.end(), neg.begin(), neg.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<long long> min_positive_value(const Generator& g) {
    if (std::holds_alternative<Zero>(g.kind)) return std::nullopt;
    for (long long bound = 16;; bound *= 16) {
        for (long long v : value_stream(g, bound))
            if (v > 0) return v;
        if (bound > (1LL << 40)) return std::nullopt;
    }
}

bool operator==(const Generator& a, const Generator& b) {
    return a.coeff == b.coeff && a.domain == b.domain && a.kind == b.kind;
}

bool operator==(const TernaryForm& a, const TernaryForm& b) { return a.terms == b.terms; }

} // namespace tusv
