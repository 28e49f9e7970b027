#pragma once
// Value generators for ternary sums: squares, triangular numbers, polygonal
// numbers p_m, second-kind polygonal pbar_m, and the generalized polynomial
// gp(c,d)(z) = c*z(z-1)/2 + d*z. Each generator carries a positive integer
// coefficient and a choice of index domain (N or Z).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tusv {

enum class Domain : std::uint8_t { naturals, integers };

struct Square {
    bool operator==(const Square&) const = default;
};
struct Triangular {
    bool operator==(const Triangular&) const = default;
};
struct Polygonal { // p_m(z) = (m-2)*z(z-1)/2 + z, m >= 3
    long long m;
    bool operator==(const Polygonal&) const = default;
};
struct SecondPolygonal { // pbar_m(z) = p_m(-z), m >= 3
    long long m;
    bool operator==(const SecondPolygonal&) const = default;
};
struct GenPoly { // c*z(z-1)/2 + d*z, c,d >= 1
    long long c, d;
    bool operator==(const GenPoly&) const = default;
};
struct GenPolyMirror { // gp(c,d) evaluated at -z: c*z(z+1)/2 - d*z
    long long c, d;
    bool operator==(const GenPolyMirror&) const = default;
};
struct Zero { // constant 0 slot for two-term forms
    bool operator==(const Zero&) const = default;
};

using GeneratorKind =
    std::variant<Square, Triangular, Polygonal, SecondPolygonal, GenPoly, GenPolyMirror, Zero>;

struct Generator {
    GeneratorKind kind{Square{}};
    long long coeff = 1;
    Domain domain = Domain::naturals;
};

struct TernaryForm {
    std::array<Generator, 3> terms;
};

// Validating constructors. Throw std::invalid_argument on bad parameters
// (coeff < 1, m < 3, c or d < 1).
Generator make_square(long long coeff = 1, Domain dom = Domain::naturals);
Generator make_triangular(long long coeff = 1, Domain dom = Domain::naturals);
Generator make_polygonal(long long m, long long coeff = 1, Domain dom = Domain::naturals);
Generator make_second_polygonal(long long m, long long coeff = 1, Domain dom = Domain::naturals);
Generator make_genpoly(long long c, long long d, long long coeff = 1, Domain dom = Domain::naturals);
Generator make_zero();
void validate(const Generator& g);

// Exact value of the term at index z, overflow-checked (throws
// std::overflow_error). Naturals domain rejects z < 0 with
// std::invalid_argument. Values of GenPolyMirror may be negative.
long long eval(const Generator& g, long long z);

// gp-representation of a kind when one exists with c,d >= 1:
//   Polygonal(m)       -> (m-2, 1)
//   SecondPolygonal(m) -> (m-2, m-3) for m >= 4; none for m = 3 (d would be 0;
//                         pbar_3(z) = T_{z-1}, callers treat it as Triangular)
//   Square             -> (2, 1)
//   Triangular         -> (1, 1)
//   GenPoly(c,d)       -> (c, d)
// Everything else -> nullopt. Coefficient and domain carry over unchanged.
std::optional<GenPoly> to_genpoly(const Generator& g);

// Splits an Integers-domain gp generator into two Naturals-domain generators
// whose value sets union to the original: the positive branch gp(c,d) and the
// mirror branch gp(c,d)(-z) = c*C(z,2) + (c-d)z. The mirror is a plain
// GenPoly(c, c-d) when c > d, else a GenPolyMirror (its small-z values can be
// negative; value streams clip negatives).
std::pair<Generator, Generator> integer_domain_split(const Generator& g);

// Display string of gp(c,d) as a polynomial in `var`, matching the customary
// presentation: z(cz+e)/2 with e = 2d-c, halved only when c is odd, common
// factors pulled out front (gp(3,6) -> "3z(z+3)/2", gp(16,6) -> "2z(4z-1)").
std::string canonical_display(long long c, long long d, char var = 'z');

// Display of one term with its coefficient at a given variable slot, e.g.
// "2T_x", "y^2", "p5(y)", "z(z+3)/2". Integers-domain terms get an "@int"
// suffix.
std::string term_display(const Generator& g, char var);

// Pretty form string, slots x,y,z: "T_x+2T_y+z(z+3)/2".
std::string form_display(const TernaryForm& f);

// Distinct values of the term in [0, bound], ascending. Integers domain
// enumerates z = 0, 1, -1, 2, -2, ... and stops each direction independently
// once values exceed bound for good; negative values are clipped.
std::vector<long long> value_stream(const Generator& g, long long bound);

// Least value > 0 in the term's value set (scans past any leading zeros /
// clipped negatives). Zero kind has none -> nullopt.
std::optional<long long> min_positive_value(const Generator& g);

// True when d does not divide c; the classifier's standing hypothesis on gp.
bool gp_strict(long long c, long long d);

bool operator==(const Generator& a, const Generator& b);
bool operator==(const TernaryForm& a, const TernaryForm& b);

} // namespace tusv
