#pragma once

#include <array>
#include <string>

#include "psts/incidence.hpp"

namespace psts {

// m-weaved configuration: points S x C_m, lines over each base line with
// weight pattern (i, i, i+1) in all three rotations.
IncidenceStructure weave(int m, const IncidenceStructure& base);

// Same point set, weight pattern (i, i, i+eps). Rejected when the order of
// eps in C_m is < 3 (the construction needs at least 3 levels per component);
// eps = 1 coincides with weave().
IncidenceStructure weave_eps(int m, int eps, const IncidenceStructure& base);

// Convolution: lines over each base line with weights summing to eps.
IncidenceStructure convolve(const IncidenceStructure& base, const AbelianGroup& g,
                            const GroupElem& eps);

// m cyclically inscribed triangles closing through a permutation of C_3.
IncidenceStructure poly_triangle(int m, const std::array<int, 3>& gamma);

std::array<int, 3> parse_gamma(const std::string& name);  // "id", "t1", "t2", "s0", "s1", "s2"
std::string gamma_name(const std::array<int, 3>& gamma);

// Quotient by the fiber congruence (a,i) ~ (b,j) <=> a = b.
IncidenceStructure quotient_by_base(const IncidenceStructure& s);

// Adds each noncollinearity class as a new line; requires noncollinearity to
// be an equivalence with classes of size 3 and verifies the result is a
// linear space.
IncidenceStructure linear_completion(const IncidenceStructure& s);

// Bose construction over C_3^n: fibers plus the pair rule {x,y -> 2(x+y)}.
// Labeled to coincide with linear_completion(weave(3, ag(n))).
IncidenceStructure bose(int n);

IncidenceStructure single_line();
IncidenceStructure veblen();
IncidenceStructure pappus();
IncidenceStructure ag(int n);             // affine space AG(n,3) via blocks {u,v,2u+2v}
IncidenceStructure pg(int n);             // projective space PG(n,2)
IncidenceStructure slit(int n);           // AG(n,3) minus lines parallel to the last-coordinate hyperplane
IncidenceStructure grassmannian(int n);   // 2-subsets as points, 3-subsets as lines
IncidenceStructure miter();
IncidenceStructure mobius_8_3();          // AG(2,3) minus a point and its lines
IncidenceStructure fano();                // PG(2,2)
IncidenceStructure desargues();

// Catalog lookup by textual name: "single-line", "veblen", "pappus", "ag(2)",
// "pg(3)", "slit(2)", "grassmannian(5)", "miter", "mobius-8_3".
IncidenceStructure catalog(const std::string& name);

// Same labels and same lines (as label triples), regardless of point order.
bool labeled_equal(const IncidenceStructure& a, const IncidenceStructure& b);

}  // namespace psts
