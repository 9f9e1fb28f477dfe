#pragma once

#include "easygram/categories.hpp"
#include "easygram/exact_matrix.hpp"
#include "easygram/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace easygram {

// Weakly decreasing positive row lengths; cells addressed (i, j), 1-based.
struct YoungDiagram {
    std::vector<int> rows;

    int size() const {
        int n = 0;
        for (int r : rows) n += r;
        return n;
    }
    // diagram with every row length doubled
    YoungDiagram doubled() const {
        YoungDiagram d;
        for (int r : rows) d.rows.push_back(2 * r);
        return d;
    }
};

// all diagrams with n boxes
std::vector<YoungDiagram> young_diagrams(int n);

// number of standard tableaux, by the hook length formula
BigInt standard_tableaux_count(const YoungDiagram& lambda);
// independent oracle: brute-force enumeration of standard fillings
BigInt standard_tableaux_count_brute(const YoungDiagram& lambda);

inline constexpr size_t kGramMemberBudget = 220;

// Gram matrix G(pi, sigma) = N^{|pi v sigma|} over the canonical member list
// of the category on the given word
ExactMatrix gram_matrix(const CategoryId& cat, const ColoredWord& word, int N);

// exact determinant by fraction-free elimination
BigInt gram_det_direct(const CategoryId& cat, const ColoredWord& word, int N);
// symbolic determinant in N; restricted to small member lists
IntPoly gram_det_direct_symbolic(const CategoryId& cat, const ColoredWord& word);

// product formula for the full and even-block lattices:
// prod over members of N! / (N - |pi|)!, zero when some |pi| > N
BigInt lindstrom_det(const CategoryId& cat, int k, int N);
IntPoly lindstrom_det_symbolic(const CategoryId& cat, int k);

// orthogonal-group Gram determinant over pairings, via Young diagram content
// products f_N(lambda) = prod (N + 2j - i - 1) raised to f^{2 lambda}
BigInt on_det(int k, int N);
IntPoly on_det_symbolic(int k);

// bistochastic variant over singletons-and-pairings, with the content shifted
// by one and the extra N^{a_k}, a_k = sum over members of (2|pi| - k)
BigInt bn_det(int k, int N);
IntPoly bn_det_symbolic(int k);

// ballot numbers f_{kr} = C(2k, k-r) - C(2k, k-r-1) and their differences
// d_{kr} = f_{kr} - f_{k,r+1}
std::pair<BigInt, BigInt> binomial_exponents(int k, int r);

// Chebyshev-type polynomials P_0 = 1, P_1 = X, P_{r+1} = X P_r - P_{r-1}
IntPoly chebyshev_like(int r);

// meander-style determinant formulas for the noncrossing families NC2, NC,
// NC12, NC_even; half-integer powers of N are tracked exactly and the result
// is asserted to be a polynomial in N
IntPoly difrancesco_det_symbolic(const CategoryId& cat, int k);
BigInt difrancesco_det(const CategoryId& cat, int k, int N);

// a_k = sum over the one-row members on k points of (2|pi| - k)
BigInt exponent_sum_a(const CategoryId& cat, int k);

// delta_pi(i) as a predicate: all blocks carry a constant index
bool delta_applies(const Partition& one_row, const std::vector<int>& idx);

// (pseudo-)inverse of the Gram matrix; exact Moore-Penrose in the singular case
ExactMatrix weingarten_matrix(const CategoryId& cat, const ColoredWord& word, int N);

// sum over member pairs of delta_pi(i) delta_sigma(j) W(pi, sigma)
Rational integrate_monomial(const CategoryId& cat, int N, const ColoredWord& exponents,
                            const std::vector<int>& rows, const std::vector<int>& cols);

// Tr(W_{kN} G_{ks}); moments of the s-truncated diagonal sum
Rational truncated_moment(const CategoryId& cat, int N, const ColoredWord& word, int s);

// sum over members of t^{|pi|}
Rational asymptotic_moment(const CategoryId& cat, const ColoredWord& word, const Rational& t);
RatPoly asymptotic_moment_poly(const CategoryId& cat, const ColoredWord& word);

// closed Stirling-number form of the truncated moments over the full lattice:
// sum_b s!/(s-b)! * (N-b)!/N! * S(k, b)
Rational sn_truncated_closed(int N, int s, int k);

// report of a factored determinant: list of (factor polynomial, exponent)
struct FactoredDet {
    std::vector<std::pair<IntPoly, BigInt>> factors;
    IntPoly expanded() const;
    BigInt evaluate(int N) const;
};

// factor lists behind the closed formulas (polynomials in N)
FactoredDet lindstrom_factors(const CategoryId& cat, int k);
FactoredDet on_factors(int k);
FactoredDet bn_factors(int k);
FactoredDet difrancesco_factors(const CategoryId& cat, int k);

} // namespace easygram
