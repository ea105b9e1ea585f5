#pragma once

// Dense linear-algebra oracle for graded Betti numbers and Hilbert
// functions. Works degree by degree with explicit monomial bases and row
// reduction only; shares nothing with the basis-completion machinery it is
// used to cross-check.

#include <map>

#include "grakit/polynomial.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<grakit::Fp>>;

// Quotient ring R = S/I with a chosen vector-space basis per degree: the
// monomials of S_d not eliminated by the row-reduced ideal piece I_d.
class DenseRing {
public:
    DenseRing(const grakit::PolyContext& ctx, std::vector<grakit::Polynomial> ideal_gens);

    int dim(int d);
    const std::vector<grakit::Monomial>& monomials(int d);
    // the S-monomial representing the q-th quotient basis vector of R_d
    const grakit::Monomial& basis_monomial(int d, int q);

    // class of an S_d coordinate vector in the quotient basis of R_d
    std::vector<grakit::Fp> reduce(int d, std::vector<grakit::Fp> scoords);
    // coordinates of a homogeneous polynomial of degree d
    std::vector<grakit::Fp> coords(const grakit::Polynomial& f, int d);
    // multiplication R_d -> R_{d+deg m} on quotient coordinates
    std::vector<grakit::Fp> mult(int d, const grakit::Monomial& m,
                                 const std::vector<grakit::Fp>& qcoords);

    const grakit::PolyContext& ctx() const { return ctx_; }

private:
    struct Piece {
        std::vector<grakit::Monomial> mons;
        std::map<grakit::Monomial, int> index;
        Matrix rref;              // reduced rows of I_d in S_d coordinates
        std::vector<int> pivot;   // pivot column of each rref row
        std::vector<int> basis;   // non-pivot columns: the quotient basis
    };
    const Piece& piece(int d);

    grakit::PolyContext ctx_;
    std::vector<grakit::Polynomial> gens_;
    std::map<int, Piece> pieces_;
};

// Graded Betti numbers beta_{i,j} of coker(relations) for i <= max_i and
// j <= max_j, by explicit kernel computation per degree. The presentation
// must be minimal (all relation entries without constant term).
std::map<std::pair<int, int>, long long> dense_betti(
    const grakit::PolyContext& ctx, const std::vector<grakit::Polynomial>& ideal_gens,
    const grakit::FreeModule& cover, const std::vector<grakit::FreeElement>& relations,
    int max_i, int max_j);

}  // namespace oracle
