#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodgekit/hodge.hpp"

namespace hodge {

// Endpoints for the coefficient pairing: the exact value of
// integral (x-i)^a (x+i)^b dx over 0..i or -i..i.
enum class Endpoints { ZeroToI, MinusIToI };

// Never zero; over -i..i conjugation sends the (a,b) value to minus the (b,a)
// value, which is what makes the reality conditions below self-consistent.
Scalar integral_pairing(int a, int b, Endpoints e);

/* Split Hodge structure: a conj-symmetric bigrading together with components
   beta^{ab} of type (-a-1,-b-1) for a,b >= 0, subject to the reality
   condition conj . beta^{ab} . conj = beta^{ba}.  Every component strictly
   lowers the weight by a+b+2, so the total operator is nilpotent.  Zero
   components are never stored. */
struct SplitHodge {
    BigradedSpace grading;
    std::map<std::pair<int, int>, Matrix> beta;

    friend bool operator==(const SplitHodge& a, const SplitHodge& b) {
        return a.grading == b.grading && a.beta == b.beta;
    }
    friend bool operator!=(const SplitHodge& a, const SplitHodge& b) { return !(a == b); }
};

/* Split twistor structure: real weight grading with real components beta^{mn}
   lowering the weight by exactly m+n+2. */
struct SplitTwistor {
    WeightGradedSpace grading;
    std::map<std::pair<int, int>, Matrix> beta;

    friend bool operator==(const SplitTwistor& a, const SplitTwistor& b) {
        return a.grading == b.grading && a.beta == b.beta;
    }
    friend bool operator!=(const SplitTwistor& a, const SplitTwistor& b) { return !(a == b); }
};

/* Unipotent encoding: bigrading plus a single operator d with conj(d) = d^{-1}
   whose defect d - id strictly lowers both indices. */
struct FRep {
    BigradedSpace grading;
    Matrix d;

    friend bool operator==(const FRep& a, const FRep& b) {
        return a.grading == b.grading && a.d == b.d;
    }
    friend bool operator!=(const FRep& a, const FRep& b) { return !(a == b); }
};

struct SplitCheck {
    bool ok = true;
    std::string failure;  // includes the witnessing component or block
};

SplitCheck validate_shs(const SplitHodge& s);
SplitCheck validate_sts(const SplitTwistor& s);
SplitCheck validate_frep(const FRep& f);

// Decomposition of an ambient map into typed components relative to a
// bigrading: shift (dp,dq) -> ambient matrix.  The components sum back to m.
std::map<std::pair<int, int>, Matrix> typed_components(const BigradedSpace& g, const Matrix& m);

// exp of the beta pairing against the chosen endpoints:
// exp(sum_ab integral_pairing(a,b,e) * beta^{ab}).
Matrix beta_exponential(const SplitHodge& s, Endpoints e);

// W from the grading, F = exp(0..i pairing)(split F).
MixedHodge shs_to_mhs(const SplitHodge& s);

// d = exp(-i..i pairing); conj(d) = d^{-1} is asserted, not assumed.
FRep shs_to_frep(const SplitHodge& s);

// delta = log d split into typed components; beta^{ab} = delta-component
// divided by the -i..i pairing.  Rejects components outside the strict range.
SplitHodge frep_to_shs(const FRep& f);

struct ShsFromMhs {
    SplitHodge shs;
    Matrix phi;  // filtered isomorphism shs_to_mhs(shs) -> input; the identity here
};

/* The inverse equivalence: the unique beta on a split conj-symmetric bigrading
   refining gr^W inside the given space.  Solved stage by stage in the weight
   drop; each stage is an affine-linear system whose solution must be unique. */
ShsFromMhs mhs_to_shs(const MixedHodge& m);

SplitHodge tensor_shs(const SplitHodge& a, const SplitHodge& b);
SplitHodge dual_shs(const SplitHodge& a);
SplitHodge direct_sum_shs(const SplitHodge& a, const SplitHodge& b);
SplitTwistor tensor_sts(const SplitTwistor& a, const SplitTwistor& b);
SplitTwistor dual_sts(const SplitTwistor& a);
SplitTwistor direct_sum_sts(const SplitTwistor& a, const SplitTwistor& b);

/* Hom and Ext^1 as real dimensions.  graded_hom is the space of typed (0,0)
   (resp. weight-0) real maps; hom is its beta-compatible kernel; target is
   the space of coefficient families g^{ab} of total type (0,0); ext1 is the
   cokernel of f -> beta f - f alpha.  The four-term bookkeeping
   graded_hom - hom = target - ext1 is asserted. */
struct HomExt {
    size_t graded_hom_dim = 0;
    size_t hom_dim = 0;
    size_t target_dim = 0;
    size_t ext1_dim = 0;
    std::vector<Matrix> hom_basis;  // ambient matrices
    std::vector<std::map<std::pair<int, int>, Matrix>> ext1_basis;  // representative families
};

HomExt hom_ext_shs(const SplitHodge& a, const SplitHodge& b);
HomExt hom_ext_sts(const SplitTwistor& a, const SplitTwistor& b);

/* Derivation test for an algebra structure on the grading: every beta^{ab}
   must satisfy Leibniz against the product and kill the unit. */
struct LeibnizCheck {
    bool ok = true;
    std::pair<int, int> component{0, 0};  // failing beta component
    size_t left = 0, right = 0;           // witnessing basis pair
    bool unit_failure = false;
};

LeibnizCheck shs_algebra_check(const SplitHodge& s, const Matrix& product,
                               const std::vector<Scalar>& unit);

}  // namespace hodge
