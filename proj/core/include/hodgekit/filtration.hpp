#pragma once

#include <map>
#include <optional>

#include "hodgekit/subspace.hpp"

namespace hodge {

enum class Direction { Increasing, Decreasing };

/* Filtration on k^n, stored only on its nontrivial index window.  Outside
   the stored window the filtration is constant (saturates at the extreme
   stored values), so at() is total.  Construction enforces monotone
   nesting; exhaustiveness / Hausdorff separation are properties reported by
   filtration_checks, not invariants. */
class FilteredSpace {
public:
    FilteredSpace() : ambient_(0), dir_(Direction::Increasing) {}
    FilteredSpace(size_t ambient, Direction dir, std::map<int, Subspace> steps);

    size_t ambient() const { return ambient_; }
    Direction direction() const { return dir_; }
    int lo() const;
    int hi() const;
    const std::map<int, Subspace>& steps() const { return steps_; }

    const Subspace& at(int r) const;

    bool is_real() const;
    FilteredSpace conj() const;

    // at'(r) = at(r + s); used for twists.
    FilteredSpace shifted(int s) const;

    friend bool operator==(const FilteredSpace& a, const FilteredSpace& b);
    friend bool operator!=(const FilteredSpace& a, const FilteredSpace& b) { return !(a == b); }

private:
    size_t ambient_;
    Direction dir_;
    std::map<int, Subspace> steps_;
};

// Value-equality over the union of windows (saturation included).
bool filtrations_equal(const FilteredSpace& a, const FilteredSpace& b);

struct FiltrationCheck {
    bool exhaustive;  // reaches the full space at the appropriate end
    bool hausdorff;   // reaches zero at the other end
    std::optional<int> exhaustive_witness;  // index at which fullness fails
    std::optional<int> hausdorff_witness;   // index at which separation fails
    int lo, hi;
};

FiltrationCheck filtration_checks(const FilteredSpace& f);

// Graded pieces (only indices with nonzero piece).  Increasing: at(r)/at(r-1);
// decreasing: at(r)/at(r+1).
std::map<int, Quotient> graded_pieces(const FilteredSpace& f);
std::map<int, size_t> graded_dims(const FilteredSpace& f);

// Filtration induced on a quotient (projection applied stepwise) and on a
// subspace (stepwise intersection, expressed in the subspace's own basis).
FilteredSpace induced_on_quotient(const FilteredSpace& f, const Matrix& projection);
FilteredSpace induced_on_subspace(const FilteredSpace& f, const Subspace& u);

/* Tensor and dual conventions.
     tensor:  F^p(V (x) U) = sum_a F^a V (x) F^{p-a} U   (and likewise for
              increasing filtrations with lower indices)
     dual:    F^p(V*) = ann F^{1-p} V   (decreasing)
              W_n(V*) = ann W_{-n-1} V  (increasing)                       */
FilteredSpace tensor_filtration(const FilteredSpace& a, const FilteredSpace& b);
FilteredSpace dual_filtration(const FilteredSpace& f);

}  // namespace hodge
