#pragma once

// Monomial staircases: the cells outside a monomial ideal, the corners
// (generators) and inner corners (relations), and the search for a
// staircase realizing a prescribed relation sequence.

#include <optional>
#include <vector>

#include "betti/betti.hpp"

namespace betti {

// Complement order ideal by rows of fixed y-exponent.  Row r has length
// rows[r - infinite_rows] for r >= infinite_rows (weakly decreasing, no
// trailing zeros) and is infinite for r < infinite_rows.  A positive
// infinite_rows = c encodes the common factor y^c of a non-Artinian ideal.
struct Staircase {
  long infinite_rows{0};
  std::vector<long> rows;

  long row_length(long r) const {  // -1 marks an infinite row
    if (r < infinite_rows) return -1;
    size_t i = static_cast<size_t>(r - infinite_rows);
    return i < rows.size() ? rows[i] : 0;
  }
  // Number of complement cells in degree d (always finite).
  long cells_in_degree(int d) const;
  std::vector<long> hilbert(int top) const;
  // Generator bidegrees (r, c): the corner monomials y^r x^c.
  std::vector<std::pair<long, long>> corners() const;
  // Relation bidegrees: inner corners between consecutive generators.
  std::vector<std::pair<long, long>> inner_corners() const;

  bool operator==(const Staircase& o) const {
    return infinite_rows == o.infinite_rows && rows == o.rows;
  }
};

// The staircase of the initial monomial ideal M(H) (normal pattern).
Staircase staircase_of_monomial_ideal(const OSequence& h);

// Every staircase with Hilbert function H (Artinian), deterministic order.
std::vector<Staircase> all_staircases(const OSequence& h);

// First staircase (deterministic order) whose generator and relation degree
// counts realize the given stratum; nullopt if none exists, which would
// contradict the monomial attainability of every admissible Betti sequence.
std::optional<Staircase> find_monomial_with_beta(const OSequence& h,
                                                 const BettiTriple& target);

}  // namespace betti
