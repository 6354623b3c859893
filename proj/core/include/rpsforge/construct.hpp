#pragma once

// Builders for the imbalanced game families and their blow-ups.

#include "rpsforge/game.hpp"

#include <array>
#include <string>

namespace rps {

/// Objects R, P, S. R wins any multiset holding both R and S; P wins R/P
/// multisets; S wins P/S multisets.
GameRule imbalanced_rps3(unsigned players);
GameRule imbalanced_rps3(unsigned players, const std::array<std::string, 3>& labels);

/// Objects R', P', S'. R' wins whenever present; S' wins P'/S' multisets.
GameRule maximal_rps3(unsigned players);

/// Objects a, b. The less-chosen object wins; equal counts tie.
GameRule odd_one_out(unsigned players);

/// G #_l H for symmetric win/lose games with unique winning objects.
///
/// Objects are G's objects without `at`, followed by H's objects. Choices in
/// H count as `at` when G is evaluated; if `at` wins (or every player sits in
/// H) the H-players are ranked by H. H must be fully extended to G's player
/// count. Throws DomainError when the composite would need a winner set that
/// spans several objects (H ties with a mixed support while G-players lost).
GameRule symmetric_blowup(const GameRule& outer, ObjectId at, const GameRule& inner);

/// Imbalanced (m, 2k+1) game with the direct level rule. Objects are
/// R_1, P_1, ..., R_k, P_k, S; level 1 is the top.
GameRule imbalanced_rps(unsigned players, unsigned depth);

/// The same family built literally as imbalanced_rps3 #_S (imbalanced_rps3
/// #_S (...)), depth-1 times. Used as a composition oracle for imbalanced_rps.
GameRule iterated_blowup(unsigned players, unsigned depth);

}  // namespace rps
