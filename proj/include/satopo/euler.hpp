#pragma once

#include <vector>

#include "satopo/circle.hpp"

namespace satopo {

enum class Flavor { LE, EQ, GE };

Flavor parse_flavor(const std::string& s);
const char* flavor_name(Flavor f);
/// Predicate on the sign of f - alpha (entry 0 of the sign vector).
SignPredicate flavor_predicate(Flavor f);

/// Cell counts of a cylindrical decomposition adapted to a family,
/// restricted to the cells where the predicate holds.
struct SweepStats {
    int points = 0;     // 0-cells on event lines
    int segments = 0;   // 1-cells on event lines
    int arcs = 0;       // 1-cells over open slabs
    int bands = 0;      // 2-cells
    int events = 0;     // number of event lines
    int chi_c() const { return points - segments - arcs + bands; }
};

/// Sweep in x. The sign vector handed to the predicate lists the sign of
/// every family member on the cell.
SweepStats sweep(const std::vector<BPoly>& family, const SignPredicate& in_set);
/// One sweep, several sets.
std::vector<SweepStats> sweep(const std::vector<BPoly>& family, const std::vector<SignPredicate>& sets);

/// Compactly supported Euler characteristic of a semi-algebraic set.
/// With transpose = true the sweep runs in y instead.
int chi_c(const std::vector<BPoly>& family, const SignPredicate& in_set, bool transpose = false);

/// Circle beyond which every curve of the family meets circles centred at
/// the returned centre transversally and no two curves meet. The centre is
/// drawn from a seeded list of small rationals.
Circle link_circle(const std::vector<BPoly>& family, unsigned seed = 0);

/// Euler characteristic of the link at infinity of the set.
int link_chi(const std::vector<BPoly>& family, const SignPredicate& in_set, unsigned seed = 0);

/// Euler characteristic of a closed set: chi_c + link.
int chi(const std::vector<BPoly>& family, const SignPredicate& in_set);

/// Shorthands for {f <= alpha}, {f = alpha}, {f >= alpha}.
int chi_c(const BPoly& f, const Rat& alpha, Flavor fl);
int chi(const BPoly& f, const Rat& alpha, Flavor fl);

/// Small rational base point number k of a seeded sequence.
std::pair<Rat, Rat> seeded_point(unsigned seed, unsigned k);

}  // namespace satopo
