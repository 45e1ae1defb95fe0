#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "rlse/algebra.hpp"
#include "rlse/events.hpp"

namespace rlse {

// Algebra file grammar (line oriented, '#' starts a comment):
//   header:  <kind> <size> <zero> <one>        kind in {rlse, oml}
//   names:   "names" <size labels>             optional
//   rlse body: plus matrix (size rows), then times matrix (size rows)
//   oml body:  meet matrix, join matrix, then one comp row
using AlgebraVariant = std::variant<RingLikeAlgebra, OrthoLattice>;

AlgebraVariant read_algebra(std::istream& in);
AlgebraVariant read_algebra_file(const std::string& path);
void write_algebra(std::ostream& out, const RingLikeAlgebra& alg);
void write_algebra(std::ostream& out, const OrthoLattice& lat);
void write_algebra_file(const std::string& path, const AlgebraVariant& alg);

// Event file grammar:
//   header:  "states" <labels>
//   body:    <event name> <|S| rationals as "num/den" or integers>
EventFamily read_events(std::istream& in);
EventFamily read_events_file(const std::string& path);
void write_events(std::ostream& out, const EventFamily& fam);
void write_events_file(const std::string& path, const EventFamily& fam);

}  // namespace rlse
