#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cubix/gmap.hpp"

namespace cubix {

/// QGM v1 text format:
///   qgm 1
///   darts N
///   a0: d0 d1 ... dN-1
///   a1: ...
///   a2: ...
/// Values may wrap across lines; '#' starts a comment. The loader
/// validates and throws std::runtime_error with the report on failure.
QuadGMap load_qgm(std::istream& in);
QuadGMap load_qgm_file(const std::string& path);
std::string save_qgm(const QuadGMap& g);
void save_qgm_file(const QuadGMap& g, const std::string& path);

/// Reference-cycle files: one cycle per line, space-separated edge ids,
/// '#' comments.
std::vector<std::vector<int>> load_cycles(std::istream& in);
std::vector<std::vector<int>> load_cycles_file(const std::string& path);
std::string save_cycles(const std::vector<std::vector<int>>& cycles);
void save_cycles_file(const std::vector<std::vector<int>>& cycles, const std::string& path);

/// Flip-sequence files: lines of `<kind> <anchor_dart>`, kinds
/// b1|b1c|b2|b2c|b3, '#' comments.
struct FlipStep {
    std::string kind;
    Dart anchor;
};
std::vector<FlipStep> load_flip_sequence(std::istream& in);
std::vector<FlipStep> load_flip_sequence_file(const std::string& path);
std::string save_flip_sequence(const std::vector<FlipStep>& seq);
void save_flip_sequence_file(const std::vector<FlipStep>& seq, const std::string& path);

}  // namespace cubix
