#pragma once

#include <vector>

#include "nqs/phase_space/galois_field.hpp"

namespace nqs {

// Field-valued phase-space coordinate. Grid indices in CSV output and in
// W_{i,j} labels are these values plus one.
struct PhasePoint {
    int q = 0;
    int p = 0;
    bool operator==(const PhasePoint&) const = default;
};

struct PhaseSpaceLine {
    int striation = 0;
    int index = 0;  // c in a*q + b*p = c
    std::vector<PhasePoint> points;
};

using Striation = std::vector<PhaseSpaceLine>;

struct Direction {
    int a;
    int b;
};

// Striation s collects the lines a*q + b*p = c for fixed (a, b):
// s = 0 -> (1, 0), s = 1 -> (0, 1), s >= 2 -> (1, s - 1).
Direction striation_direction(const GaloisField& f, int s);

// N + 1 striations of N lines each; line c of every striation holds its
// points sorted by (q, p).
std::vector<Striation> build_striations(const GaloisField& f);

}  // namespace nqs
