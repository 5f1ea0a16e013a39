#pragma once

#include <string>
#include <vector>

#include "jetvpa/groebner.hpp"

namespace jetvpa {

struct JetDiagnostic {
    int order;
    DimensionReport report;
};

struct LisseReport {
    DimensionReport base;
    bool lisse = false;  // dim of the base quotient is exactly 0
    std::vector<JetDiagnostic> jet_diagnostics;
    std::string caveat;
};

// Decides the C2-cofinite / lisse verdict on the base ideal: the quotient
// is finite-dimensional iff its variety is zero-dimensional, and the jet
// scheme of a zero-dimensional variety is zero-dimensional, so Krull
// dimension 0 of the base settles the verdict. Finite-order jet
// dimensions of a non-reduced zero-dimensional scheme can still be
// positive, so those are attached as diagnostics only.
LisseReport lisse_verdict(const GroebnerBasis& r_ideal, int max_jet_order = 2);

}  // namespace jetvpa
