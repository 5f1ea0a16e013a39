#include "jetvpa/lisse.hpp"

#include <stdexcept>

#include "jetvpa/diffalg.hpp"

namespace jetvpa {

LisseReport lisse_verdict(const GroebnerBasis& r_ideal, int max_jet_order) {
    int num_generators = 1;
    for (VarId v : r_ideal.variables) {
        if (v.level != 1)
            throw std::invalid_argument("lisse_verdict: ideal must live in level-1 variables");
        num_generators = std::max(num_generators, v.gen);
    }

    LisseReport report;
    report.base = krull_dimension(r_ideal);
    report.lisse = (report.base.krull_dimension == 0);
    report.caveat =
        "finite-order jet dimensions of non-reduced zero-dimensional schemes can be "
        "positive; the diagnostics do not affect the verdict";

    Presentation pres{num_generators, r_ideal.basis, {}};
    for (int order = 0; order <= max_jet_order; ++order) {
        JetIdeal jets = jet_ideal(pres, order);
        GroebnerBasis gb = buchberger(jets.generators, r_ideal.order, jets.variables);
        report.jet_diagnostics.push_back(JetDiagnostic{order, krull_dimension(gb)});
    }
    return report;
}

}  // namespace jetvpa
