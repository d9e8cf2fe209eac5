#pragma once

#include <string>
#include <vector>

#include "nqs/numerics/matrix.hpp"
#include "nqs/phase_space/galois_field.hpp"
#include "nqs/phase_space/geometry.hpp"
#include "nqs/phase_space/mub.hpp"

namespace nqs {

// Which tabulated vector sits on a line: bases[basis][vector].
struct LineAssignment {
    int basis;
    int vector;
};

// assignment[s][c] covers line c of striation s.
using NetAssignment = std::vector<std::vector<LineAssignment>>;

class QuantumNet {
public:
    // Validates shape, that every striation gets its own basis with each
    // vector used once, and that the bases are mutually unbiased to 1e-10.
    QuantumNet(std::string id, int n, NetAssignment assignment);

    const std::string& id() const { return id_; }
    int dim() const { return field_.order(); }
    const GaloisField& field() const { return field_; }
    const std::vector<Striation>& striations() const { return striations_; }
    const std::vector<Basis>& bases() const { return bases_; }
    const NetAssignment& assignment() const { return assignment_; }

    const ComplexMatrix& line_projector(int striation, int line) const;
    // Index of the line of striation s that passes through the point.
    int line_through(int striation, PhasePoint a) const;
    // Sum of the projectors of the N+1 lines through the point, minus I.
    const ComplexMatrix& point_matrix(PhasePoint a) const;

    std::size_t point_index(PhasePoint a) const { return std::size_t(a.q) * dim() + a.p; }
    PhasePoint point_at(std::size_t idx) const { return {int(idx / dim()), int(idx % dim())}; }

private:
    std::string id_;
    GaloisField field_;
    std::vector<Striation> striations_;
    std::vector<Basis> bases_;
    NetAssignment assignment_;
    std::vector<std::vector<ComplexMatrix>> projectors_;
    std::vector<std::vector<int>> line_of_point_;  // [s][point_index]
    std::vector<ComplexMatrix> point_matrices_;
};

// The net whose phase-point operators give the tabulated single-qubit
// W formulas (with a1 restored, see README).
const QuantumNet& qubit_net();
// The net matching the tabulated qutrit W formulas.
const QuantumNet& qutrit_net();
// The net matching the sixteen tabulated two-qubit W_{i,j} formulas.
const QuantumNet& two_qubit_net();
// The net whose origin operator is the tabulated A_(1,1) and whose line sets
// match the DWF expressions for the correlation matrix.
const QuantumNet& two_qubit_ns1_net();

// "qubit", "qutrit", "two-qubit", "two-qubit-ns1"
const QuantumNet& net_by_name(const std::string& name);
std::vector<std::string> net_names();
// The default net for a Hilbert-space dimension (two-qubit for 4).
const QuantumNet& default_net(std::size_t dim);

}  // namespace nqs
