#include "nqs/phase_space/quantum_net.hpp"

#include <set>
#include <stdexcept>

namespace nqs {

QuantumNet::QuantumNet(std::string id, int n, NetAssignment assignment)
    : id_(std::move(id)),
      field_(build_field(n)),
      striations_(build_striations(field_)),
      bases_(mub_tables(n)),
      assignment_(std::move(assignment))
{
    if (assignment_.size() != std::size_t(n + 1))
        throw std::invalid_argument("QuantumNet: need one assignment row per striation");
    std::set<int> used_bases;
    for (const auto& row : assignment_) {
        if (row.size() != std::size_t(n)) throw std::invalid_argument("QuantumNet: need one vector per line");
        const int b = row.front().basis;
        if (b < 0 || b > n || !used_bases.insert(b).second)
            throw std::invalid_argument("QuantumNet: each striation needs its own basis");
        std::set<int> used_vectors;
        for (const auto& la : row) {
            if (la.basis != b) throw std::invalid_argument("QuantumNet: lines of a striation must share a basis");
            if (la.vector < 0 || la.vector >= n || !used_vectors.insert(la.vector).second)
                throw std::invalid_argument("QuantumNet: basis vectors must be used once per striation");
        }
    }
    if (mub_defect(bases_) > 1e-10) throw std::invalid_argument("QuantumNet: bases are not mutually unbiased");

    for (int s = 0; s <= n; ++s) {
        std::vector<ComplexMatrix> ps;
        std::vector<int> lop(std::size_t(n) * n, -1);
        for (int c = 0; c < n; ++c) {
            const auto& la = assignment_[s][c];
            ps.push_back(ComplexMatrix::projector(bases_[la.basis][la.vector]));
            for (const auto& pt : striations_[s][c].points) lop[point_index(pt)] = c;
        }
        projectors_.push_back(std::move(ps));
        line_of_point_.push_back(std::move(lop));
    }

    for (std::size_t idx = 0; idx < std::size_t(n) * n; ++idx) {
        ComplexMatrix a = ComplexMatrix::identity(n) * Complex(-1.0);
        for (int s = 0; s <= n; ++s) a += projectors_[s][line_of_point_[s][idx]];
        point_matrices_.push_back(std::move(a));
    }
}

const ComplexMatrix& QuantumNet::line_projector(int striation, int line) const
{
    return projectors_.at(striation).at(line);
}

int QuantumNet::line_through(int striation, PhasePoint a) const
{
    if (a.q < 0 || a.p < 0 || a.q >= dim() || a.p >= dim())
        throw std::invalid_argument("QuantumNet: point is off the grid");
    return line_of_point_.at(striation)[point_index(a)];
}

const ComplexMatrix& QuantumNet::point_matrix(PhasePoint a) const
{
    if (a.q < 0 || a.p < 0 || a.q >= dim() || a.p >= dim())
        throw std::invalid_argument("QuantumNet: point is off the grid");
    return point_matrices_[point_index(a)];
}

namespace {

NetAssignment from_table(const std::vector<std::vector<std::pair<int, int>>>& t)
{
    NetAssignment out;
    for (const auto& row : t) {
        std::vector<LineAssignment> r;
        for (auto [b, v] : row) r.push_back({b, v});
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

// Rows are striations (1,0), (0,1), (1,1), (1,2), ... in field-index
// order; entries are (basis, vector) for lines c = 0, 1, ...

const QuantumNet& qubit_net()
{
    static const QuantumNet net("qubit", 2, from_table({
        {{1, 1}, {1, 0}},
        {{0, 1}, {0, 0}},
        {{2, 1}, {2, 0}},
    }));
    return net;
}

const QuantumNet& qutrit_net()
{
    static const QuantumNet net("qutrit", 3, from_table({
        {{1, 2}, {1, 1}, {1, 0}},
        {{0, 0}, {0, 1}, {0, 2}},
        {{3, 2}, {3, 1}, {3, 0}},
        {{2, 2}, {2, 1}, {2, 0}},
    }));
    return net;
}

const QuantumNet& two_qubit_net()
{
    static const QuantumNet net("two-qubit", 4, from_table({
        {{1, 3}, {1, 2}, {1, 1}, {1, 0}},
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
        {{2, 3}, {2, 2}, {2, 1}, {2, 0}},
        {{3, 3}, {3, 2}, {3, 1}, {3, 0}},
        {{4, 3}, {4, 2}, {4, 1}, {4, 0}},
    }));
    return net;
}

const QuantumNet& two_qubit_ns1_net()
{
    static const QuantumNet net("two-qubit-ns1", 4, from_table({
        {{1, 1}, {1, 0}, {1, 3}, {1, 2}},
        {{0, 2}, {0, 0}, {0, 3}, {0, 1}},
        {{2, 1}, {2, 0}, {2, 3}, {2, 2}},
        {{3, 1}, {3, 0}, {3, 3}, {3, 2}},
        {{4, 1}, {4, 0}, {4, 3}, {4, 2}},
    }));
    return net;
}

std::vector<std::string> net_names()
{
    return {"qubit", "qutrit", "two-qubit", "two-qubit-ns1"};
}

const QuantumNet& net_by_name(const std::string& name)
{
    if (name == "qubit") return qubit_net();
    if (name == "qutrit") return qutrit_net();
    if (name == "two-qubit") return two_qubit_net();
    if (name == "two-qubit-ns1") return two_qubit_ns1_net();
    std::string valid;
    for (const auto& n : net_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown net '" + name + "' (valid: " + valid + ")");
}

const QuantumNet& default_net(std::size_t dim)
{
    switch (dim) {
    case 2: return qubit_net();
    case 3: return qutrit_net();
    case 4: return two_qubit_net();
    default: throw std::invalid_argument("no quantum net for dimension " + std::to_string(dim));
    }
}

}  // namespace nqs
