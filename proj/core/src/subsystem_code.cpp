#include "holowedge/subsystem_code.hpp"

#include <stdexcept>

#include "holowedge/network.hpp"

namespace holowedge {

std::vector<Pauli> SubsystemCode::bare_generators(const BitVec& s) const {
    std::vector<Pauli> gens(stabilizers.rows());
    for (size_t i = 0; i < bulk.size(); ++i) {
        if (s.get(i)) {
            gens.push_back(bulk[i].x);
            gens.push_back(bulk[i].z);
        }
    }
    return gens;
}

std::vector<Pauli> SubsystemCode::dressing_generators(const BitVec& s) const {
    std::vector<Pauli> gens(stabilizers.rows());
    for (size_t i = 0; i < bulk.size(); ++i) {
        if (!s.get(i)) {
            gens.push_back(bulk[i].x);
            gens.push_back(bulk[i].z);
        }
    }
    return gens;
}

std::vector<Pauli> SubsystemCode::centralizer_generators() const {
    std::vector<Pauli> gens(stabilizers.rows());
    for (const auto& pair : bulk) {
        gens.push_back(pair.x);
        gens.push_back(pair.z);
    }
    return gens;
}

BitVec SubsystemCode::bulk_set(const std::vector<size_t>& sites) const {
    BitVec b(bulk.size());
    for (size_t s : sites) {
        if (s >= bulk.size()) throw std::invalid_argument("bulk site out of range");
        b.set(s, true);
    }
    return b;
}

void SubsystemCode::validate() const {
    if (!stabilizers.is_abelian())
        throw std::invalid_argument("stabilizer group is not abelian");
    if (stabilizers.contains_minus_identity())
        throw std::invalid_argument("stabilizer group contains -I");
    for (size_t i = 0; i < bulk.size(); ++i) {
        if (bulk[i].x.num_sites() != n || bulk[i].z.num_sites() != n)
            throw std::invalid_argument("logical representative size mismatch");
        if (bulk[i].x.commutes_with(bulk[i].z))
            throw std::invalid_argument("logical pair must anticommute");
        for (size_t j = 0; j < bulk.size(); ++j) {
            if (i == j) continue;
            if (!bulk[i].x.commutes_with(bulk[j].x) ||
                !bulk[i].x.commutes_with(bulk[j].z) ||
                !bulk[i].z.commutes_with(bulk[j].z))
                throw std::invalid_argument("logical pairs of distinct sites must commute");
        }
        for (size_t r = 0; r < stabilizers.rank(); ++r) {
            if (!bulk[i].x.commutes_with(stabilizers.row(r)) ||
                !bulk[i].z.commutes_with(stabilizers.row(r)))
                throw std::invalid_argument("logicals must commute with stabilizers");
        }
    }
}

SubsystemCode SubsystemCode::five_qubit() {
    auto t = generate(Schlafli{4, 5}, 0);
    auto code = contract(t, StabilizerTensor::five_qubit());
    code.name = "five-qubit";
    return code;
}

SubsystemCode SubsystemCode::bacon_shor_22() {
    SubsystemCode c;
    c.n = 4;
    c.name = "bacon-shor-2x2";
    c.stabilizers = canonicalize(
        {Pauli::from_string("XXXX"), Pauli::from_string("ZZZZ")});
    c.bulk.push_back({Pauli::from_string("XIXI"), Pauli::from_string("ZZII")});
    c.bulk.push_back({Pauli::from_string("XXII"), Pauli::from_string("ZIZI")});
    c.validate();
    return c;
}

}  // namespace holowedge
