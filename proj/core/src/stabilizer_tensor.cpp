#include "holowedge/stabilizer_tensor.hpp"

#include <stdexcept>

namespace holowedge {

namespace {

// Shift a Pauli on m sites onto sites offset..offset+m-1 of n sites.
Pauli embed(const Pauli& p, size_t n, size_t offset) {
    Pauli out(n);
    out.phase = p.phase;
    for (size_t i = 0; i < p.num_sites(); ++i) {
        out.x.set(offset + i, p.x.get(i));
        out.z.set(offset + i, p.z.get(i));
    }
    return out;
}

}  // namespace

StabilizerTensor StabilizerTensor::from_code(std::vector<Pauli> stabilizers,
                                             Pauli logical_x, Pauli logical_z,
                                             std::string name) {
    StabilizerTensor t;
    t.name = std::move(name);
    size_t planar = logical_x.num_sites();
    t.legs = int(planar) + 1;
    for (const auto& s : stabilizers)
        t.state_gens.push_back(embed(s, planar + 1, 1));
    Pauli xg = embed(logical_x, planar + 1, 1);
    xg.x.set(0, true);
    Pauli zg = embed(logical_z, planar + 1, 1);
    zg.z.set(0, true);
    t.state_gens.push_back(xg);
    t.state_gens.push_back(zg);
    t.code_stabilizers = std::move(stabilizers);
    t.logical_x = std::move(logical_x);
    t.logical_z = std::move(logical_z);
    t.validate();
    return t;
}

StabilizerTensor StabilizerTensor::five_qubit() {
    std::vector<Pauli> stabs = {
        Pauli::from_string("XZZXI"),
        Pauli::from_string("IXZZX"),
        Pauli::from_string("XIXZZ"),
        Pauli::from_string("ZXIXZ"),
    };
    return from_code(stabs, Pauli::from_string("XXXXX"),
                     Pauli::from_string("ZZZZZ"), "five-qubit");
}

StabilizerTensor StabilizerTensor::steane() {
    // Cyclic [7,4] Hamming: weight-3 codewords are the Fano lines
    // {t, t+1, t+3}; the dual simplex code supplies the stabilizer rows.
    auto row = [](int t, char letter) {
        std::string s(7, 'I');
        for (int q = 0; q < 7; ++q) s[q] = letter;
        s[t % 7] = s[(t + 1) % 7] = s[(t + 3) % 7] = 'I';
        return Pauli::from_string(s);
    };
    std::vector<Pauli> stabs;
    for (int t = 0; t < 3; ++t) stabs.push_back(row(t, 'X'));
    for (int t = 0; t < 3; ++t) stabs.push_back(row(t, 'Z'));
    return from_code(stabs, Pauli::from_string("XXXXXXX"),
                     Pauli::from_string("ZZZZZZZ"), "steane");
}

StabilizerTensor StabilizerTensor::builtin(const std::string& name) {
    if (name == "five-qubit") return five_qubit();
    if (name == "steane") return steane();
    throw std::invalid_argument("unknown built-in tensor '" + name + "'");
}

void StabilizerTensor::validate() const {
    if (int(state_gens.size()) != legs)
        throw std::invalid_argument("tensor needs exactly 2N state generators");
    for (const auto& g : state_gens) {
        if (int(g.num_sites()) != legs)
            throw std::invalid_argument("state generator leg count mismatch");
        if (!g.is_hermitian())
            throw std::invalid_argument("state generator is not Hermitian");
    }
    for (size_t i = 0; i < state_gens.size(); ++i)
        for (size_t j = i + 1; j < state_gens.size(); ++j)
            if (!state_gens[i].commutes_with(state_gens[j]))
                throw std::invalid_argument("state generators do not commute");
    PauliBasis b = canonicalize(state_gens);
    if (b.rank() != size_t(legs))
        throw std::invalid_argument("state generators are dependent");
    if (b.contains_minus_identity())
        throw std::invalid_argument("state group contains -I");
    if (logical_x.commutes_with(logical_z))
        throw std::invalid_argument("logical pair must anticommute");
    for (const auto& s : code_stabilizers) {
        if (!s.commutes_with(logical_x) || !s.commutes_with(logical_z))
            throw std::invalid_argument("logicals must commute with code stabilizers");
    }
}

}  // namespace holowedge
