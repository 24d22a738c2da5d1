// Copyright 2026 The Tritangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tritangle/pauli.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "tritangle/errors.hpp"

namespace tritangle {

namespace {

constexpr Cplx kImag{0.0, 1.0};

char axis_char(PauliAxis a) {
    switch (a) {
    case PauliAxis::I:
        return 'I';
    case PauliAxis::X:
        return 'x';
    case PauliAxis::Y:
        return 'y';
    case PauliAxis::Z:
        return 'z';
    }
    return '?';
}

PauliAxis axis_from_char(char c) {
    switch (c) {
    case 'I':
        return PauliAxis::I;
    case 'x':
        return PauliAxis::X;
    case 'y':
        return PauliAxis::Y;
    case 'z':
        return PauliAxis::Z;
    default:
        throw ValidationError(std::string("unknown Pauli letter '") + c + "' (expect I, x, y or z)");
    }
}

} // namespace

int PauliString::index() const {
    return 16 * static_cast<int>(letters[0]) + 4 * static_cast<int>(letters[1]) +
           static_cast<int>(letters[2]);
}

PauliString PauliString::from_index(int index) {
    if (index < 0 || index > 63) {
        throw ValidationError("Pauli index must be in 0..63; got " + std::to_string(index));
    }
    PauliString p;
    p.letters[0] = static_cast<PauliAxis>((index >> 4) & 3);
    p.letters[1] = static_cast<PauliAxis>((index >> 2) & 3);
    p.letters[2] = static_cast<PauliAxis>(index & 3);
    return p;
}

PauliString PauliString::from_letters(std::string_view text) {
    if (text.size() != 3) {
        throw ValidationError("Pauli string needs exactly 3 letters; got '" + std::string(text) + "'");
    }
    PauliString p;
    for (int q = 0; q < 3; ++q) {
        p.letters[q] = axis_from_char(text[q]);
    }
    return p;
}

std::string PauliString::str() const {
    std::string s(3, 'I');
    for (int q = 0; q < 3; ++q) {
        s[q] = axis_char(letters[q]);
    }
    return s;
}

Gate Gate::rotation(char axis, int sign, int qubit, bool pi) {
    if (axis != 'x' && axis != 'y') {
        throw ValidationError(std::string("rotation axis must be 'x' or 'y'; got '") + axis + "'");
    }
    if (sign != 1 && sign != -1) {
        throw ValidationError("rotation sign must be +1 or -1");
    }
    require_qubit(qubit);
    Gate g;
    g.kind = Kind::Rotation;
    g.axis = axis;
    g.sign = sign;
    g.qubit = qubit;
    g.pi = pi;
    return g;
}

Gate Gate::cnot(int control, int target) {
    require_qubit(control);
    require_qubit(target);
    if (control == target) {
        throw ValidationError("CNOT control and target must differ");
    }
    Gate g;
    g.kind = Kind::Cnot;
    g.control = control;
    g.target = target;
    return g;
}

const Matrix &pauli1(PauliAxis axis) {
    static const Matrix id = Matrix::Identity(2, 2);
    static const Matrix sx = (Matrix(2, 2) << 0, 1, 1, 0).finished();
    static const Matrix sy = (Matrix(2, 2) << 0, -kImag, kImag, 0).finished();
    static const Matrix sz = (Matrix(2, 2) << 1, 0, 0, -1).finished();
    switch (axis) {
    case PauliAxis::X:
        return sx;
    case PauliAxis::Y:
        return sy;
    case PauliAxis::Z:
        return sz;
    default:
        return id;
    }
}

Matrix pauli_matrix(const PauliString &p) {
    return tensor(pauli1(p.letters[0]), pauli1(p.letters[1]), pauli1(p.letters[2]));
}

Matrix gate_matrix(const Gate &g) {
    if (g.kind == Gate::Kind::Cnot) {
        const int cm = mask_of(g.control);
        const int tm = mask_of(g.target);
        Matrix u = Matrix::Zero(kDim, kDim);
        for (int i = 0; i < kDim; ++i) {
            const int j = (i & cm) ? (i ^ tm) : i;
            u(j, i) = 1.0;
        }
        return u;
    }
    const double angle = g.sign * (g.pi ? M_PI / 2.0 : M_PI / 4.0);
    const PauliAxis axis = g.axis == 'x' ? PauliAxis::X : PauliAxis::Y;
    const Matrix u2 =
        std::cos(angle) * Matrix::Identity(2, 2) - kImag * std::sin(angle) * pauli1(axis);
    const Matrix id = Matrix::Identity(2, 2);
    switch (g.qubit) {
    case 1:
        return tensor(u2, id, id);
    case 2:
        return tensor(id, u2, id);
    default:
        return tensor(id, id, u2);
    }
}

Matrix circuit_unitary(const Circuit &c) {
    Matrix u = Matrix::Identity(kDim, kDim);
    for (const Gate &g : c.gates) {
        u = gate_matrix(g) * u;
    }
    return u;
}

namespace {

void apply_rotation_inplace(const Gate &g, Vector &psi) {
    const double angle = g.sign * (g.pi ? M_PI / 2.0 : M_PI / 4.0);
    const Cplx c = std::cos(angle);
    const Cplx ms = -kImag * std::sin(angle);
    const Matrix &sigma = pauli1(g.axis == 'x' ? PauliAxis::X : PauliAxis::Y);
    const Cplx u00 = c + ms * sigma(0, 0);
    const Cplx u01 = ms * sigma(0, 1);
    const Cplx u10 = ms * sigma(1, 0);
    const Cplx u11 = c + ms * sigma(1, 1);
    const int m = mask_of(g.qubit);
    for (int i = 0; i < kDim; ++i) {
        if (i & m) {
            continue;
        }
        const Cplx a0 = psi(i);
        const Cplx a1 = psi(i | m);
        psi(i) = u00 * a0 + u01 * a1;
        psi(i | m) = u10 * a0 + u11 * a1;
    }
}

void apply_cnot_inplace(const Gate &g, Vector &psi) {
    const int cm = mask_of(g.control);
    const int tm = mask_of(g.target);
    for (int i = 0; i < kDim; ++i) {
        if ((i & cm) && !(i & tm)) {
            std::swap(psi(i), psi(i | tm));
        }
    }
}

} // namespace

Vector apply(const Circuit &c, const Vector &psi) {
    if (psi.size() != kDim) {
        throw ValidationError("apply expects an 8-amplitude state vector");
    }
    Vector out = psi;
    for (const Gate &g : c.gates) {
        if (g.kind == Gate::Kind::Rotation) {
            apply_rotation_inplace(g, out);
        } else {
            apply_cnot_inplace(g, out);
        }
    }
    return out;
}

Matrix apply_dm(const Circuit &c, const Matrix &rho) {
    if (rho.rows() != kDim || rho.cols() != kDim) {
        throw ValidationError("apply_dm expects an 8x8 density matrix");
    }
    const Matrix u = circuit_unitary(c);
    return u * rho * u.adjoint();
}

Vector apply_pauli(const PauliString &p, const Vector &psi) {
    if (psi.size() != kDim) {
        throw ValidationError("apply_pauli expects an 8-amplitude state vector");
    }
    int flip = 0;
    for (int q = 1; q <= kQubits; ++q) {
        const PauliAxis a = p.letters[q - 1];
        if (a == PauliAxis::X || a == PauliAxis::Y) {
            flip |= mask_of(q);
        }
    }
    Vector out = Vector::Zero(kDim);
    for (int i = 0; i < kDim; ++i) {
        Cplx phase = 1.0;
        for (int q = 1; q <= kQubits; ++q) {
            const int b = bit_of(i, q);
            switch (p.letters[q - 1]) {
            case PauliAxis::Y:
                phase *= b ? -kImag : kImag;
                break;
            case PauliAxis::Z:
                phase *= b ? -1.0 : 1.0;
                break;
            default:
                break;
            }
        }
        out(i ^ flip) += phase * psi(i);
    }
    return out;
}

double expectation(const Vector &psi, const PauliString &p) {
    const Cplx val = psi.dot(apply_pauli(p, psi));
    if (std::abs(val.imag()) > 1e-10) {
        std::ostringstream msg;
        msg << "expectation of " << p.str() << " has imaginary part " << val.imag();
        throw NumericalError(msg.str());
    }
    return val.real();
}

double expectation(const Matrix &rho, const PauliString &p) {
    if (rho.rows() != kDim || rho.cols() != kDim) {
        throw ValidationError("expectation expects an 8x8 density matrix");
    }
    return (rho * pauli_matrix(p)).trace().real();
}

namespace {

Gate parse_token(std::string_view tok) {
    if (tok.rfind("CNOT", 0) == 0) {
        if (tok.size() != 6 || !std::isdigit(static_cast<unsigned char>(tok[4])) ||
            !std::isdigit(static_cast<unsigned char>(tok[5]))) {
            throw ValidationError("bad CNOT token '" + std::string(tok) + "' (expect e.g. CNOT23)");
        }
        return Gate::cnot(tok[4] - '0', tok[5] - '0');
    }
    if (tok.empty() || (tok[0] != 'X' && tok[0] != 'Y')) {
        throw ValidationError("unrecognized gate token '" + std::string(tok) + "'");
    }
    const char axis = tok[0] == 'X' ? 'x' : 'y';
    std::size_t pos = 1;
    int sign = +1;
    if (pos < tok.size() && tok[pos] == 'b') {
        sign = -1;
        ++pos;
    }
    bool pi = false;
    if (tok.substr(pos, 2) == "pi") {
        pi = true;
        pos += 2;
    }
    if (pos + 1 != tok.size() || !std::isdigit(static_cast<unsigned char>(tok[pos]))) {
        throw ValidationError("unrecognized gate token '" + std::string(tok) + "'");
    }
    return Gate::rotation(axis, sign, tok[pos] - '0', pi);
}

} // namespace

Circuit parse_circuit(std::string_view text) {
    std::vector<Gate> written; // product order: leftmost applied last
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        written.push_back(parse_token(tok));
    }
    Circuit c;
    c.gates.assign(written.rbegin(), written.rend());
    return c;
}

std::string circuit_text(const Circuit &c) {
    std::string out;
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
        if (!out.empty()) {
            out += ' ';
        }
        if (it->kind == Gate::Kind::Cnot) {
            out += "CNOT";
            out += static_cast<char>('0' + it->control);
            out += static_cast<char>('0' + it->target);
        } else {
            out += it->axis == 'x' ? 'X' : 'Y';
            if (it->sign < 0) {
                out += 'b';
            }
            if (it->pi) {
                out += "pi";
            }
            out += static_cast<char>('0' + it->qubit);
        }
    }
    return out;
}

} // namespace tritangle
