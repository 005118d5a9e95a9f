// Copyright 2026 The btgates Authors
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

#include "group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace btg {

namespace {

constexpr ExactMat2 kMinusOne{{{-2, 0}, {0, 0}, {0, 0}, {-2, 0}}};
constexpr ExactMat2 kI{{{0, 2}, {0, 0}, {0, 0}, {0, -2}}};
constexpr ExactMat2 kJ{{{0, 0}, {-2, 0}, {2, 0}, {0, 0}}};
// l = -(1/2) [[eta, -eta], [eta*, eta*]]
constexpr ExactMat2 kL{{{-1, -1}, {1, 1}, {-1, 1}, {-1, 1}}};
constexpr ExactMat2 kIdentity{{{2, 0}, {0, 0}, {0, 0}, {2, 0}}};

ExactMat2 exact_power(const ExactMat2 &a, int k) {
    ExactMat2 r = kIdentity;
    for (int i = 0; i < k; ++i) r = exact_product(r, a);
    return r;
}

struct Tables {
    std::array<ExactMat2, kGroupOrder> fundamental{};
    std::array<std::array<int, kGroupOrder>, kGroupOrder> product{};
    std::array<int, kGroupOrder> inverse{};
    std::array<int, kGroupOrder> order{};
    std::vector<ConjugacyClass> classes;
    std::array<int, kGroupOrder> class_index{};
};

int lookup(const Tables &t, const ExactMat2 &m) {
    for (int k = 0; k < kGroupOrder; ++k)
        if (t.fundamental[k] == m) return k;
    throw Error(ErrorCode::kInternal, "product matrix not found in the rho_4 table");
}

Tables build_tables() {
    Tables t;
    for (int v = 0; v < kGroupOrder; ++v) {
        const GroupBits b = decode(v);
        ExactMat2 m = exact_power(kMinusOne, b.m);
        m = exact_product(m, exact_power(kI, b.n));
        m = exact_product(m, exact_power(kJ, b.o));
        m = exact_product(m, exact_power(kL, b.p + 2 * b.q));
        t.fundamental[v] = m;
    }
    for (int a = 0; a < kGroupOrder; ++a) {
        for (int b = 0; b < kGroupOrder; ++b)
            t.product[a][b] = lookup(t, exact_product(t.fundamental[a], t.fundamental[b]));
        t.inverse[a] = lookup(t, exact_adjoint(t.fundamental[a]));
    }
    for (int a = 0; a < kGroupOrder; ++a) {
        int k = 1;
        for (int x = a; x != 0; x = t.product[a][x]) ++k;
        t.order[a] = k;
    }

    std::vector<std::vector<int>> raw;
    std::array<bool, kGroupOrder> seen{};
    for (int g = 0; g < kGroupOrder; ++g) {
        if (seen[g]) continue;
        std::vector<int> members;
        for (int h = 0; h < kGroupOrder; ++h) {
            const int c = t.product[t.product[h][g]][t.inverse[h]];
            if (!seen[c]) {
                seen[c] = true;
                members.push_back(c);
            }
        }
        std::sort(members.begin(), members.end());
        raw.push_back(members);
    }
    for (int rep : {0, 1, 2, 9, 17, 8, 16}) {
        for (const auto &members : raw) {
            if (std::find(members.begin(), members.end(), rep) == members.end()) continue;
            ConjugacyClass c;
            for (int m : members) c.members.emplace_back(m);
            c.order = t.order[rep];
            for (int m : members) t.class_index[m] = static_cast<int>(t.classes.size());
            t.classes.push_back(std::move(c));
        }
    }
    return t;
}

const Tables &tables() {
    static const Tables t = build_tables();
    return t;
}

CMatrix to_complex(const ExactMat2 &m) {
    CMatrix r(2, 2);
    for (int k = 0; k < 4; ++k) r(k / 2, k % 2) = m[k].value();
    return r;
}

struct Generators {
    CMatrix minus_one, i, j, l;
};

Generators generators(Irrep r) {
    const cplx w = omega();
    auto scalar = [](cplx x) { return CMatrix::Constant(1, 1, x); };
    switch (r) {
        case Irrep::kRho1: return {scalar(1), scalar(1), scalar(1), scalar(1)};
        case Irrep::kRho2: return {scalar(1), scalar(1), scalar(1), scalar(w * w)};
        case Irrep::kRho3: return {scalar(1), scalar(1), scalar(1), scalar(w)};
        case Irrep::kRho4:
        case Irrep::kRho5:
        case Irrep::kRho6: {
            Generators g{to_complex(kMinusOne), to_complex(kI), to_complex(kJ), to_complex(kL)};
            if (r == Irrep::kRho5) g.l *= w * w;
            if (r == Irrep::kRho6) g.l *= w;
            return g;
        }
        case Irrep::kRho7: {
            CMatrix l = CMatrix::Zero(3, 3);
            l(0, 1) = l(1, 2) = l(2, 0) = 1;
            CMatrix i = CMatrix::Zero(3, 3), j = CMatrix::Zero(3, 3);
            i.diagonal() << -1, 1, -1;
            j.diagonal() << 1, -1, -1;
            return {CMatrix::Identity(3, 3), i, j, l};
        }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown irrep");
}

CMatrix matrix_power(const CMatrix &a, int k) {
    CMatrix r = CMatrix::Identity(a.rows(), a.cols());
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

int bit(std::uint16_t word, int k) { return (word >> k) & 1; }

}  // namespace

GroupIndex::GroupIndex(int value) : value_(value) {
    if (value < 0 || value >= kGroupOrder)
        throw Error(ErrorCode::kEncoding, "group index " + std::to_string(value) + " outside 0..23");
}

GroupBits GroupIndex::bits() const noexcept {
    return {value_ & 1, (value_ >> 1) & 1, (value_ >> 2) & 1, (value_ >> 3) & 1, (value_ >> 4) & 1};
}

GroupIndex GroupIndex::from_bits(const GroupBits &b) { return GroupIndex(encode(b)); }

const std::array<GroupIndex, kGroupOrder> &all_elements() {
    static const auto elements = [] {
        std::array<GroupIndex, kGroupOrder> e{};
        for (int v = 0; v < kGroupOrder; ++v) e[v] = GroupIndex(v);
        return e;
    }();
    return elements;
}

GroupBits decode(int value) {
    if (value < 0 || value > 31)
        throw Error(ErrorCode::kEncoding, "value " + std::to_string(value) + " is not a 5-bit register state");
    if (value >= kGroupOrder)
        throw Error(ErrorCode::kEncoding, "value " + std::to_string(value) + " has p = q = 1 (l^3 = 1)");
    return GroupIndex(value).bits();
}

int encode(const GroupBits &b) {
    for (int x : {b.m, b.n, b.o, b.p, b.q})
        if (x != 0 && x != 1) throw Error(ErrorCode::kEncoding, "register bits must be 0 or 1");
    if (b.p == 1 && b.q == 1) throw Error(ErrorCode::kEncoding, "p = q = 1 is not a valid encoding");
    return b.m + 2 * b.n + 4 * b.o + 8 * b.p + 16 * b.q;
}

ExactMat2 exact_product(const ExactMat2 &a, const ExactMat2 &b) {
    ExactMat2 r{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            int re = 0, im = 0;
            for (int k = 0; k < 2; ++k) {
                const HalfGaussian &x = a[2 * i + k];
                const HalfGaussian &y = b[2 * k + j];
                re += x.re2 * y.re2 - x.im2 * y.im2;
                im += x.re2 * y.im2 + x.im2 * y.re2;
            }
            if (re % 2 != 0 || im % 2 != 0)
                throw Error(ErrorCode::kInternal, "product left the half-integer Gaussian lattice");
            r[2 * i + j] = {re / 2, im / 2};
        }
    }
    return r;
}

ExactMat2 exact_adjoint(const ExactMat2 &a) {
    return {{{a[0].re2, -a[0].im2}, {a[2].re2, -a[2].im2}, {a[1].re2, -a[1].im2}, {a[3].re2, -a[3].im2}}};
}

const ExactMat2 &fundamental_matrix(GroupIndex g) { return tables().fundamental[g.value()]; }

GroupIndex multiply_oracle(GroupIndex g, GroupIndex h) {
    return GroupIndex(tables().product[g.value()][h.value()]);
}

GroupIndex inverse_oracle(GroupIndex g) { return GroupIndex(tables().inverse[g.value()]); }

GroupIndex closed_form_inverse(GroupIndex g) {
    const auto [m0, n0, o0, p0, q0] = g.bits();
    GroupBits r;
    r.m = (m0 + n0 + o0 + n0 * o0) & 1;
    r.n = (n0 * (1 - q0) + o0 * (p0 + q0)) & 1;
    r.o = (o0 * (1 - p0) + n0 * (p0 + q0)) & 1;
    r.p = q0;
    r.q = p0;
    return GroupIndex::from_bits(r);
}

GroupBits printed_multiply_rules(GroupIndex g, GroupIndex h) {
    const auto [m0, n0, o0, p0, q0] = g.bits();
    const auto [m1, n1, o1, p1, q1] = h.bits();
    (void)m0;
    (void)m1;
    GroupBits r;
    r.m = (o1 * n0 * (1 - p1) + (n1 * n0 + o1 * o0) * (1 - q1) + n1 * o0 * (p1 + q1)) & 1;
    r.n = (n1 + n0 * (1 - q1) + o0 * (p1 + q1)) & 1;
    r.o = (o1 + o0 * (1 - p1) + n0 * (p1 + q1)) & 1;
    r.p = (p0 * (1 - q1) * (1 - p1)) & 1;
    r.q = (q0 * (1 - q1) * (1 - p1)) & 1;
    return r;
}

const CorrectionTable &frozen_multiply_correction() {
    // Regenerated by fit_multiply_correction(); see group_test.
    static const CorrectionTable table{{
        {0x001, 0x020, 0x044, 0x04a, 0x054, 0x082, 0x08a, 0x08c, 0x092, 0x144, 0x182, 0x242, 0x244, 0x284},
        {0x048, 0x088, 0x090, 0x104, 0x202, 0x204},
        {0x048, 0x050, 0x090, 0x102, 0x104, 0x202},
        {0x100, 0x108, 0x110, 0x210},
        {0x108, 0x200, 0x208, 0x210},
    }};
    return table;
}

CorrectionTable fit_multiply_correction() {
    CorrectionTable out;
    for (int k = 0; k < 5; ++k) {
        std::vector<int> anf(1024, 0);
        for (GroupIndex g : all_elements()) {
            for (GroupIndex h : all_elements()) {
                const GroupBits printed = printed_multiply_rules(g, h);
                const GroupBits truth = multiply_oracle(g, h).bits();
                const std::array<int, 5> pb{printed.m, printed.n, printed.o, printed.p, printed.q};
                const std::array<int, 5> tb{truth.m, truth.n, truth.o, truth.p, truth.q};
                anf[g.value() + 32 * h.value()] = pb[k] ^ tb[k];
            }
        }
        // Moebius transform over GF(2).
        for (int v = 0; v < 10; ++v)
            for (int x = 0; x < 1024; ++x)
                if ((x >> v) & 1) anf[x] ^= anf[x ^ (1 << v)];
        for (int x = 0; x < 1024; ++x) {
            const bool pq_g = bit(x, 3) && bit(x, 4);
            const bool pq_h = bit(x, 8) && bit(x, 9);
            if (anf[x] && !pq_g && !pq_h) out[k].push_back(static_cast<std::uint16_t>(x));
        }
    }
    return out;
}

GroupIndex closed_form_multiply(GroupIndex g, GroupIndex h) {
    const GroupBits printed = printed_multiply_rules(g, h);
    const std::uint16_t inputs = static_cast<std::uint16_t>(g.value() | (h.value() << 5));
    std::array<int, 5> out{printed.m, printed.n, printed.o, printed.p, printed.q};
    const auto &corr = frozen_multiply_correction();
    for (int k = 0; k < 5; ++k)
        for (std::uint16_t mono : corr[k])
            if ((inputs & mono) == mono) out[k] ^= 1;
    return GroupIndex::from_bits({out[0], out[1], out[2], out[3], out[4]});
}

int element_order(GroupIndex g) { return tables().order[g.value()]; }

std::vector<std::vector<GroupIndex>> Permutation24::cycles() const {
    std::vector<std::vector<GroupIndex>> out;
    std::array<bool, kGroupOrder> seen{};
    for (int start = 0; start < kGroupOrder; ++start) {
        if (seen[start]) continue;
        std::vector<GroupIndex> cycle;
        for (int x = start; !seen[x]; x = image[x].value()) {
            seen[x] = true;
            cycle.emplace_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

bool Permutation24::is_bijective() const {
    std::array<bool, kGroupOrder> hit{};
    for (GroupIndex x : image) {
        if (hit[x.value()]) return false;
        hit[x.value()] = true;
    }
    return true;
}

Permutation24 left_permutation(GroupIndex g) {
    Permutation24 p;
    for (GroupIndex h : all_elements()) p.image[h.value()] = multiply_oracle(g, h);
    return p;
}

int re_trace(GroupIndex g) {
    const ExactMat2 &m = fundamental_matrix(g);
    return (m[0].re2 + m[3].re2) / 2;
}

int irrep_dimension(Irrep r) {
    static constexpr std::array<int, kIrrepCount> dims{1, 1, 1, 2, 2, 2, 3};
    return dims.at(static_cast<int>(r));
}

Irrep irrep_from_index(int index) {
    if (index < 0 || index >= kIrrepCount)
        throw Error(ErrorCode::kInvalidArgument, "irrep index " + std::to_string(index) + " outside 0..6");
    return static_cast<Irrep>(index);
}

std::string irrep_name(Irrep r) { return "rho" + std::to_string(static_cast<int>(r) + 1); }

cplx omega() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }
cplx eta() { return {1.0, 1.0}; }

CMatrix irrep(Irrep r, GroupIndex g) {
    const Generators gen = generators(r);
    const GroupBits b = g.bits();
    return matrix_power(gen.minus_one, b.m) * matrix_power(gen.i, b.n) * matrix_power(gen.j, b.o) *
           matrix_power(gen.l, b.p + 2 * b.q);
}

cplx character(Irrep r, GroupIndex g) { return irrep(r, g).trace(); }

const std::vector<ConjugacyClass> &conjugacy_classes() { return tables().classes; }

int class_of(GroupIndex g) { return tables().class_index[g.value()]; }

CharacterTable computed_character_table() {
    CharacterTable t{};
    const auto &classes = conjugacy_classes();
    for (int r = 0; r < kIrrepCount; ++r)
        for (std::size_t c = 0; c < classes.size(); ++c)
            t[r][c] = character(static_cast<Irrep>(r), classes[c].members.front());
    return t;
}

CharacterTable published_character_table() {
    const cplx w = omega(), w2 = w * w;
    return {{
        {1, 1, 1, 1, 1, 1, 1},
        {1, 1, 1, w, w2, w2, w},
        {1, 1, 1, w2, w, w, w2},
        {2, -2, 0, 1, 1, -1, -1},
        {2, -2, 0, w2, w, -w2, -w},
        {2, -2, 0, w2, w, -w, -w2},
        {3, 3, -1, 0, 0, 0, 0},
    }};
}

std::vector<CharacterMismatch> published_character_mismatches(double tol) {
    const CharacterTable computed = computed_character_table();
    const CharacterTable published = published_character_table();
    std::vector<CharacterMismatch> out;
    for (int r = 0; r < kIrrepCount; ++r)
        for (int c = 0; c < 7; ++c)
            if (std::abs(computed[r][c] - published[r][c]) > tol)
                out.push_back({static_cast<Irrep>(r), c, published[r][c], computed[r][c]});
    return out;
}

}  // namespace btg

namespace btg {

GroupCheckReport group_self_check() {
    GroupCheckReport r;
    for (GroupIndex g : all_elements()) {
        if (closed_form_inverse(g) == inverse_oracle(g)) ++r.inverse_matches;
        for (GroupIndex h : all_elements())
            if (closed_form_multiply(g, h) == multiply_oracle(g, h)) ++r.multiply_matches;
    }
    const auto &classes = conjugacy_classes();
    const CharacterTable chi = computed_character_table();
    for (int a = 0; a < kIrrepCount; ++a)
        for (int b = 0; b < kIrrepCount; ++b) {
            cplx s = 0.0;
            for (std::size_t c = 0; c < classes.size(); ++c)
                s += static_cast<double>(classes[c].members.size()) * chi[static_cast<std::size_t>(a)][c] *
                     std::conj(chi[static_cast<std::size_t>(b)][c]);
            r.orthogonality_error = std::max(r.orthogonality_error, std::abs(s / static_cast<double>(kGroupOrder) - (a == b ? 1.0 : 0.0)));
        }
    constexpr std::array<std::size_t, 7> sizes{1, 1, 6, 4, 4, 4, 4};
    constexpr std::array<int, 7> orders{1, 2, 4, 6, 6, 3, 3};
    r.class_data_ok = classes.size() == sizes.size();
    for (std::size_t c = 0; r.class_data_ok && c < classes.size(); ++c)
        r.class_data_ok = classes[c].members.size() == sizes[c] && classes[c].order == orders[c];
    r.published_mismatches = static_cast<int>(published_character_mismatches().size());
    return r;
}

std::string element_table_csv() {
    std::string out = "g,m,n,o,p,q,inverse,order,re_trace,class\n";
    for (GroupIndex g : all_elements()) {
        const GroupBits b = g.bits();
        out += std::to_string(g.value()) + ',' + std::to_string(b.m) + ',' + std::to_string(b.n) + ',' + std::to_string(b.o) + ',' +
               std::to_string(b.p) + ',' + std::to_string(b.q) + ',' + std::to_string(inverse_oracle(g).value()) + ',' +
               std::to_string(element_order(g)) + ',' + std::to_string(re_trace(g)) + ',' + std::to_string(class_of(g)) + '\n';
    }
    return out;
}

std::string multiplication_table_csv() {
    std::string out = "g";
    for (int h = 0; h < kGroupOrder; ++h) out += ',' + std::to_string(h);
    out += '\n';
    for (GroupIndex g : all_elements()) {
        out += std::to_string(g.value());
        for (GroupIndex h : all_elements()) out += ',' + std::to_string(multiply_oracle(g, h).value());
        out += '\n';
    }
    return out;
}

}  // namespace btg
