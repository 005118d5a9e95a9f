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

#pragma once

// The binary tetrahedral group: 24 unit quaternions {±1, ±i, ±j, ±k, (±1±i±j±k)/2}.
//
// Every element is written as the ordered product
//
//     g = (-1)^m i^n j^o l^(p + 2q),     l = -(1 + i + j + k)/2,
//
// and stored as the integer m + 2n + 4o + 8p + 16q. Register ordering on
// qubits is |q p o n m>, i.e. wire 0 holds m. Since l^3 = 1 the combination
// p = q = 1 never occurs, so only 0..23 are valid.
//
// The exact 2x2 matrices of the fundamental representation (rho_4) are the
// ground truth for everything in this library. Products are looked up in that
// table with exact half-integer Gaussian arithmetic.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace btg {

inline constexpr int kGroupOrder = 24;

struct GroupBits {
    int m = 0, n = 0, o = 0, p = 0, q = 0;
    friend bool operator==(const GroupBits &, const GroupBits &) = default;
};

class GroupIndex {
  public:
    constexpr GroupIndex() = default;
    // Throws Error(kEncoding) for values outside 0..23.
    explicit GroupIndex(int value);

    constexpr int value() const noexcept { return value_; }
    GroupBits bits() const noexcept;
    static GroupIndex from_bits(const GroupBits &b);

    friend constexpr bool operator==(GroupIndex a, GroupIndex b) noexcept { return a.value_ == b.value_; }
    friend constexpr auto operator<=>(GroupIndex a, GroupIndex b) noexcept { return a.value_ <=> b.value_; }

  private:
    int value_ = 0;
};

// All 24 elements in index order.
const std::array<GroupIndex, kGroupOrder> &all_elements();

GroupBits decode(int value);
int encode(const GroupBits &bits);

/// (re2 + i*im2) / 2. Entries of rho_4 matrices are all of this form.
struct HalfGaussian {
    int re2 = 0;
    int im2 = 0;
    friend bool operator==(const HalfGaussian &, const HalfGaussian &) = default;
    cplx value() const { return {re2 / 2.0, im2 / 2.0}; }
};

/// Row-major exact 2x2 matrix.
using ExactMat2 = std::array<HalfGaussian, 4>;

ExactMat2 exact_product(const ExactMat2 &a, const ExactMat2 &b);
ExactMat2 exact_adjoint(const ExactMat2 &a);
const ExactMat2 &fundamental_matrix(GroupIndex g);

GroupIndex multiply_oracle(GroupIndex g, GroupIndex h);
GroupIndex inverse_oracle(GroupIndex g);

/// Inverse from the mod-2 bit rules, no table lookup.
GroupIndex closed_form_inverse(GroupIndex g);

/// The published multiplication bit rules, evaluated mod 2 (not correct on their own).
GroupBits printed_multiply_rules(GroupIndex g, GroupIndex h);

/// Per output bit (m,n,o,p,q) a list of GF(2) monomials over the ten input
/// bits; bit k < 5 is bit k of g, bit k >= 5 is bit k-5 of h.
using CorrectionTable = std::array<std::vector<std::uint16_t>, 5>;
const CorrectionTable &frozen_multiply_correction();

/// Recomputes the correction from the oracle as the unique algebraic normal
/// form with no p*q monomials on either register.
CorrectionTable fit_multiply_correction();

/// printed rules XOR frozen correction.
GroupIndex closed_form_multiply(GroupIndex g, GroupIndex h);

int element_order(GroupIndex g);

struct Permutation24 {
    std::array<GroupIndex, kGroupOrder> image{};
    /// Cycles, each starting from its smallest element and following image.
    std::vector<std::vector<GroupIndex>> cycles() const;
    bool is_bijective() const;
};

/// h -> g*h
Permutation24 left_permutation(GroupIndex g);

/// Re Tr rho_4(g); one of {2, -2, 0, 1, -1}.
int re_trace(GroupIndex g);

enum class Irrep : int { kRho1 = 0, kRho2, kRho3, kRho4, kRho5, kRho6, kRho7 };
inline constexpr int kIrrepCount = 7;

int irrep_dimension(Irrep r);
Irrep irrep_from_index(int index);
std::string irrep_name(Irrep r);

cplx omega();  // exp(2 pi i / 3)
cplx eta();    // 1 + i

/// rho(g) as the ordered product of generator matrices.
CMatrix irrep(Irrep r, GroupIndex g);
cplx character(Irrep r, GroupIndex g);

struct ConjugacyClass {
    std::vector<GroupIndex> members;  // ascending
    int order = 1;
};

/// Classes in the column order of the standard character table:
/// {0}, {1}, order 4, order 6 (containing 9), order 6 (containing 17),
/// order 3 (containing 8), order 3 (containing 16).
const std::vector<ConjugacyClass> &conjugacy_classes();
int class_of(GroupIndex g);

using CharacterTable = std::array<std::array<cplx, 7>, kIrrepCount>;  // [irrep][class]

/// Traces of the irrep matrices evaluated on class representatives.
CharacterTable computed_character_table();

/// The character table exactly as published, including its misprinted
/// order-6 entries for rho_2, rho_3 and rho_6.
CharacterTable published_character_table();

struct CharacterMismatch {
    Irrep irrep;
    int class_index;
    cplx published;
    cplx computed;
};
std::vector<CharacterMismatch> published_character_mismatches(double tol = 1e-12);

struct GroupCheckReport {
    int inverse_matches = 0;   // of 24
    int multiply_matches = 0;  // of 576
    /// max |sum_C |C| chi_a(C) conj(chi_b(C)) / 24 - delta_ab| over irrep pairs
    double orthogonality_error = 0.0;
    /// Class sizes 1, 1, 6, 4, 4, 4, 4 with element orders 1, 2, 4, 6, 6, 3, 3.
    bool class_data_ok = false;
    int published_mismatches = 0;
    bool ok() const { return inverse_matches == 24 && multiply_matches == 576 && orthogonality_error < 1e-12 && class_data_ok; }
};

/// Closed forms against the oracles plus character-table consistency.
GroupCheckReport group_self_check();

/// Columns g,m,n,o,p,q,inverse,order,re_trace,class.
std::string element_table_csv();
/// 24 x 24 products, row g and column h holding g h.
std::string multiplication_table_csv();

}  // namespace btg
