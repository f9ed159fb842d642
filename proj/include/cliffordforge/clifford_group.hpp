#pragma once

#include "clifford.hpp"
#include "group_algebra.hpp"

#include <bit>

namespace cliffordforge {

// Witness that the n-fold iterated hat construction over the rationals sits
// inside the twisted algebra of C2^n acting on 2^n slots: generator k maps
// to w_k * g_k, where g_k flips factor k and w_k alternates sign with the
// parity of the earlier factor bits. The map is checked by tests, not
// assumed.
struct CliffordGroupModel {
    int n;
    GroupPtr group;
    std::vector<GroupAlgebraElement> generators;

    GroupAlgebraElement map_word(const std::vector<int>& word) const {
        GroupAlgebraElement r = GroupAlgebraElement::one(group);
        for (int k : word) {
            if (k < 1 || k > n)
                throw std::domain_error("CliffordGroupModel: generator index out of range");
            r *= generators[k - 1];
        }
        return r;
    }

    GroupAlgebraElement map_element(const CliffordElement<RationalField>& x) const {
        GroupAlgebraElement r = GroupAlgebraElement::zero(group);
        for (const auto& [key, c] : x.terms())
            r += map_word(key).scaled(GaussianRational(c));
        return r;
    }
};

inline CliffordGroupModel clifford_as_group_algebra(int n) {
    if (n < 1) throw std::domain_error("clifford_as_group_algebra: n must be >= 1");
    CliffordGroupModel m;
    m.n = n;
    m.group = make_two_torsion(n);
    int deg = m.group->degree();
    const auto& flips = m.group->flip_generators();
    for (int k = 1; k <= n; ++k) {
        std::vector<GaussianRational> w(deg);
        for (int slot = 0; slot < deg; ++slot) {
            unsigned earlier_bits = static_cast<unsigned>(slot) >> (n - k + 1);
            bool negate = std::popcount(earlier_bits) % 2 == 1;
            w[slot] = GaussianRational(negate ? -1 : 1);
        }
        m.generators.push_back(
            GroupAlgebraElement::term(m.group, flips[k - 1], Iterant(std::move(w))));
    }
    return m;
}

} // namespace cliffordforge
