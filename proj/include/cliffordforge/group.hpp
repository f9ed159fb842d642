#pragma once

#include "iterant.hpp"

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffordforge {

// Finite group with labelled elements and a permutation action on iterant
// slots. The action is stored anti-homomorphically: perm(g*h) equals
// perm(h) composed after perm(g). With act(g,v)[k] = v[perm(g)(k)] this makes
// act(g, act(h, v)) = act(g*h, v).
//
// Factories attach structure flags: make_cyclic marks the shift generator
// (used by the matrix bridge), and iterated products of order-2 groups carry
// the data needed for the conjugation anti-automorphism of the Clifford star.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::string> labels,
                int identity,
                std::vector<std::vector<int>> table,
                std::vector<Permutation> rep)
        : labels_(std::move(labels)),
          identity_(identity),
          table_(std::move(table)),
          rep_(std::move(rep)) {
        validate();
    }

    int order() const { return static_cast<int>(labels_.size()); }
    int degree() const { return rep_.empty() ? 0 : rep_[0].degree(); }
    int identity() const { return identity_; }

    int multiply(int g, int h) const { return table_.at(g).at(h); }

    int inverse(int g) const {
        for (int h = 0; h < order(); ++h)
            if (multiply(g, h) == identity_) return h;
        throw std::logic_error("FiniteGroup: missing inverse");
    }

    const std::string& label(int g) const { return labels_.at(g); }

    std::optional<int> find_label(const std::string& name) const {
        for (int g = 0; g < order(); ++g)
            if (labels_[g] == name) return g;
        return std::nullopt;
    }

    const Permutation& perm(int g) const { return rep_.at(g); }

    // Shift structure: set when the group is a cyclic group whose action on
    // n slots is the cyclic shift. Required by the matrix bridge.
    std::optional<int> shift_generator() const { return shift_generator_; }

    // Two-torsion structure: set when the group is an iterated direct
    // product of order-2 groups. word_parity(g) is the parity of the unique
    // expression of g as a product of the factor generators, and twist() is
    // the product of all factor generators.
    bool is_two_torsion_product() const { return two_torsion_; }
    const std::vector<int>& flip_generators() const { return flips_; }
    int word_parity(int g) const { return weights_.at(g) % 2; }
    int twist() const { return twist_; }

    bool same_structure(const FiniteGroup& o) const {
        return labels_ == o.labels_ && identity_ == o.identity_ &&
               table_ == o.table_ && rep_images() == o.rep_images();
    }

    std::string serialize() const {
        std::ostringstream os;
        os << "group\n";
        os << "order " << order() << "\n";
        os << "identity " << identity_ << "\n";
        os << "labels";
        for (const auto& l : labels_) os << " " << l;
        os << "\n";
        os << "table\n";
        for (int g = 0; g < order(); ++g) {
            for (int h = 0; h < order(); ++h) {
                if (h) os << " ";
                os << table_[g][h];
            }
            os << "\n";
        }
        os << "rep " << degree() << "\n";
        for (int g = 0; g < order(); ++g) {
            for (int k = 0; k < degree(); ++k) {
                if (k) os << " ";
                os << rep_[g](k);
            }
            os << "\n";
        }
        os << "end\n";
        return os.str();
    }

    static FiniteGroup deserialize(const std::string& text) {
        std::istringstream is(text);
        std::string tok;
        auto expect = [&](const std::string& want) {
            if (!(is >> tok) || tok != want)
                throw std::domain_error("FiniteGroup: bad serialization near '" + tok + "'");
        };
        expect("group");
        expect("order");
        int n = 0;
        if (!(is >> n) || n <= 0) throw std::domain_error("FiniteGroup: bad order");
        expect("identity");
        int id = 0;
        is >> id;
        expect("labels");
        std::vector<std::string> labels(n);
        for (auto& l : labels) is >> l;
        expect("table");
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (auto& row : table)
            for (auto& v : row) is >> v;
        expect("rep");
        int deg = 0;
        is >> deg;
        std::vector<Permutation> rep;
        for (int g = 0; g < n; ++g) {
            std::vector<int> im(deg);
            for (auto& v : im) is >> v;
            rep.emplace_back(std::move(im));
        }
        expect("end");
        return FiniteGroup(std::move(labels), id, std::move(table), std::move(rep));
    }

private:
    void validate() const {
        int n = order();
        if (n == 0) throw std::domain_error("FiniteGroup: empty group");
        if (identity_ < 0 || identity_ >= n)
            throw std::domain_error("FiniteGroup: identity out of range");
        if (static_cast<int>(table_.size()) != n ||
            static_cast<int>(rep_.size()) != n)
            throw std::domain_error("FiniteGroup: table/rep size mismatch");
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n)
                throw std::domain_error("FiniteGroup: ragged table");
            for (int v : row)
                if (v < 0 || v >= n)
                    throw std::domain_error("FiniteGroup: table entry out of range");
        }
        for (int g = 0; g < n; ++g) {
            if (multiply(identity_, g) != g || multiply(g, identity_) != g)
                throw std::domain_error("FiniteGroup: identity law fails");
            bool has_inverse = false;
            for (int h = 0; h < n; ++h)
                if (multiply(g, h) == identity_ && multiply(h, g) == identity_)
                    has_inverse = true;
            if (!has_inverse)
                throw std::domain_error("FiniteGroup: missing inverse");
        }
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                for (int k = 0; k < n; ++k)
                    if (multiply(multiply(g, h), k) != multiply(g, multiply(h, k)))
                        throw std::domain_error("FiniteGroup: not associative");
        int deg = degree();
        for (const auto& p : rep_)
            if (p.degree() != deg)
                throw std::domain_error("FiniteGroup: rep degree mismatch");
        if (rep_[identity_] != Permutation::identity(deg))
            throw std::domain_error("FiniteGroup: identity acts nontrivially");
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                if (rep_[multiply(g, h)] != rep_[h].after(rep_[g]))
                    throw std::domain_error("FiniteGroup: action is not anti-homomorphic");
    }

    std::vector<std::vector<int>> rep_images() const {
        std::vector<std::vector<int>> out;
        for (const auto& p : rep_) out.push_back(p.images());
        return out;
    }

    std::vector<std::string> labels_;
    int identity_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<Permutation> rep_;

    std::optional<int> shift_generator_;
    bool two_torsion_ = false;
    std::vector<int> flips_;
    std::vector<int> weights_;
    int twist_ = 0;

    friend std::shared_ptr<const FiniteGroup> make_cyclic(int);
    friend std::shared_ptr<const FiniteGroup> direct_product(
        const std::shared_ptr<const FiniteGroup>&,
        const std::shared_ptr<const FiniteGroup>&);
    friend std::shared_ptr<const FiniteGroup> group_ring(
        const std::shared_ptr<const FiniteGroup>&);
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Cyclic group of order n acting on n slots by the cyclic shift:
// act(s, v) = [v_n, v_1, ..., v_{n-1}] written in slot order, i.e.
// perm(s)(k) = (k-1) mod n.
inline GroupPtr make_cyclic(int n) {
    if (n <= 0) throw std::domain_error("make_cyclic: order must be positive");
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) {
        if (a == 0) labels.push_back("e");
        else if (n == 2) labels.push_back("h");
        else if (a == 1) labels.push_back("s");
        else labels.push_back("s" + std::to_string(a));
    }
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    std::vector<Permutation> rep;
    for (int a = 0; a < n; ++a) {
        std::vector<int> im(n);
        for (int k = 0; k < n; ++k) im[k] = ((k - a) % n + n) % n;
        rep.emplace_back(std::move(im));
    }
    auto g = std::make_shared<FiniteGroup>(std::move(labels), 0, std::move(table),
                                           std::move(rep));
    auto* m = const_cast<FiniteGroup*>(g.get());
    m->shift_generator_ = n > 1 ? 1 : 0;
    if (n <= 2) {
        m->two_torsion_ = true;
        if (n == 2) m->flips_ = {1};
        m->weights_.assign(n, 0);
        if (n == 2) m->weights_[1] = 1;
        m->twist_ = n - 1;
    }
    return g;
}

// Direct product with slot pairing k = i*deg(b) + j. Labels are "(x,y)".
inline GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    int na = a->order(), nb = b->order();
    int da = a->degree(), db = b->degree();
    std::vector<std::string> labels;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            labels.push_back("(" + a->label(i) + "," + b->label(j) + ")");
    std::vector<std::vector<int>> table(na * nb, std::vector<int>(na * nb));
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    table[i1 * nb + j1][i2 * nb + j2] =
                        a->multiply(i1, i2) * nb + b->multiply(j1, j2);
    std::vector<Permutation> rep;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            std::vector<int> im(da * db);
            for (int u = 0; u < da; ++u)
                for (int v = 0; v < db; ++v)
                    im[u * db + v] = a->perm(i)(u) * db + b->perm(j)(v);
            rep.emplace_back(std::move(im));
        }
    int id = a->identity() * nb + b->identity();
    auto g = std::make_shared<FiniteGroup>(std::move(labels), id, std::move(table),
                                           std::move(rep));
    auto* m = const_cast<FiniteGroup*>(g.get());
    if (a->is_two_torsion_product() && b->is_two_torsion_product()) {
        m->two_torsion_ = true;
        for (int f : a->flip_generators()) m->flips_.push_back(f * nb + b->identity());
        for (int f : b->flip_generators()) m->flips_.push_back(a->identity() * nb + f);
        m->weights_.resize(na * nb);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nb; ++j)
                m->weights_[i * nb + j] = a->weights_[i] + b->weights_[j];
        m->twist_ = a->twist() * nb + b->twist();
    }
    return g;
}

// Same group with the trivial action on one slot. Coefficients become
// plain scalars and the twisted product reduces to untwisted convolution.
inline GroupPtr group_ring(const GroupPtr& src) {
    int n = src->order();
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<Permutation> rep;
    for (int g = 0; g < n; ++g) {
        labels.push_back(src->label(g));
        for (int h = 0; h < n; ++h) table[g][h] = src->multiply(g, h);
        rep.push_back(Permutation::identity(1));
    }
    auto g = std::make_shared<FiniteGroup>(std::move(labels), src->identity(),
                                           std::move(table), std::move(rep));
    auto* m = const_cast<FiniteGroup*>(g.get());
    if (src->is_two_torsion_product()) {
        m->two_torsion_ = true;
        m->flips_ = src->flips_;
        m->weights_ = src->weights_;
        m->twist_ = src->twist_;
    }
    return g;
}

// Iterated product of n order-2 groups; n = 0 gives the trivial group.
inline GroupPtr make_two_torsion(int n) {
    GroupPtr g = make_cyclic(n == 0 ? 1 : 2);
    for (int k = 1; k < n; ++k) g = direct_product(g, make_cyclic(2));
    return g;
}

// act(g, v)[k] = v[perm(g)(k)]
inline Iterant act(const FiniteGroup& group, int g, const Iterant& v) {
    if (v.size() != group.degree())
        throw std::domain_error("act: iterant size does not match group degree");
    std::vector<GaussianRational> out;
    out.reserve(v.size());
    const Permutation& p = group.perm(g);
    for (int k = 0; k < v.size(); ++k) out.push_back(v[p(k)]);
    return Iterant(std::move(out));
}

} // namespace cliffordforge
