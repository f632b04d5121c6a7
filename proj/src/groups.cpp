#include "tannakit/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace tannakit {

namespace {

std::size_t max_group_order() {
    if (const char* env = std::getenv("TANNAKIT_MAX_GROUP_ORDER")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 64;
}

}  // namespace

std::size_t FiniteGroup::inv(std::size_t i) const {
    for (std::size_t j = 0; j < order; ++j)
        if (table[i][j] == identity) return j;
    throw std::logic_error("element without inverse in a validated group");
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i + 1; j < order; ++j)
            if (table[i][j] != table[j][i]) return false;
    return true;
}

std::size_t FiniteGroup::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < order; ++i)
        if (labels[i] == label) return i;
    throw std::invalid_argument("unknown element label: " + label);
}

GroupPtr validate_group(const std::vector<std::vector<std::size_t>>& table,
                        const std::vector<std::string>& labels, std::size_t identity,
                        const std::string& name) {
    std::size_t n = table.size();
    if (n == 0) throw GroupAxiomError("closure", {}, "empty table");
    if (n > max_group_order())
        throw std::invalid_argument("group order exceeds TANNAKIT_MAX_GROUP_ORDER");
    if (labels.size() != n) throw std::invalid_argument("labels/table size mismatch");
    if (identity >= n) throw std::invalid_argument("identity index out of range");
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw GroupAxiomError("closure", {i}, "table row has wrong length");
        for (std::size_t j = 0; j < n; ++j)
            if (table[i][j] >= n)
                throw GroupAxiomError("closure", {i, j},
                                      "product index out of range at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (table[identity][i] != i || table[i][identity] != i)
            throw GroupAxiomError("identity", {i}, "identity law fails at element " + std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw GroupAxiomError("associativity", {i, j, k},
                                          "associativity fails at (" + std::to_string(i) + "," +
                                              std::to_string(j) + "," + std::to_string(k) + ")");
    for (std::size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (std::size_t j = 0; j < n && !has_inverse; ++j)
            has_inverse = table[i][j] == identity && table[j][i] == identity;
        if (!has_inverse)
            throw GroupAxiomError("inverses", {i}, "no two-sided inverse for element " + std::to_string(i));
    }
    auto g = std::make_shared<FiniteGroup>();
    g->order = n;
    g->labels = labels;
    g->table = table;
    g->identity = identity;
    g->name = name;
    return g;
}

bool Subgroup::contains(std::size_t g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

std::size_t Subgroup::position(std::size_t g) const {
    auto it = std::lower_bound(members.begin(), members.end(), g);
    if (it == members.end() || *it != g) throw std::invalid_argument("element not in subgroup");
    return static_cast<std::size_t>(it - members.begin());
}

GroupPtr Subgroup::as_group() const {
    std::size_t n = members.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = parent->labels[members[i]];
        for (std::size_t j = 0; j < n; ++j) table[i][j] = position(parent->mul(members[i], members[j]));
    }
    return validate_group(table, labels, position(parent->identity), parent->name + "-sub");
}

Subgroup make_subgroup(const GroupPtr& g, std::vector<std::size_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup h{g, members};
    if (!h.contains(g->identity)) throw std::invalid_argument("subgroup must contain the identity");
    for (std::size_t a : members) {
        if (a >= g->order) throw std::invalid_argument("subgroup member out of range");
        if (!h.contains(g->inv(a))) throw std::invalid_argument("subgroup not closed under inverse");
        for (std::size_t b : members)
            if (!h.contains(g->mul(a, b))) throw std::invalid_argument("subgroup not closed under product");
    }
    return h;
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<std::size_t>& generators) {
    std::set<std::size_t> closure{g->identity};
    closure.insert(generators.begin(), generators.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> cur(closure.begin(), closure.end());
        for (std::size_t a : cur)
            for (std::size_t b : cur)
                if (closure.insert(g->mul(a, b)).second) grew = true;
    }
    return make_subgroup(g, {closure.begin(), closure.end()});
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (std::size_t x = 0; x < g.order; ++x) {
        std::size_t xi = g.inv(x);
        for (std::size_t a : h.members)
            if (!h.contains(g.mul(g.mul(x, a), xi))) return false;
    }
    return true;
}

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& h) {
    if (!is_normal(*g, h)) throw std::invalid_argument("quotient by a non-normal subgroup");
    std::vector<std::size_t> projection(g->order, g->order);
    std::vector<std::vector<std::size_t>> cosets;
    for (std::size_t x = 0; x < g->order; ++x) {
        if (projection[x] != g->order) continue;
        std::vector<std::size_t> coset;
        for (std::size_t a : h.members) coset.push_back(g->mul(x, a));
        std::sort(coset.begin(), coset.end());
        for (std::size_t y : coset) projection[y] = cosets.size();
        cosets.push_back(coset);
    }
    std::size_t q = cosets.size();
    std::vector<std::vector<std::size_t>> table(q, std::vector<std::size_t>(q));
    std::vector<std::string> labels(q);
    for (std::size_t i = 0; i < q; ++i) {
        labels[i] = "[" + g->labels[cosets[i][0]] + "]";
        for (std::size_t j = 0; j < q; ++j) table[i][j] = projection[g->mul(cosets[i][0], cosets[j][0])];
    }
    QuotientGroup out;
    out.group = validate_group(table, labels, projection[g->identity],
                               g->name.empty() ? "quotient" : g->name + "/" + std::to_string(h.order()));
    out.cosets = std::move(cosets);
    out.projection = std::move(projection);
    return out;
}

namespace {

GroupPtr cyclic(std::size_t n) {
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return validate_group(table, labels, 0, "C" + std::to_string(n));
}

// Labeling r^a s^b with b in {0,1}, index a + b*n, for the presentation
// r^n = s^2 = e, s r s = r^{-1}. Used for S3 (n=3) and D4 (n=4).
GroupPtr dihedral_like(std::size_t n, const std::string& name) {
    std::size_t order = 2 * n;
    auto idx = [n](std::size_t a, std::size_t b) { return a + b * n; };
    std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < 2; ++d) {
                    // (r^a s^b)(r^c s^d) = r^{a + c*(-1)^b} s^{b+d}
                    std::size_t shift = b == 0 ? c : (n - c) % n;
                    table[idx(a, b)][idx(c, d)] = idx((a + shift) % n, (b + d) % 2);
                }
    std::vector<std::string> labels(order);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            std::string s = a == 0 ? "" : (a == 1 ? "r" : "r" + std::to_string(a));
            if (b) s += "s";
            if (s.empty()) s = "e";
            labels[idx(a, b)] = s;
        }
    return validate_group(table, labels, 0, name);
}

// Quaternion group, presentation a^4 = e, b^2 = a^2, b a b^{-1} = a^{-1};
// element order e, a, a2, a3, b, ab, a2b, a3b.
GroupPtr quaternion() {
    auto idx = [](std::size_t i, std::size_t j) { return i + 4 * j; };
    std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    // (a^i b^j)(a^k b^l): move b^j past a^k (b a = a^{-1} b), then b^2 = a^2
                    std::size_t shift = j == 0 ? k : (4 - k) % 4;
                    std::size_t apow = (i + shift) % 4;
                    std::size_t bpow = j + l;
                    if (bpow == 2) {
                        apow = (apow + 2) % 4;
                        bpow = 0;
                    }
                    table[idx(i, j)][idx(k, l)] = idx(apow, bpow);
                }
    std::vector<std::string> labels = {"e", "a", "a2", "a3", "b", "ab", "a2b", "a3b"};
    return validate_group(table, labels, 0, "Q8");
}

}  // namespace

GroupPtr catalog(const std::string& name) {
    for (std::size_t n = 1; n <= 8; ++n)
        if (name == "C" + std::to_string(n)) return cyclic(n);
    if (name == "S3") return dihedral_like(3, "S3");
    if (name == "D4") return dihedral_like(4, "D4");
    if (name == "Q8") return quaternion();
    throw std::invalid_argument("unknown catalog group: " + name);
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (std::size_t n = 1; n <= 8; ++n) names.push_back("C" + std::to_string(n));
    names.push_back("S3");
    names.push_back("D4");
    names.push_back("Q8");
    return names;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<Subgroup> out;
    std::size_t n = g->order;
    // subsets of up to three generators; enough for every group of order <= 8
    std::vector<std::vector<std::size_t>> gens{{}};
    for (std::size_t a = 0; a < n; ++a) {
        gens.push_back({a});
        for (std::size_t b = a + 1; b < n; ++b) {
            gens.push_back({a, b});
            for (std::size_t c = b + 1; c < n; ++c) gens.push_back({a, b, c});
        }
    }
    for (const auto& gen : gens) {
        Subgroup h = generated_subgroup(g, gen);
        if (seen.insert(h.members).second) out.push_back(h);
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.members.size() != b.members.size() ? a.members.size() < b.members.size()
                                                    : a.members < b.members;
    });
    return out;
}

Subgroup center(const GroupPtr& g) {
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < g->order; ++a) {
        bool central = true;
        for (std::size_t b = 0; b < g->order && central; ++b) central = g->mul(a, b) == g->mul(b, a);
        if (central) members.push_back(a);
    }
    return make_subgroup(g, members);
}

}  // namespace tannakit
