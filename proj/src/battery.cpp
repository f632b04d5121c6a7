#include "tannakit/battery.hpp"

#include <algorithm>
#include <set>

namespace tannakit {

std::vector<std::vector<Scalar>> pm1_characters(const GroupPtr& g, const FieldSpec& field) {
    std::size_t n = g->order;
    Scalar one(1, field), minus(-1, field);
    std::vector<std::vector<Scalar>> found;
    std::set<std::vector<std::string>> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Scalar> chi(n, one);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) chi[i] = minus;
        if (!chi[g->identity].is_one()) continue;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b) ok = chi[g->mul(a, b)] == chi[a] * chi[b];
        if (!ok) continue;
        std::vector<std::string> key;
        for (const auto& s : chi) key.push_back(s.str());
        if (seen.insert(key).second) found.push_back(chi);
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        std::size_t za = 0, zb = 0;
        for (const auto& s : a) za += s.is_one();
        for (const auto& s : b) zb += s.is_one();
        return za > zb;
    });
    return found;
}

ComodPtr character_comodule(const GroupPtr& g, const std::vector<Scalar>& values) {
    std::vector<Matrix> images;
    images.reserve(g->order);
    const FieldSpec& field = values.at(0).field();
    for (std::size_t i = 0; i < g->order; ++i) {
        Matrix m(1, 1, field);
        m.set(0, 0, values[i]);
        images.push_back(m);
    }
    return rep_from_matrices(g, images, field);
}

bool has_standard_rep(const GroupPtr& g) {
    return g->name == "S3" || g->name == "D4" || g->name == "Q8";
}

namespace {

std::vector<Matrix> two_generator_images(const GroupPtr& g, std::size_t n, const Matrix& mr,
                                         const Matrix& ms) {
    // element order is r^a s^b with index a + b*n (see groups.cpp)
    std::vector<Matrix> images;
    Matrix acc = Matrix::identity(mr.rows(), mr.field());
    std::vector<Matrix> rpow{acc};
    for (std::size_t a = 1; a < n; ++a) rpow.push_back(rpow.back() * mr);
    for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t a = 0; a < n; ++a) images.push_back(b == 0 ? rpow[a] : rpow[a] * ms);
    (void)g;
    return images;
}

}  // namespace

ComodPtr standard_rep(const GroupPtr& g, const FieldSpec& field) {
    if (g->name == "S3") {
        auto mr = Matrix::from_rows({{0, -1}, {1, -1}}, field);
        auto ms = Matrix::from_rows({{0, 1}, {1, 0}}, field);
        return rep_from_matrices(g, two_generator_images(g, 3, mr, ms), field);
    }
    if (g->name == "D4") {
        auto mr = Matrix::from_rows({{0, -1}, {1, 0}}, field);
        auto ms = Matrix::from_rows({{1, 0}, {0, -1}}, field);
        return rep_from_matrices(g, two_generator_images(g, 4, mr, ms), field);
    }
    if (g->name == "Q8") {
        // left multiplication on the basis 1, i, j, k
        auto ma = Matrix::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}, field);
        auto mb = Matrix::from_rows({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}, field);
        return rep_from_matrices(g, two_generator_images(g, 4, ma, mb), field);
    }
    throw std::invalid_argument("no standard representation catalogued for " + g->name);
}

std::vector<BatteryItem> group_battery(const GroupPtr& g, const FieldSpec& field) {
    std::vector<BatteryItem> battery;
    auto oG = function_algebra(g, field);
    battery.push_back({"I", trivial_comodule(oG, 1)});
    auto chars = pm1_characters(g, field);
    for (std::size_t k = 1; k < chars.size(); ++k)
        battery.push_back({"chi" + std::to_string(k), character_comodule(g, chars[k])});
    if (has_standard_rep(g)) battery.push_back({"std", standard_rep(g, field)});
    battery.push_back({"regular", regular_comodule(oG)});
    return battery;
}

std::string battery_version() { return "1"; }

}  // namespace tannakit
